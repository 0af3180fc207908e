#pragma once

#include "linfty/family.hpp"
#include "linfty/verdict.hpp"

#include <optional>

namespace linfty {

// A Lie infinity-algebra presented by its degree +1 bracket family l = sum l_k.
// certified_weight records the bound up to which [M,M]_c = 0 was verified;
// downstream constructions cite that bound.
struct LieInftyStructure {
    SpacePtr space;
    LinearFamily brackets;
    int certified_weight = 0;

    Coderivation coderivation() const { return Coderivation(brackets); }
};

struct CheckFailure {
    Monomial witness;
    SymElement value;
    int weight = 0;
};

// Direct route: the generalized Jacobi identity
//   sum_{i+j=n+1} sum_{Sh(i,j-1)} eps l_j(l_i(...), ...) = 0
// evaluated on every basis monomial of weight <= n_max.
std::optional<CheckFailure> jacobi_defect(const LinearFamily& l, int n_max);
// Generic route: [M,M]_c = 0 on all monomials of weight <= n_max.
std::optional<CheckFailure> square_defect(const LinearFamily& l, int n_max);

Verdict check_jacobi(const LinearFamily& l, int n_max, bool generic_route = false);

// Certifies and tags the structure; throws Refused when the check fails.
LieInftyStructure certify_structure(LinearFamily l, int max_weight);

// Skew-symmetric bracket family: l'_k has degree 2-k, words obey the skew
// exchange rule (repeated even-degree letters vanish).
class SkewBrackets {
public:
    SkewBrackets() = default;
    explicit SkewBrackets(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space() const { return space_; }
    const std::map<Monomial, SymElement>& terms() const { return terms_; }

    void add_term(const Monomial& input, const SymElement& value);
    void add_word_term(const std::vector<int>& ranks, const SymElement& value);
    SymElement apply(const Monomial& m) const;
    // Evaluation on a (possibly unsorted) word, folding the skew sign.
    SymElement apply_word(const std::vector<int>& ranks) const;
    bool operator==(const SkewBrackets&) const = default;

private:
    SpacePtr space_;
    std::map<Monomial, SymElement> terms_;
};

std::optional<std::pair<int, Monomial>> skew_normalize_ranks(const GradedSpace& space,
                                                             std::vector<int> ranks);

// Decalage: skew brackets on E <-> symmetric degree +1 brackets on E[1],
// with the sign (-1)^{(k-1)|x_1|+...+|x_{k-1}|} taken in E[1] degrees.
LinearFamily decalage(const SkewBrackets& skew);
SkewBrackets decalage_inverse(const LinearFamily& l);

// Maurer-Cartan elements and twisting. z must be a weight-one element of
// degree zero; finite bracket support makes both sums finite.
bool is_maurer_cartan(const LinearFamily& l, const SymElement& z);
LinearFamily twist_brackets(const LinearFamily& l, const SymElement& z, const Caps& caps);

// Coder(S(V))[1] as a symmetric DGLA: boundary and bracket on coderivations.
//   d_{M}Q = -M.Q + (-1)^{deg Q} Q.M       (= -[M,Q]_c)
//   [[Q,P]] = (-1)^{deg Q} [Q,P]_c
// The bracket refuses compositions whose support arity cannot be represented
// within the weight cap.
Coderivation coder_boundary(const Coderivation& M, const Coderivation& Q, const Caps& caps);
Coderivation coder_bracket(const Coderivation& Q, const Coderivation& P, const Caps& caps);

// Pairing S^n(E*) x S^n(E) -> K induced by <a*, b> = delta with Koszul signs;
// alpha lives over dual_space, x over the base space.
Scalar pair_monomials(const GradedSpace& base, const GradedSpace& dual_space,
                      const Monomial& alpha, const Monomial& x);
Scalar pair_elements(const SymElement& omega, const SymElement& x);

// Cohomology differential d_* on S(E*), fixed convention
//   <d_* w, x> = (-1)^{|w|} <w, M_E(x)>.
// The pairing route materializes d_* w; the derivation route extends the
// dualized weight-one maps by the graded Leibniz rule (used as cross-check).
SymElement dual_differential(const LieInftyStructure& s, SpacePtr dual_space,
                             const SymElement& omega, const Caps& caps);
SymElement dual_differential_derivation(const LieInftyStructure& s, SpacePtr dual_space,
                                        const SymElement& omega, const Caps& caps);
bool is_cocycle(const LieInftyStructure& s, const SymElement& omega, const Caps& caps,
                std::string* witness = nullptr);

}  // namespace linfty
