#pragma once

#include "linfty/sym.hpp"

#include <map>

namespace linfty {

// A finitely supported collection of multilinear maps S^k(source) -> target
// of one fixed total degree, stored by canonical input monomial. Values are
// weight-one elements of the target space.
class LinearFamily {
public:
    LinearFamily() = default;
    LinearFamily(SpacePtr source, SpacePtr target, int degree)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int degree() const { return degree_; }
    bool endo() const { return source_ && source_->same_as(*target_); }

    const std::map<Monomial, SymElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int support_arity() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

    // Inserts (adds) a term; validates the weight-one shape and the degree
    // contract |output| = |input| + degree.
    void add_term(const Monomial& input, const SymElement& value);
    void add_word_term(const std::vector<int>& input_ranks, const SymElement& value);

    SymElement apply(const Monomial& m) const;
    SymElement apply(const SymElement& x) const;
    // Multilinear evaluation on a word of weight-one elements.
    SymElement apply_elements(const std::vector<SymElement>& word) const;

    LinearFamily& operator+=(const LinearFamily& o);
    LinearFamily& operator*=(const Scalar& c);
    bool operator==(const LinearFamily& o) const;

private:
    SpacePtr source_;
    SpacePtr target_;
    int degree_ = 0;
    std::map<Monomial, SymElement> terms_;
};

LinearFamily operator+(LinearFamily a, const LinearFamily& b);
LinearFamily operator*(const Scalar& c, LinearFamily a);

// The coderivation of S(E) generated by a family with source == target:
// Q(x) = q(x_(1)) . x_(2) + q(x) in Sweedler form.
class Coderivation {
public:
    Coderivation() = default;
    explicit Coderivation(LinearFamily q);

    int degree() const { return q_.degree(); }
    const LinearFamily& family() const { return q_; }
    const SpacePtr& space() const { return q_.source(); }

    SymElement eval(const Monomial& m) const;
    SymElement eval(const SymElement& x) const;

private:
    LinearFamily q_;
};

// The coalgebra morphism generated by a degree-zero family:
// F(x) = sum_k 1/k! f(x_(1)) . ... . f(x_(k)).
class Comorphism {
public:
    Comorphism() = default;
    explicit Comorphism(LinearFamily f);

    const LinearFamily& family() const { return f_; }
    const SpacePtr& source() const { return f_.source(); }
    const SpacePtr& target() const { return f_.target(); }

    SymElement eval(const Monomial& m) const;
    SymElement eval(const SymElement& x) const;

private:
    LinearFamily f_;
};

// Identity of S(E) as a comorphism (family = projection onto E).
Comorphism identity_comorphism(SpacePtr space);
// Family of the composite second o first, materialized up to the weight cap.
Comorphism compose(const Comorphism& second, const Comorphism& first, const Caps& caps);

// [f,g]_RN(x) = f(G(x)) - (-1)^{|f||g|} g(F(x)) on Hom(S(E), E).
LinearFamily rn_bracket(const LinearFamily& f, const LinearFamily& g, const Caps& caps);

// Commutator of coderivations as a coderivation (family route).
Coderivation commutator(const Coderivation& Q, const Coderivation& P, const Caps& caps);
// Generic two-sided evaluation of [Q,P]_c on one monomial.
SymElement commutator_eval(const Coderivation& Q, const Coderivation& P, const Monomial& m);

// True when [Q,Q]_c vanishes on all monomials of weight <= max_weight;
// on failure reports the first offending monomial in canonical order.
bool square_zero(const Coderivation& Q, int max_weight, Monomial* witness = nullptr,
                 SymElement* value = nullptr);

}  // namespace linfty
