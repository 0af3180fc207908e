#pragma once

#include "linfty/graded_space.hpp"
#include "linfty/perm.hpp"
#include "linfty/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linfty {

struct Caps {
    int max_weight = 6;
    int max_arity = 6;
};

// A canonical word x_1 ... x_n in S(E): letters are canonical ranks of the
// space, sorted ascending, with no repeated odd-degree letter. Words that
// violate the odd-repeat rule are zero and are never stored.
struct Monomial {
    std::vector<int> ranks;

    int weight() const { return static_cast<int>(ranks.size()); }
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {
        if (ranks.size() != o.ranks.size())
            return ranks.size() < o.ranks.size();
        return ranks < o.ranks;
    }
};

int degree(const GradedSpace& space, const Monomial& m);
std::string to_string(const GradedSpace& space, const Monomial& m);

// Sorts a word given by ranks, accumulating the Koszul sign. Returns nothing
// when the word vanishes (repeated odd letter).
std::optional<std::pair<int, Monomial>> normalize_ranks(const GradedSpace& space,
                                                        std::vector<int> ranks);

// All canonical monomials of the exact weight, in canonical order.
std::vector<Monomial> monomials_of_weight(const GradedSpace& space, int weight);
void for_each_monomial(const GradedSpace& space, int min_weight, int max_weight,
                       const std::function<void(const Monomial&)>& fn);

// Finite linear combination of canonical monomials over one space.
class SymElement {
public:
    SymElement() = default;
    explicit SymElement(SpacePtr space) : space_(std::move(space)) {}

    static SymElement basis(SpacePtr space, int rank);
    static SymElement single(SpacePtr space, Monomial m, Scalar c);

    const SpacePtr& space() const { return space_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Scalar& c);
    // Adds the (possibly unsorted) word with coefficient c, folding the
    // normalization sign; zero words are dropped.
    void add_word(const std::vector<int>& ranks, const Scalar& c);

    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    SymElement& operator*=(const Scalar& c);
    SymElement operator-() const;
    bool operator==(const SymElement& o) const;

    // Restriction to words of the given weight.
    SymElement weight_part(int w) const;
    int max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }
    // Defined for homogeneous nonzero elements only.
    std::optional<int> homogeneous_degree() const;

    std::string str() const;

private:
    SpacePtr space_;
    std::map<Monomial, Scalar> terms_;
};

SymElement operator+(SymElement a, const SymElement& b);
SymElement operator-(SymElement a, const SymElement& b);
SymElement operator*(const Scalar& c, SymElement a);

// Graded symmetric product.
SymElement odot(const SymElement& a, const SymElement& b);
SymElement odot_power(const SymElement& a, int k);

// The checked public form of word canonicalization (weight cap enforced).
SymElement normalize_word(SpacePtr space, const std::vector<int>& indices, const Caps& caps);

// Sweedler splits of a canonical monomial. Two-block form enumerates the
// Sh(i, n-i) terms of the reduced coproduct; the k-block form enumerates the
// ordered splits appearing in Delta^{(k-1)}.
void for_each_split2(const GradedSpace& space, const Monomial& m,
                     const std::function<void(int sign, const Monomial&, const Monomial&)>& fn);
void for_each_split(const GradedSpace& space, const Monomial& m, int blocks,
                    const std::function<void(int sign, const std::vector<Monomial>&)>& fn);

// Formal sums of tensor words with a fixed number of slots.
class TensorElement {
public:
    TensorElement(SpacePtr space, int slots) : space_(std::move(space)), slots_(slots) {}

    int slots() const { return slots_; }
    const SpacePtr& space() const { return space_; }
    const std::map<std::vector<Monomial>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const std::vector<Monomial>& word, const Scalar& c);
    bool operator==(const TensorElement& o) const;
    std::string str() const;

private:
    SpacePtr space_;
    int slots_;
    std::map<std::vector<Monomial>, Scalar> terms_;
};

// Delta on monomials/elements (two slots; zero on weight one).
TensorElement coproduct(SpacePtr space, const Monomial& m);
TensorElement coproduct(const SymElement& x);

// Delta^{(n)}, an (n+1)-slot tensor, computed by iterating on a chosen slot.
TensorElement coproduct_iterated(const SymElement& x, int n);
// Applies Delta to one slot of a tensor (no sign; Delta has degree zero).
TensorElement expand_slot(const TensorElement& t, int slot);

}  // namespace linfty
