#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linfty {

struct BasisElement {
    std::string name;
    int degree = 0;
    bool operator==(const BasisElement&) const = default;
};

class GradedSpace;
using SpacePtr = std::shared_ptr<const GradedSpace>;

// A finite graded vector space given by an ordered list of named basis
// elements with integer degrees. The declared basis order is kept for i/o;
// the canonical order used by monomials sorts by (degree, name) and is
// exposed through ranks.
class GradedSpace {
public:
    GradedSpace(std::vector<BasisElement> basis, std::pair<int, int> declared_range);
    explicit GradedSpace(std::vector<BasisElement> basis);

    static SpacePtr make(std::vector<BasisElement> basis);
    static SpacePtr make(std::vector<BasisElement> basis, std::pair<int, int> declared_range);

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& at(int index) const { return basis_[static_cast<size_t>(index)]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::pair<int, int> degree_range() const { return range_; }

    std::optional<int> index_of(std::string_view name) const;

    // Canonical (degree, name) order. rank_of(i) is the position of basis
    // element i in that order; index_at_rank inverts it.
    int rank_of(int index) const { return rank_of_[static_cast<size_t>(index)]; }
    int index_at_rank(int rank) const { return index_at_rank_[static_cast<size_t>(rank)]; }
    int degree_at_rank(int rank) const { return at(index_at_rank(rank)).degree; }
    const std::string& name_at_rank(int rank) const { return at(index_at_rank(rank)).name; }

    bool same_as(const GradedSpace& other) const { return basis_ == other.basis_; }

    // E[k]: a degree-d element of E sits in degree d-k of E[k].
    SpacePtr shift(int k) const;
    // (E*)_i = (E_{-i})*; basis element i of the dual pairs with basis
    // element i of the original space and is named with a trailing '*'.
    SpacePtr dual() const;

private:
    std::vector<BasisElement> basis_;
    std::pair<int, int> range_;
    std::vector<int> rank_of_;
    std::vector<int> index_at_rank_;
};

struct SumSpace;

// E(+)V with the concatenated basis, all E-basis then all V-basis. On a name
// collision the right-hand names get primes appended until unique.
SumSpace direct_sum(SpacePtr left, SpacePtr right);

struct SumSpace {
    SpacePtr left;
    SpacePtr right;
    SpacePtr sum;

    int left_dim() const { return left->dim(); }
    bool is_left(int sum_index) const { return sum_index < left->dim(); }
    int to_left(int sum_index) const { return sum_index; }
    int to_right(int sum_index) const { return sum_index - left->dim(); }
    int from_left(int left_index) const { return left_index; }
    int from_right(int right_index) const { return right_index + left->dim(); }

    // Same maps expressed on canonical ranks.
    int rank_from_left(int left_rank) const;
    int rank_from_right(int right_rank) const;
    bool rank_is_left(int sum_rank) const;
    int rank_to_left(int sum_rank) const;
    int rank_to_right(int sum_rank) const;
};

}  // namespace linfty
