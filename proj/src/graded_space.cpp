#include "linfty/graded_space.hpp"

#include "linfty/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace linfty {

namespace {

std::pair<int, int> natural_range(const std::vector<BasisElement>& basis) {
    if (basis.empty())
        return {0, 0};
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& b : basis) {
        lo = std::min(lo, b.degree);
        hi = std::max(hi, b.degree);
    }
    return {lo, hi};
}

}  // namespace

GradedSpace::GradedSpace(std::vector<BasisElement> basis)
    : GradedSpace(std::move(basis), {0, 0}) {
    range_ = natural_range(basis_);
}

GradedSpace::GradedSpace(std::vector<BasisElement> basis, std::pair<int, int> declared_range)
    : basis_(std::move(basis)), range_(declared_range) {
    std::set<std::string> seen;
    for (const auto& b : basis_) {
        if (b.name.empty())
            throw MalformedInput("basis element with empty name");
        if (!seen.insert(b.name).second)
            throw MalformedInput("duplicate basis name '" + b.name + "'");
    }
    auto nat = natural_range(basis_);
    if (!basis_.empty() && (nat.first < range_.first || nat.second > range_.second)) {
        if (range_ != std::pair<int, int>{0, 0})
            throw MalformedInput("basis degree outside declared range");
        range_ = nat;
    }
    index_at_rank_.resize(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i)
        index_at_rank_[i] = static_cast<int>(i);
    std::sort(index_at_rank_.begin(), index_at_rank_.end(), [&](int a, int b) {
        const auto& x = basis_[static_cast<size_t>(a)];
        const auto& y = basis_[static_cast<size_t>(b)];
        if (x.degree != y.degree)
            return x.degree < y.degree;
        return x.name < y.name;
    });
    rank_of_.resize(basis_.size());
    for (size_t r = 0; r < index_at_rank_.size(); ++r)
        rank_of_[static_cast<size_t>(index_at_rank_[r])] = static_cast<int>(r);
}

SpacePtr GradedSpace::make(std::vector<BasisElement> basis) {
    return std::make_shared<const GradedSpace>(std::move(basis));
}

SpacePtr GradedSpace::make(std::vector<BasisElement> basis, std::pair<int, int> range) {
    return std::make_shared<const GradedSpace>(std::move(basis), range);
}

std::optional<int> GradedSpace::index_of(std::string_view name) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

SpacePtr GradedSpace::shift(int k) const {
    std::vector<BasisElement> shifted = basis_;
    for (auto& b : shifted)
        b.degree -= k;
    return make(std::move(shifted), {range_.first - k, range_.second - k});
}

SpacePtr GradedSpace::dual() const {
    std::vector<BasisElement> dualized = basis_;
    for (auto& b : dualized) {
        b.name += "*";
        b.degree = -b.degree;
    }
    return make(std::move(dualized), {-range_.second, -range_.first});
}

SumSpace direct_sum(SpacePtr left, SpacePtr right) {
    std::set<std::string> names;
    for (const auto& b : left->basis())
        names.insert(b.name);
    std::vector<BasisElement> all = left->basis();
    for (auto b : right->basis()) {
        while (names.count(b.name))
            b.name += "'";
        names.insert(b.name);
        all.push_back(std::move(b));
    }
    auto lo = std::min(left->degree_range().first, right->degree_range().first);
    auto hi = std::max(left->degree_range().second, right->degree_range().second);
    SumSpace s;
    s.left = std::move(left);
    s.right = std::move(right);
    s.sum = GradedSpace::make(std::move(all), {lo, hi});
    return s;
}

int SumSpace::rank_from_left(int left_rank) const {
    return sum->rank_of(from_left(left->index_at_rank(left_rank)));
}

int SumSpace::rank_from_right(int right_rank) const {
    return sum->rank_of(from_right(right->index_at_rank(right_rank)));
}

bool SumSpace::rank_is_left(int sum_rank) const {
    return is_left(sum->index_at_rank(sum_rank));
}

int SumSpace::rank_to_left(int sum_rank) const {
    return left->rank_of(to_left(sum->index_at_rank(sum_rank)));
}

int SumSpace::rank_to_right(int sum_rank) const {
    return right->rank_of(to_right(sum->index_at_rank(sum_rank)));
}

}  // namespace linfty
