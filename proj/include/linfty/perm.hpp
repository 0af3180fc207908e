#pragma once

#include <functional>
#include <vector>

namespace linfty {

// A permutation sigma of {1..n}, stored 0-based: perm[k] = sigma(k+1)-1.
// Applied to a word (x_1,...,x_n) it yields (x_{sigma(1)},...,x_{sigma(n)}).
struct Permutation {
    std::vector<int> map;
    bool unshuffle = false;  // set by the enumerator

    int order() const { return static_cast<int>(map.size()); }
    bool valid() const;
};

// Koszul sign eps(sigma) with x_{sigma(1)} ... x_{sigma(n)} =
// eps(sigma) x_1 ... x_n: product over transposed pairs weighted by the
// degrees of the letters involved. degrees[i] is the degree of x_{i+1}.
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// Skew analogue: each transposed pair (a,b) contributes -(-1)^{|a||b|}.
int skew_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

// All (k_1,...,k_j)-unshuffles: permutations increasing within each
// consecutive block, enumerated with the first block's image set in
// lexicographic order, then recursively for later blocks. The order is part
// of the interface contract. n = sum k_i must not exceed max_n.
std::vector<Permutation> unshuffles(const std::vector<int>& block_sizes, int max_n = 6);

// Visitation form used by the hot paths; same order as unshuffles().
void for_each_unshuffle(const std::vector<int>& block_sizes,
                        const std::function<void(const Permutation&)>& fn);

}  // namespace linfty
