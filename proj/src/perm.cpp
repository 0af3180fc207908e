#include "linfty/perm.hpp"

#include "linfty/errors.hpp"

#include <algorithm>
#include <numeric>

namespace linfty {

bool Permutation::valid() const {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= order() || seen[static_cast<size_t>(v)])
            return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    const int n = sigma.order();
    if (static_cast<int>(degrees.size()) != n)
        throw MalformedInput("koszul_sign: degree list length does not match permutation order");
    int sign = 1;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            if (sigma.map[static_cast<size_t>(k)] > sigma.map[static_cast<size_t>(l)]) {
                const int a = degrees[static_cast<size_t>(sigma.map[static_cast<size_t>(k)])];
                const int b = degrees[static_cast<size_t>(sigma.map[static_cast<size_t>(l)])];
                if ((a & 1) && (b & 1))
                    sign = -sign;
            }
    return sign;
}

int skew_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    const int n = sigma.order();
    if (static_cast<int>(degrees.size()) != n)
        throw MalformedInput("skew_koszul_sign: degree list length mismatch");
    int sign = 1;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            if (sigma.map[static_cast<size_t>(k)] > sigma.map[static_cast<size_t>(l)]) {
                const int a = degrees[static_cast<size_t>(sigma.map[static_cast<size_t>(k)])];
                const int b = degrees[static_cast<size_t>(sigma.map[static_cast<size_t>(l)])];
                if (!((a & 1) && (b & 1)))
                    sign = -sign;
            }
    return sign;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.order() != tau.order())
        throw MalformedInput("compose: order mismatch");
    Permutation out;
    out.map.resize(sigma.map.size());
    for (size_t i = 0; i < tau.map.size(); ++i)
        out.map[i] = sigma.map[static_cast<size_t>(tau.map[i])];
    return out;
}

namespace {

void visit_blocks(const std::vector<int>& sizes, size_t block, std::vector<int>& remaining,
                  std::vector<int>& acc, const std::function<void(const Permutation&)>& fn) {
    if (block == sizes.size()) {
        Permutation p;
        p.map = acc;
        p.unshuffle = true;
        fn(p);
        return;
    }
    const int k = sizes[block];
    const int m = static_cast<int>(remaining.size());
    // choose k of the remaining positions, in lexicographic order
    std::vector<int> choice(static_cast<size_t>(k));
    std::iota(choice.begin(), choice.end(), 0);
    while (true) {
        std::vector<int> rest;
        rest.reserve(remaining.size() - static_cast<size_t>(k));
        {
            size_t ci = 0;
            for (int i = 0; i < m; ++i) {
                if (ci < choice.size() && choice[ci] == i) {
                    acc.push_back(remaining[static_cast<size_t>(i)]);
                    ++ci;
                } else {
                    rest.push_back(remaining[static_cast<size_t>(i)]);
                }
            }
        }
        std::vector<int> saved = std::move(remaining);
        remaining = std::move(rest);
        visit_blocks(sizes, block + 1, remaining, acc, fn);
        remaining = std::move(saved);
        acc.resize(acc.size() - static_cast<size_t>(k));

        // next k-combination of {0..m-1}
        int i = k - 1;
        while (i >= 0 && choice[static_cast<size_t>(i)] == m - k + i)
            --i;
        if (i < 0)
            break;
        ++choice[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            choice[static_cast<size_t>(j)] = choice[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace

void for_each_unshuffle(const std::vector<int>& block_sizes,
                        const std::function<void(const Permutation&)>& fn) {
    if (block_sizes.empty())
        throw MalformedInput("unshuffles: need at least one block");
    int n = 0;
    for (int k : block_sizes) {
        if (k <= 0)
            throw MalformedInput("unshuffles: block sizes must be positive");
        n += k;
    }
    std::vector<int> remaining(static_cast<size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> acc;
    acc.reserve(static_cast<size_t>(n));
    visit_blocks(block_sizes, 0, remaining, acc, fn);
}

std::vector<Permutation> unshuffles(const std::vector<int>& block_sizes, int max_n) {
    int n = 0;
    for (int k : block_sizes)
        n += k;
    if (n > max_n)
        throw TruncationError("unshuffles: total order " + std::to_string(n) +
                              " exceeds arity cap " + std::to_string(max_n));
    std::vector<Permutation> out;
    for_each_unshuffle(block_sizes, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace linfty
