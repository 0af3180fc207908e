#include "linfty/sym.hpp"

#include "linfty/errors.hpp"

#include <algorithm>
#include <sstream>

namespace linfty {

int degree(const GradedSpace& space, const Monomial& m) {
    int d = 0;
    for (int r : m.ranks)
        d += space.degree_at_rank(r);
    return d;
}

std::string to_string(const GradedSpace& space, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.ranks.size(); ++i) {
        if (i)
            out += "⊙";
        out += space.name_at_rank(m.ranks[i]);
    }
    return out;
}

std::optional<std::pair<int, Monomial>> normalize_ranks(const GradedSpace& space,
                                                        std::vector<int> ranks) {
    int sign = 1;
    // insertion sort, tracking the Koszul sign of each adjacent swap
    for (size_t i = 1; i < ranks.size(); ++i) {
        for (size_t j = i; j > 0 && ranks[j] < ranks[j - 1]; --j) {
            const int a = space.degree_at_rank(ranks[j]);
            const int b = space.degree_at_rank(ranks[j - 1]);
            if ((a & 1) && (b & 1))
                sign = -sign;
            std::swap(ranks[j], ranks[j - 1]);
        }
    }
    for (size_t i = 1; i < ranks.size(); ++i)
        if (ranks[i] == ranks[i - 1] && (space.degree_at_rank(ranks[i]) & 1))
            return std::nullopt;
    return std::make_pair(sign, Monomial{std::move(ranks)});
}

std::vector<Monomial> monomials_of_weight(const GradedSpace& space, int weight) {
    std::vector<Monomial> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            out.push_back(Monomial{cur});
            return;
        }
        for (int r = start; r < space.dim(); ++r) {
            if (!cur.empty() && cur.back() == r && (space.degree_at_rank(r) & 1))
                continue;
            cur.push_back(r);
            rec(r, left - 1);
            cur.pop_back();
        }
    };
    if (weight >= 0)
        rec(0, weight);
    return out;
}

void for_each_monomial(const GradedSpace& space, int min_weight, int max_weight,
                       const std::function<void(const Monomial&)>& fn) {
    for (int w = min_weight; w <= max_weight; ++w)
        for (const auto& m : monomials_of_weight(space, w))
            fn(m);
}

SymElement SymElement::basis(SpacePtr space, int rank) {
    SymElement e(std::move(space));
    e.add_term(Monomial{{rank}}, 1);
    return e;
}

SymElement SymElement::single(SpacePtr space, Monomial m, Scalar c) {
    SymElement e(std::move(space));
    e.add_term(std::move(m), std::move(c));
    return e;
}

void SymElement::add_term(const Monomial& m, const Scalar& c) {
    if (linfty::is_zero(c))
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (linfty::is_zero(it->second))
            terms_.erase(it);
    }
}

void SymElement::add_word(const std::vector<int>& ranks, const Scalar& c) {
    if (linfty::is_zero(c))
        return;
    auto norm = normalize_ranks(*space_, ranks);
    if (!norm)
        return;
    add_term(norm->second, norm->first > 0 ? c : -c);
}

SymElement& SymElement::operator+=(const SymElement& o) {
    if (!space_)
        space_ = o.space_;
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
    if (!space_)
        space_ = o.space_;
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SymElement& SymElement::operator*=(const Scalar& c) {
    if (linfty::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

SymElement SymElement::operator-() const {
    SymElement out = *this;
    for (auto& [m, v] : out.terms_)
        v = -v;
    return out;
}

bool SymElement::operator==(const SymElement& o) const { return terms_ == o.terms_; }

SymElement SymElement::weight_part(int w) const {
    SymElement out(space_);
    for (const auto& [m, c] : terms_)
        if (m.weight() == w)
            out.add_term(m, c);
    return out;
}

std::optional<int> SymElement::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = degree(*space_, m);
        if (d && *d != dm)
            return std::nullopt;
        d = dm;
    }
    return d;
}

std::string SymElement::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += scalar_to_string(c);
        out += "·";
        out += to_string(*space_, m);
    }
    return out;
}

SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
SymElement operator*(const Scalar& c, SymElement a) { return a *= c; }

SymElement odot(const SymElement& a, const SymElement& b) {
    SymElement out(a.space() ? a.space() : b.space());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> word = ma.ranks;
            word.insert(word.end(), mb.ranks.begin(), mb.ranks.end());
            out.add_word(word, ca * cb);
        }
    return out;
}

SymElement odot_power(const SymElement& a, int k) {
    if (k <= 0)
        throw MalformedInput("odot_power: exponent must be positive");
    SymElement out = a;
    for (int i = 1; i < k; ++i)
        out = odot(out, a);
    return out;
}

SymElement normalize_word(SpacePtr space, const std::vector<int>& indices, const Caps& caps) {
    if (indices.empty())
        throw MalformedInput("normalize_word: empty word");
    if (static_cast<int>(indices.size()) > caps.max_weight)
        throw TruncationError("normalize_word: weight " + std::to_string(indices.size()) +
                              " exceeds cap " + std::to_string(caps.max_weight));
    std::vector<int> ranks;
    ranks.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= space->dim())
            throw MalformedInput("normalize_word: basis index out of range");
        ranks.push_back(space->rank_of(i));
    }
    SymElement out(space);
    out.add_word(ranks, 1);
    return out;
}

void for_each_split2(const GradedSpace& space, const Monomial& m,
                     const std::function<void(int, const Monomial&, const Monomial&)>& fn) {
    const int n = m.weight();
    std::vector<int> degs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        degs[static_cast<size_t>(i)] = space.degree_at_rank(m.ranks[static_cast<size_t>(i)]);
    for (int i = 1; i <= n - 1; ++i) {
        for_each_unshuffle({i, n - i}, [&](const Permutation& p) {
            const int sign = koszul_sign(p, degs);
            Monomial b1, b2;
            b1.ranks.reserve(static_cast<size_t>(i));
            b2.ranks.reserve(static_cast<size_t>(n - i));
            for (int k = 0; k < i; ++k)
                b1.ranks.push_back(m.ranks[static_cast<size_t>(p.map[static_cast<size_t>(k)])]);
            for (int k = i; k < n; ++k)
                b2.ranks.push_back(m.ranks[static_cast<size_t>(p.map[static_cast<size_t>(k)])]);
            fn(sign, b1, b2);
        });
    }
}

void for_each_split(const GradedSpace& space, const Monomial& m, int blocks,
                    const std::function<void(int, const std::vector<Monomial>&)>& fn) {
    const int n = m.weight();
    if (blocks < 1 || blocks > n)
        return;
    std::vector<int> degs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        degs[static_cast<size_t>(i)] = space.degree_at_rank(m.ranks[static_cast<size_t>(i)]);
    // enumerate compositions n = k_1 + ... + k_blocks with k_i >= 1
    std::vector<int> sizes(static_cast<size_t>(blocks), 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == blocks - 1) {
            sizes[static_cast<size_t>(pos)] = left;
            for_each_unshuffle(sizes, [&](const Permutation& p) {
                const int sign = koszul_sign(p, degs);
                std::vector<Monomial> bs(static_cast<size_t>(blocks));
                int at = 0;
                for (int b = 0; b < blocks; ++b) {
                    auto& mono = bs[static_cast<size_t>(b)];
                    mono.ranks.reserve(static_cast<size_t>(sizes[static_cast<size_t>(b)]));
                    for (int k = 0; k < sizes[static_cast<size_t>(b)]; ++k, ++at)
                        mono.ranks.push_back(
                            m.ranks[static_cast<size_t>(p.map[static_cast<size_t>(at)])]);
                }
                fn(sign, bs);
            });
            return;
        }
        for (int k = 1; k <= left - (blocks - 1 - pos); ++k) {
            sizes[static_cast<size_t>(pos)] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, n);
}

void TensorElement::add_term(const std::vector<Monomial>& word, const Scalar& c) {
    if (linfty::is_zero(c) || static_cast<int>(word.size()) != slots_)
        return;
    auto [it, fresh] = terms_.try_emplace(word, c);
    if (!fresh) {
        it->second += c;
        if (linfty::is_zero(it->second))
            terms_.erase(it);
    }
}

bool TensorElement::operator==(const TensorElement& o) const {
    return slots_ == o.slots_ && terms_ == o.terms_;
}

std::string TensorElement::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        out += scalar_to_string(c);
        out += "·";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += "⊗";
            out += "(" + to_string(*space_, w[i]) + ")";
        }
    }
    return out;
}

TensorElement coproduct(SpacePtr space, const Monomial& m) {
    TensorElement out(space, 2);
    for_each_split2(*space, m, [&](int sign, const Monomial& a, const Monomial& b) {
        out.add_term({a, b}, sign);
    });
    return out;
}

TensorElement coproduct(const SymElement& x) {
    TensorElement out(x.space(), 2);
    for (const auto& [m, c] : x.terms())
        for_each_split2(*x.space(), m, [&](int sign, const Monomial& a, const Monomial& b) {
            out.add_term({a, b}, sign * c);
        });
    return out;
}

TensorElement expand_slot(const TensorElement& t, int slot) {
    TensorElement out(t.space(), t.slots() + 1);
    for (const auto& [w, c] : t.terms()) {
        for_each_split2(*t.space(), w[static_cast<size_t>(slot)],
                        [&](int sign, const Monomial& a, const Monomial& b) {
                            std::vector<Monomial> nw;
                            nw.reserve(w.size() + 1);
                            for (int i = 0; i < slot; ++i)
                                nw.push_back(w[static_cast<size_t>(i)]);
                            nw.push_back(a);
                            nw.push_back(b);
                            for (size_t i = static_cast<size_t>(slot) + 1; i < w.size(); ++i)
                                nw.push_back(w[i]);
                            out.add_term(nw, sign * c);
                        });
    }
    return out;
}

TensorElement coproduct_iterated(const SymElement& x, int n) {
    if (n < 1)
        throw MalformedInput("coproduct_iterated: need n >= 1");
    TensorElement t = coproduct(x);
    for (int i = 2; i <= n; ++i)
        t = expand_slot(t, t.slots() - 1);
    return t;
}

}  // namespace linfty
