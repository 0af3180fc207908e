#include "linfty/structure.hpp"

#include "linfty/errors.hpp"

#include <algorithm>

namespace linfty {

namespace {

void require_bracket_shape(const LinearFamily& l) {
    if (!l.source() || !l.endo())
        throw MalformedInput("bracket family must be an endomorphism family");
    if (l.degree() != 1)
        throw MalformedInput("bracket family must have degree +1");
}

SymElement reinterpret_weight1(const SymElement& v, const SpacePtr& space) {
    SymElement out(space);
    for (const auto& [m, c] : v.terms())
        out.add_term(m, c);
    return out;
}

}  // namespace

std::optional<CheckFailure> jacobi_defect(const LinearFamily& l, int n_max) {
    require_bracket_shape(l);
    const auto& space = *l.source();
    std::optional<CheckFailure> failure;
    for (int n = 1; n <= n_max && !failure; ++n) {
        for (const auto& m : monomials_of_weight(space, n)) {
            SymElement total = l.apply(l.apply(m));
            for_each_split2(space, m, [&](int sign, const Monomial& b1, const Monomial& b2) {
                SymElement inner = l.apply(b1);
                if (inner.is_zero())
                    return;
                SymElement term =
                    l.apply(odot(inner, SymElement::single(l.source(), b2, 1)));
                term *= Scalar(sign);
                total += term;
            });
            if (!total.is_zero()) {
                failure = CheckFailure{m, total, n};
                break;
            }
        }
    }
    return failure;
}

std::optional<CheckFailure> square_defect(const LinearFamily& l, int n_max) {
    require_bracket_shape(l);
    const Coderivation M{l};
    std::optional<CheckFailure> failure;
    for (int n = 1; n <= n_max && !failure; ++n) {
        for (const auto& m : monomials_of_weight(*l.source(), n)) {
            SymElement v = commutator_eval(M, M, m);
            if (!v.is_zero()) {
                failure = CheckFailure{m, v, n};
                break;
            }
        }
    }
    return failure;
}

Verdict check_jacobi(const LinearFamily& l, int n_max, bool generic_route) {
    Verdict v;
    v.check = generic_route ? "check-jacobi/square" : "check-jacobi";
    v.max_weight = n_max;
    v.max_arity = l.support_arity();
    auto defect = generic_route ? square_defect(l, n_max) : jacobi_defect(l, n_max);
    if (defect)
        v.fail(to_string(*l.source(), defect->witness), defect->value.str(), "0");
    return v;
}

LieInftyStructure certify_structure(LinearFamily l, int max_weight) {
    if (auto defect = jacobi_defect(l, max_weight))
        throw Refused("structure fails the generalized Jacobi identity at " +
                      to_string(*l.source(), defect->witness));
    LieInftyStructure s;
    s.space = l.source();
    s.brackets = std::move(l);
    s.certified_weight = max_weight;
    return s;
}

std::optional<std::pair<int, Monomial>> skew_normalize_ranks(const GradedSpace& space,
                                                             std::vector<int> ranks) {
    int sign = 1;
    for (size_t i = 1; i < ranks.size(); ++i) {
        for (size_t j = i; j > 0 && ranks[j] < ranks[j - 1]; --j) {
            const int a = space.degree_at_rank(ranks[j]);
            const int b = space.degree_at_rank(ranks[j - 1]);
            if (!((a & 1) && (b & 1)))
                sign = -sign;
            std::swap(ranks[j], ranks[j - 1]);
        }
    }
    for (size_t i = 1; i < ranks.size(); ++i)
        if (ranks[i] == ranks[i - 1] && !(space.degree_at_rank(ranks[i]) & 1))
            return std::nullopt;
    return std::make_pair(sign, Monomial{std::move(ranks)});
}

void SkewBrackets::add_term(const Monomial& input, const SymElement& value) {
    if (value.is_zero())
        return;
    const int k = input.weight();
    for (const auto& [m, c] : value.terms()) {
        if (m.weight() != 1)
            throw MalformedInput("skew bracket value must have weight one");
        if (space_->degree_at_rank(m.ranks[0]) != degree(*space_, input) + (2 - k))
            throw MalformedInput("skew bracket term violates the degree contract");
    }
    auto it = terms_.find(input);
    if (it == terms_.end()) {
        terms_.emplace(input, value);
    } else {
        it->second += value;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void SkewBrackets::add_word_term(const std::vector<int>& ranks, const SymElement& value) {
    auto norm = skew_normalize_ranks(*space_, ranks);
    if (!norm || value.is_zero())
        return;
    SymElement v = value;
    if (norm->first < 0)
        v *= Scalar(-1);
    add_term(norm->second, v);
}

SymElement SkewBrackets::apply(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end())
        return it->second;
    return SymElement(space_);
}

SymElement SkewBrackets::apply_word(const std::vector<int>& ranks) const {
    auto norm = skew_normalize_ranks(*space_, ranks);
    if (!norm)
        return SymElement(space_);
    SymElement v = apply(norm->second);
    if (norm->first < 0)
        v *= Scalar(-1);
    return v;
}

namespace {

int decalage_sign(const GradedSpace& shifted, const Monomial& m) {
    // (-1)^{(k-1)|x_1| + (k-2)|x_2| + ... + |x_{k-1}|} in shifted degrees
    const int k = m.weight();
    long exponent = 0;
    for (int j = 0; j < k - 1; ++j)
        exponent += static_cast<long>(k - 1 - j) *
                    shifted.degree_at_rank(m.ranks[static_cast<size_t>(j)]);
    return (exponent % 2 == 0) ? 1 : -1;
}

}  // namespace

LinearFamily decalage(const SkewBrackets& skew) {
    SpacePtr shifted = skew.space()->shift(1);
    LinearFamily l(shifted, shifted, 1);
    for (const auto& [m, value] : skew.terms()) {
        // shifting all degrees by one preserves the (degree, name) rank
        // order, so the skew-canonical word is symmetric-canonical in E[1]
        SymElement v = reinterpret_weight1(value, shifted);
        v *= Scalar(decalage_sign(*shifted, m));
        l.add_term(m, v);
    }
    return l;
}

SkewBrackets decalage_inverse(const LinearFamily& l) {
    require_bracket_shape(l);
    SkewBrackets skew(l.source()->shift(-1));
    for (const auto& [m, value] : l.terms()) {
        SymElement v = reinterpret_weight1(value, skew.space());
        v *= Scalar(decalage_sign(*l.source(), m));
        skew.add_term(m, v);
    }
    return skew;
}

bool is_maurer_cartan(const LinearFamily& l, const SymElement& z) {
    require_bracket_shape(l);
    if (!z.is_zero()) {
        if (z.max_weight() != 1)
            throw MalformedInput("Maurer-Cartan candidate must have weight one");
        if (z.homogeneous_degree() != 0)
            throw MalformedInput("Maurer-Cartan candidate must have degree zero");
    }
    SymElement total(l.source());
    Scalar factorial = 1;
    SymElement power;
    for (int k = 1; k <= l.support_arity(); ++k) {
        factorial *= k;
        power = (k == 1) ? z : odot(power, z);
        if (power.is_zero())
            break;
        SymElement term = l.apply(power);
        term *= Scalar(1) / factorial;
        total += term;
    }
    return total.is_zero();
}

LinearFamily twist_brackets(const LinearFamily& l, const SymElement& z, const Caps& caps) {
    require_bracket_shape(l);
    LinearFamily out(l.source(), l.target(), 1);
    const int support = l.support_arity();
    for_each_monomial(*l.source(), 1, std::min(caps.max_weight, support),
                      [&](const Monomial& m) {
                          SymElement val = l.apply(m);
                          SymElement me = SymElement::single(l.source(), m, 1);
                          Scalar factorial = 1;
                          SymElement power;
                          for (int i = 1; m.weight() + i <= support; ++i) {
                              factorial *= i;
                              power = (i == 1) ? z : odot(power, z);
                              if (power.is_zero())
                                  break;
                              SymElement term = l.apply(odot(power, me));
                              term *= Scalar(1) / factorial;
                              val += term;
                          }
                          if (!val.is_zero())
                              out.add_term(m, val);
                      });
    return out;
}

Coderivation coder_boundary(const Coderivation& M, const Coderivation& Q, const Caps& caps) {
    if (M.family().support_arity() + Q.family().support_arity() - 1 > caps.max_weight)
        throw TruncationError("coder_boundary: composition support exceeds the weight cap");
    LinearFamily f = rn_bracket(M.family(), Q.family(), caps);
    f *= Scalar(-1);
    return Coderivation(std::move(f));
}

Coderivation coder_bracket(const Coderivation& Q, const Coderivation& P, const Caps& caps) {
    if (Q.family().support_arity() + P.family().support_arity() - 1 > caps.max_weight)
        throw TruncationError("coder_bracket: composition support exceeds the weight cap");
    LinearFamily f = rn_bracket(Q.family(), P.family(), caps);
    if (Q.degree() & 1)
        f *= Scalar(-1);
    return Coderivation(std::move(f));
}

Scalar pair_monomials(const GradedSpace& base, const GradedSpace& dual_space,
                      const Monomial& alpha, const Monomial& x) {
    const int n = alpha.weight();
    if (n != x.weight())
        return 0;
    std::vector<int> ai(static_cast<size_t>(n)), xi(static_cast<size_t>(n));
    std::vector<int> da(static_cast<size_t>(n)), dx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        ai[static_cast<size_t>(i)] = dual_space.index_at_rank(alpha.ranks[static_cast<size_t>(i)]);
        da[static_cast<size_t>(i)] = dual_space.degree_at_rank(alpha.ranks[static_cast<size_t>(i)]);
        xi[static_cast<size_t>(i)] = base.index_at_rank(x.ranks[static_cast<size_t>(i)]);
        dx[static_cast<size_t>(i)] = base.degree_at_rank(x.ranks[static_cast<size_t>(i)]);
    }
    Scalar total = 0;
    std::vector<int> match(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            Permutation p;
            p.map = match;
            int sign = koszul_sign(p, dx);
            // Koszul crossings of the alpha's over the permuted x word
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if ((da[static_cast<size_t>(b)] & 1) &&
                        (dx[static_cast<size_t>(match[static_cast<size_t>(a)])] & 1))
                        sign = -sign;
            total += sign;
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<size_t>(j)] ||
                ai[static_cast<size_t>(i)] != xi[static_cast<size_t>(j)])
                continue;
            used[static_cast<size_t>(j)] = 1;
            match[static_cast<size_t>(i)] = j;
            rec(i + 1);
            used[static_cast<size_t>(j)] = 0;
        }
    };
    rec(0);
    return total;
}

Scalar pair_elements(const SymElement& omega, const SymElement& x) {
    if (!omega.space() || !x.space())
        return 0;
    const GradedSpace& dual_space = *omega.space();
    const GradedSpace& base = *x.space();
    Scalar total = 0;
    for (const auto& [ma, ca] : omega.terms())
        for (const auto& [mx, cx] : x.terms()) {
            if (ma.weight() != mx.weight())
                continue;
            Scalar p = pair_monomials(base, dual_space, ma, mx);
            if (!is_zero(p))
                total += ca * cx * p;
        }
    return total;
}

namespace {

Monomial dual_monomial(const GradedSpace& base, const GradedSpace& dual_space, const Monomial& x) {
    std::vector<int> ranks;
    ranks.reserve(x.ranks.size());
    for (int r : x.ranks)
        ranks.push_back(dual_space.rank_of(base.index_at_rank(r)));
    std::sort(ranks.begin(), ranks.end());
    return Monomial{std::move(ranks)};
}

// Splits an element into degree-homogeneous parts.
std::map<int, SymElement> by_degree(const SymElement& e) {
    std::map<int, SymElement> parts;
    for (const auto& [m, c] : e.terms()) {
        auto [it, fresh] = parts.try_emplace(degree(*e.space(), m), SymElement(e.space()));
        it->second.add_term(m, c);
    }
    return parts;
}

}  // namespace

SymElement dual_differential(const LieInftyStructure& s, SpacePtr dual_space,
                             const SymElement& omega, const Caps& caps) {
    const Coderivation M = s.coderivation();
    SymElement out(dual_space);
    auto parts = by_degree(omega);
    for_each_monomial(*s.space, 1, caps.max_weight, [&](const Monomial& x) {
        SymElement mx = M.eval(x);
        if (mx.is_zero())
            return;
        Scalar c = 0;
        for (const auto& [deg, part] : parts) {
            Scalar v = pair_elements(part, mx);
            if (!is_zero(v))
                c += ((deg & 1) ? Scalar(-1) : Scalar(1)) * v;
        }
        if (is_zero(c))
            return;
        Monomial am = dual_monomial(*s.space, *dual_space, x);
        Scalar g = pair_monomials(*s.space, *dual_space, am,
                                  x);  // diagonal Gram entry; never zero in char 0
        out.add_term(am, c / g);
    });
    return out;
}

SymElement dual_differential_derivation(const LieInftyStructure& s, SpacePtr dual_space,
                                        const SymElement& omega, const Caps& caps) {
    // materialize d_* on weight-one covectors, then extend by the graded
    // Leibniz rule d(a.b) = d(a).b + (-1)^{|a|} a.d(b)
    std::vector<SymElement> d1;
    d1.reserve(static_cast<size_t>(dual_space->dim()));
    for (int r = 0; r < dual_space->dim(); ++r)
        d1.push_back(dual_differential(s, dual_space, SymElement::basis(dual_space, r), caps));
    SymElement out(dual_space);
    for (const auto& [m, c] : omega.terms()) {
        int prefix = 0;
        for (size_t i = 0; i < m.ranks.size(); ++i) {
            const int r = m.ranks[i];
            SymElement piece = d1[static_cast<size_t>(r)];
            if (!piece.is_zero()) {
                for (size_t j = i; j-- > 0;)
                    piece = odot(SymElement::basis(dual_space, m.ranks[j]), piece);
                for (size_t j = i + 1; j < m.ranks.size(); ++j)
                    piece = odot(piece, SymElement::basis(dual_space, m.ranks[j]));
                piece *= c * ((prefix & 1) ? Scalar(-1) : Scalar(1));
                out += piece;
            }
            prefix += dual_space->degree_at_rank(r);
        }
    }
    return out;
}

bool is_cocycle(const LieInftyStructure& s, const SymElement& omega, const Caps& caps,
                std::string* witness) {
    const Coderivation M = s.coderivation();
    bool ok = true;
    for_each_monomial(*s.space, 1, caps.max_weight, [&](const Monomial& x) {
        if (!ok)
            return;
        SymElement mx = M.eval(x);
        if (mx.is_zero())
            return;
        if (!is_zero(pair_elements(omega, mx))) {
            ok = false;
            if (witness)
                *witness = to_string(*s.space, x);
        }
    });
    return ok;
}

}  // namespace linfty
