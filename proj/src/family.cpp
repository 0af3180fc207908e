#include "linfty/family.hpp"

#include "linfty/errors.hpp"

namespace linfty {

void LinearFamily::add_term(const Monomial& input, const SymElement& value) {
    if (value.is_zero())
        return;
    for (const auto& [m, c] : value.terms()) {
        if (m.weight() != 1)
            throw MalformedInput("family value must have weight one");
        if (target_->degree_at_rank(m.ranks[0]) != linfty::degree(*source_, input) + degree_)
            throw MalformedInput("family term violates the degree contract");
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

void LinearFamily::add_word_term(const std::vector<int>& input_ranks, const SymElement& value) {
    auto norm = normalize_ranks(*source_, input_ranks);
    if (!norm || value.is_zero())
        return;
    SymElement v = value;
    if (norm->first < 0)
        v *= Scalar(-1);
    add_term(norm->second, v);
}

SymElement LinearFamily::apply(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end())
        return it->second;
    return SymElement(target_);
}

SymElement LinearFamily::apply(const SymElement& x) const {
    SymElement out(target_);
    for (const auto& [m, c] : x.terms()) {
        auto it = terms_.find(m);
        if (it != terms_.end()) {
            SymElement v = it->second;
            v *= c;
            out += v;
        }
    }
    return out;
}

SymElement LinearFamily::apply_elements(const std::vector<SymElement>& word) const {
    if (word.empty())
        throw MalformedInput("apply_elements: empty word");
    SymElement prod = word[0];
    for (size_t i = 1; i < word.size(); ++i)
        prod = odot(prod, word[i]);
    return apply(prod);
}

LinearFamily& LinearFamily::operator+=(const LinearFamily& o) {
    if (!source_ || o.is_zero())
        return !source_ ? (*this = o) : *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_ || !source_->same_as(*o.source_) || !target_->same_as(*o.target_))
        throw MalformedInput("family sum: shape mismatch");
    for (const auto& [m, v] : o.terms_)
        add_term(m, v);
    return *this;
}

LinearFamily& LinearFamily::operator*=(const Scalar& c) {
    if (linfty::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

bool LinearFamily::operator==(const LinearFamily& o) const {
    if (terms_.empty() && o.terms_.empty())
        return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

LinearFamily operator+(LinearFamily a, const LinearFamily& b) { return a += b; }
LinearFamily operator*(const Scalar& c, LinearFamily a) { return a *= c; }

Coderivation::Coderivation(LinearFamily q) : q_(std::move(q)) {
    if (!q_.source() || !q_.endo())
        throw MalformedInput("coderivation family must have source == target");
}

SymElement Coderivation::eval(const Monomial& m) const {
    SymElement out(space());
    // proper Sweedler terms q(x_(1)) . x_(2)
    for_each_split2(*space(), m, [&](int sign, const Monomial& b1, const Monomial& b2) {
        SymElement head = q_.apply(b1);
        if (head.is_zero())
            return;
        SymElement tail = odot(head, SymElement::single(space(), b2, 1));
        tail *= Scalar(sign);
        out += tail;
    });
    // the full block q(x)
    out += q_.apply(m);
    return out;
}

SymElement Coderivation::eval(const SymElement& x) const {
    SymElement out(space());
    for (const auto& [m, c] : x.terms()) {
        SymElement v = eval(m);
        v *= c;
        out += v;
    }
    return out;
}

Comorphism::Comorphism(LinearFamily f) : f_(std::move(f)) {
    if (f_.degree() != 0)
        throw MalformedInput("comorphism family must have degree zero");
}

SymElement Comorphism::eval(const Monomial& m) const {
    SymElement out(target());
    const int n = m.weight();
    Scalar factorial = 1;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        const Scalar coeff = Scalar(1) / factorial;
        for_each_split(*source(), m, k, [&](int sign, const std::vector<Monomial>& blocks) {
            SymElement prod;
            bool dead = false;
            for (const auto& b : blocks) {
                SymElement fb = f_.apply(b);
                if (fb.is_zero()) {
                    dead = true;
                    break;
                }
                prod = prod.space() ? odot(prod, fb) : fb;
            }
            if (dead || prod.is_zero())
                return;
            prod *= coeff * sign;
            out += prod;
        });
    }
    return out;
}

SymElement Comorphism::eval(const SymElement& x) const {
    SymElement out(target());
    for (const auto& [m, c] : x.terms()) {
        SymElement v = eval(m);
        v *= c;
        out += v;
    }
    return out;
}

Comorphism identity_comorphism(SpacePtr space) {
    LinearFamily f(space, space, 0);
    for (int r = 0; r < space->dim(); ++r)
        f.add_term(Monomial{{r}}, SymElement::basis(space, r));
    return Comorphism(std::move(f));
}

Comorphism compose(const Comorphism& second, const Comorphism& first, const Caps& caps) {
    if (!first.target()->same_as(*second.source()))
        throw MalformedInput("comorphism composition: space mismatch");
    LinearFamily h(first.source(), second.target(), 0);
    for_each_monomial(*first.source(), 1, caps.max_weight, [&](const Monomial& m) {
        SymElement w = second.family().apply(first.eval(m));
        if (!w.is_zero())
            h.add_term(m, w);
    });
    return Comorphism(std::move(h));
}

LinearFamily rn_bracket(const LinearFamily& f, const LinearFamily& g, const Caps& caps) {
    if (!f.endo() || !g.endo() || !f.source()->same_as(*g.source()))
        throw MalformedInput("rn_bracket: families must be endomorphism families on one space");
    const Coderivation F{f};
    const Coderivation G{g};
    const bool flip = (f.degree() & 1) && (g.degree() & 1);
    LinearFamily out(f.source(), f.source(), f.degree() + g.degree());
    const int needed =
        std::min(caps.max_weight, std::max(f.support_arity() + g.support_arity() - 1, 0));
    for_each_monomial(*f.source(), 1, needed, [&](const Monomial& m) {
        SymElement v = f.apply(G.eval(m));
        SymElement w = g.apply(F.eval(m));
        if (flip)
            v += w;
        else
            v -= w;
        if (!v.is_zero())
            out.add_term(m, v);
    });
    return out;
}

Coderivation commutator(const Coderivation& Q, const Coderivation& P, const Caps& caps) {
    return Coderivation(rn_bracket(Q.family(), P.family(), caps));
}

SymElement commutator_eval(const Coderivation& Q, const Coderivation& P, const Monomial& m) {
    SymElement out = Q.eval(P.eval(m));
    SymElement w = P.eval(Q.eval(m));
    if ((Q.degree() & 1) && (P.degree() & 1))
        out += w;
    else
        out -= w;
    return out;
}

bool square_zero(const Coderivation& Q, int max_weight, Monomial* witness, SymElement* value) {
    bool ok = true;
    for_each_monomial(*Q.space(), 1, max_weight, [&](const Monomial& m) {
        if (!ok)
            return;
        SymElement v = commutator_eval(Q, Q, m);
        if (!v.is_zero()) {
            ok = false;
            if (witness)
                *witness = m;
            if (value)
                *value = v;
        }
    });
    return ok;
}

}  // namespace linfty
