#include "linfty/ooperator.hpp"

#include "linfty/errors.hpp"

#include <algorithm>

namespace linfty {

namespace {

void require_candidate_shape(const LinearFamily& t, const Action& a) {
    if (t.degree() != 0)
        throw MalformedInput("O-operator candidate must have degree zero");
    if (!t.source()->same_as(*a.ev.right) || !t.target()->same_as(*a.ev.left))
        throw MalformedInput("O-operator candidate must map S(V) to E");
}

}  // namespace

LinearFamily phi_T_family(const Action& a, const Comorphism& T, const Caps& caps) {
    const SpacePtr V = a.ev.right;
    LinearFamily q(V, V, 1);
    for_each_monomial(*V, 2, caps.max_weight, [&](const Monomial& v) {
        SymElement val(V);
        for_each_split2(*V, v, [&](int sign, const Monomial& b1, const Monomial& b2) {
            SymElement tx = T.eval(b1);
            if (tx.is_zero())
                return;
            SymElement arg = odot(embed_left(a.ev, tx),
                                  embed_right(a.ev, SymElement::single(V, b2, 1)));
            SymElement w = restrict_right(a.ev, a.phi.apply(arg));
            w *= Scalar(sign);
            val += w;
        });
        if (!val.is_zero())
            q.add_term(v, val);
    });
    return q;
}

SymElement phi_T_direct(const Action& a, const Comorphism& T, const Monomial& v,
                        const Caps& caps) {
    const SpacePtr V = a.ev.right;
    SymElement out(V);
    if (v.weight() < 2)
        return out;
    for_each_split2(*V, v, [&](int sign, const Monomial& b1, const Monomial& b2) {
        SymElement tx = T.eval(b1);
        if (tx.is_zero())
            return;
        LinearFamily slice = action_slice_family(a, tx, caps);
        SymElement w = Coderivation(slice).eval(b2);
        w *= Scalar(sign);
        out += w;
    });
    return out;
}

Verdict check_ooperator(const LinearFamily& t, const Action& a, const LieInftyStructure& E,
                        const Caps& caps) {
    require_candidate_shape(t, a);
    if (!E.space->same_as(*a.ev.left))
        throw MalformedInput("check_ooperator: structure space mismatch");
    Verdict v;
    v.check = "check-ooperator";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const Comorphism T{t};
    const Coderivation Me = E.coderivation();
    const Coderivation Mv{a.m};
    const Coderivation PhiT{phi_T_family(a, T, caps)};
    bool item_i = true;
    std::string item_i_witness;
    for_each_monomial(*a.ev.right, 1, caps.max_weight, [&](const Monomial& vm) {
        SymElement lhs = Me.eval(T.eval(vm));
        SymElement rhs = T.eval(PhiT.eval(vm) + Mv.eval(vm));
        if (!(lhs == rhs)) {
            if (vm.weight() == 1 && item_i) {
                item_i = false;
                item_i_witness = to_string(*a.ev.right, vm);
            }
            v.fail(to_string(*a.ev.right, vm), lhs.str(), rhs.str());
        }
    });
    v.note("item-i", item_i ? "pass" : "fail at " + item_i_witness);
    return v;
}

Verdict check_rota_baxter(const LinearFamily& t, const LieInftyStructure& s, const Caps& caps) {
    Action adj = adjoint_action(s);
    Verdict v = check_ooperator(t, adj, s, caps);
    v.check = "check-rota-baxter";
    return v;
}

InducedStructure induced_structure(const LinearFamily& t, const Action& a,
                                   const LieInftyStructure& E, const Caps& caps) {
    Verdict pre = check_ooperator(t, a, E, caps);
    if (!pre.pass)
        throw Refused("induced_structure: candidate is not an O-operator (witness " +
                      pre.witness + ")");
    const Comorphism T{t};
    LinearFamily mVT = phi_T_family(a, T, caps);
    mVT += a.m;
    InducedStructure out;
    out.structure = certify_structure(std::move(mVT), caps.max_weight);
    out.morphism =
        check_linfty_morphism(t, out.structure, E, caps, Route::Fast);
    out.morphism.check = "induced-structure/morphism";
    return out;
}

LinearFamily induced_brackets_explicit(const LinearFamily& t, const Action& a,
                                       const Caps& caps) {
    const SpacePtr V = a.ev.right;
    LinearFamily out(V, V, 1);
    for_each_monomial(*V, 1, caps.max_weight, [&](const Monomial& v) {
        SymElement val = a.m.apply(v);
        const int n = v.weight();
        // blocks b_1..b_i feed t, the last block feeds the V-slot of Phi
        for (int i = 1; i <= n - 1; ++i) {
            Scalar ifact = 1;
            for (int q = 2; q <= i; ++q)
                ifact *= q;
            for_each_split(*V, v, i + 1, [&](int sign, const std::vector<Monomial>& blocks) {
                SymElement prod;
                bool dead = false;
                for (int b = 0; b < i; ++b) {
                    SymElement tb = t.apply(blocks[static_cast<size_t>(b)]);
                    if (tb.is_zero()) {
                        dead = true;
                        break;
                    }
                    prod = prod.space() ? odot(prod, tb) : tb;
                }
                if (dead || prod.is_zero())
                    return;
                SymElement arg = odot(embed_left(a.ev, prod),
                                      embed_right(a.ev, SymElement::single(
                                                             V, blocks[static_cast<size_t>(i)], 1)));
                SymElement w = restrict_right(a.ev, a.phi.apply(arg));
                if (w.is_zero())
                    return;
                w *= Scalar(sign) / ifact;
                val += w;
            });
        }
        if (!val.is_zero())
            out.add_term(v, val);
    });
    return out;
}

// --- inversion and the coadjoint cocycle ----------------------------------

namespace {

// Inverts the weight-one block t_1: V -> E by Gaussian elimination.
// matrix[e][v] is the e-coefficient of t_1(v); returns inv[v][e].
std::vector<std::vector<Scalar>> invert_t1(const LinearFamily& t) {
    const auto& V = *t.source();
    const auto& Ee = *t.target();
    const int n = V.dim();
    if (Ee.dim() != n)
        throw NotInvertible("t_1 cannot be invertible: dimension mismatch");
    std::vector<std::vector<Scalar>> aug(static_cast<size_t>(n),
                                         std::vector<Scalar>(static_cast<size_t>(2 * n), 0));
    for (int vr = 0; vr < n; ++vr) {
        SymElement img = t.apply(Monomial{{vr}});
        for (const auto& [m, c] : img.terms())
            aug[static_cast<size_t>(Ee.index_at_rank(m.ranks[0]))][static_cast<size_t>(
                V.index_at_rank(vr))] = c;
    }
    for (int i = 0; i < n; ++i)
        aug[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r)
            if (!is_zero(aug[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw NotInvertible("t_1 is singular");
        std::swap(aug[static_cast<size_t>(pivot)], aug[static_cast<size_t>(row)]);
        const Scalar p = aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int c = 0; c < 2 * n; ++c)
            aug[static_cast<size_t>(row)][static_cast<size_t>(c)] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row)
                continue;
            const Scalar f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (is_zero(f))
                continue;
            for (int c = 0; c < 2 * n; ++c)
                aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * aug[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        ++row;
    }
    if (row < n)
        throw NotInvertible("t_1 is singular");
    std::vector<std::vector<Scalar>> inv(static_cast<size_t>(n),
                                         std::vector<Scalar>(static_cast<size_t>(n), 0));
    for (int v = 0; v < n; ++v)
        for (int e = 0; e < n; ++e)
            inv[static_cast<size_t>(v)][static_cast<size_t>(e)] =
                aug[static_cast<size_t>(v)][static_cast<size_t>(n + e)];
    return inv;
}

}  // namespace

LinearFamily comorphism_inverse(const LinearFamily& t, const Caps& caps) {
    if (t.degree() != 0)
        throw MalformedInput("comorphism_inverse: family must have degree zero");
    const SpacePtr V = t.source();
    const SpacePtr Ee = t.target();
    const auto inv = invert_t1(t);
    LinearFamily u(Ee, V, 0);
    auto apply_inv = [&](const SymElement& e_elem) {
        SymElement out(V);
        for (const auto& [m, c] : e_elem.terms()) {
            const int ei = Ee->index_at_rank(m.ranks[0]);
            for (int vi = 0; vi < V->dim(); ++vi) {
                const Scalar& k = inv[static_cast<size_t>(vi)][static_cast<size_t>(ei)];
                if (!is_zero(k))
                    out.add_term(Monomial{{V->rank_of(vi)}}, c * k);
            }
        }
        return out;
    };
    // weight one
    for (int r = 0; r < Ee->dim(); ++r) {
        SymElement val = apply_inv(SymElement::basis(Ee, r));
        if (!val.is_zero())
            u.add_term(Monomial{{r}}, val);
    }
    // higher weights: the weight-n family component of T o U must vanish
    for (int n = 2; n <= caps.max_weight; ++n) {
        Comorphism U{u};
        for (const auto& x : monomials_of_weight(*Ee, n)) {
            // t(U(x)) restricted to blocks of weight < n, i.e. k >= 2 splits
            SymElement rest(Ee);
            Scalar factorial = 1;
            for (int k = 2; k <= n; ++k) {
                factorial *= k;
                const Scalar coeff = Scalar(1) / factorial;
                for_each_split(*Ee, x, k, [&](int sign, const std::vector<Monomial>& blocks) {
                    SymElement prod;
                    bool dead = false;
                    for (const auto& b : blocks) {
                        SymElement ub = u.apply(b);
                        if (ub.is_zero()) {
                            dead = true;
                            break;
                        }
                        prod = prod.space() ? odot(prod, ub) : ub;
                    }
                    if (dead || prod.is_zero())
                        return;
                    SymElement w = t.apply(prod);
                    w *= coeff * sign;
                    rest += w;
                });
            }
            if (!rest.is_zero()) {
                SymElement val = apply_inv(rest);
                val *= Scalar(-1);
                u.add_term(x, val);
            }
        }
    }
    return u;
}

namespace {

// <beta, e> for weight-one beta over E* and e over E (index pairing).
Scalar covector_eval(const GradedSpace& dual_space, int beta_rank, const GradedSpace& base,
                     const SymElement& e) {
    const int bi = dual_space.index_at_rank(beta_rank);
    Scalar out = 0;
    for (const auto& [m, c] : e.terms())
        if (base.index_at_rank(m.ranks[0]) == bi)
            out += c;
    return out;
}

}  // namespace

Verdict check_symmetric(const LinearFamily& t, const Caps& caps) {
    Verdict v;
    v.check = "check-symmetric";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const GradedSpace& Ds = *t.source();  // E*
    const GradedSpace& Ee = *t.target();
    const int support = std::min(t.support_arity(), caps.max_weight);
    // enumerate words (a_1..a_n) as monomial + distinguished last letter,
    // plus the swapped-in beta
    for (int n = 1; n <= support && v.pass; ++n) {
        for (const auto& head : monomials_of_weight(Ds, n - 1)) {
            for (int an = 0; an < Ds.dim() && v.pass; ++an) {
                std::vector<int> word = head.ranks;
                word.push_back(an);
                SymElement lhs_arg(t.source());
                lhs_arg.add_word(word, 1);
                SymElement tlhs = t.apply(lhs_arg);
                for (int beta = 0; beta < Ds.dim(); ++beta) {
                    Scalar lhs = covector_eval(Ds, beta, Ee, tlhs);
                    std::vector<int> word2 = head.ranks;
                    word2.push_back(beta);
                    SymElement rhs_arg(t.source());
                    rhs_arg.add_word(word2, 1);
                    Scalar rhs = covector_eval(Ds, an, Ee, t.apply(rhs_arg));
                    long alpha_total = 0;
                    for (int r : head.ranks)
                        alpha_total += Ds.degree_at_rank(r);
                    const long da_n = Ds.degree_at_rank(an);
                    alpha_total += da_n;
                    const long db = Ds.degree_at_rank(beta);
                    long expo = alpha_total * db + da_n * (alpha_total - da_n);
                    if (expo % 2 != 0)
                        rhs = -rhs;
                    if (lhs != rhs) {
                        std::vector<int> wr = word;
                        Monomial wm{wr};
                        v.fail(to_string(Ds, wm) + " | beta=" + Ds.name_at_rank(beta),
                               scalar_to_string(lhs), scalar_to_string(rhs));
                        break;
                    }
                }
            }
        }
    }
    return v;
}

Verdict check_inverse_symmetric(const LinearFamily& tinv, const Caps& caps) {
    Verdict v;
    v.check = "check-inverse-symmetric";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const GradedSpace& Ee = *tinv.source();
    const GradedSpace& Ds = *tinv.target();  // E*
    const int support = std::min(tinv.support_arity(), caps.max_weight);
    for (int n = 1; n <= support && v.pass; ++n) {
        for (const auto& head : monomials_of_weight(Ee, n - 1)) {
            for (int xn = 0; xn < Ee.dim() && v.pass; ++xn) {
                std::vector<int> word = head.ranks;
                word.push_back(xn);
                SymElement lhs_arg(tinv.source());
                lhs_arg.add_word(word, 1);
                SymElement tl = tinv.apply(lhs_arg);
                for (int y = 0; y < Ee.dim(); ++y) {
                    // <t^-1(x_1..x_n), y> = (-1)^{|y||x_n|} <t^-1(x_1..x_{n-1},y), x_n>
                    Scalar lhs = 0;
                    for (const auto& [m, c] : tl.terms())
                        if (Ds.index_at_rank(m.ranks[0]) == y)
                            lhs += c;
                    std::vector<int> word2 = head.ranks;
                    word2.push_back(Ee.rank_of(y));
                    SymElement rhs_arg(tinv.source());
                    rhs_arg.add_word(word2, 1);
                    SymElement tr = tinv.apply(rhs_arg);
                    Scalar rhs = 0;
                    for (const auto& [m, c] : tr.terms())
                        if (Ds.index_at_rank(m.ranks[0]) == Ee.index_at_rank(xn))
                            rhs += c;
                    const long ex = static_cast<long>(Ee.at(y).degree) *
                                    Ee.degree_at_rank(xn);
                    if (ex % 2 != 0)
                        rhs = -rhs;
                    if (lhs != rhs) {
                        Monomial wm{word};
                        v.fail(to_string(Ee, wm) + " | y=" + Ee.at(y).name,
                               scalar_to_string(lhs), scalar_to_string(rhs));
                        break;
                    }
                }
            }
        }
    }
    return v;
}

SymElement omega_from_inverse(const LinearFamily& tinv, const Caps& caps) {
    const GradedSpace& Ee = *tinv.source();
    const SpacePtr Ds = tinv.target();  // E*
    SymElement omega(Ds);
    for (int n = 2; n <= caps.max_weight; ++n) {
        for (const auto& x : monomials_of_weight(Ee, n)) {
            // <omega, x> via the word in canonical order
            Monomial headm{std::vector<int>(x.ranks.begin(), x.ranks.end() - 1)};
            const int last = x.ranks.back();
            SymElement ti = tinv.apply(headm);
            Scalar c = 0;
            for (const auto& [m, cc] : ti.terms())
                if (Ds->index_at_rank(m.ranks[0]) == Ee.index_at_rank(last))
                    c += cc;
            if (is_zero(c))
                continue;
            // dual monomial and its diagonal Gram entry
            std::vector<int> dranks;
            dranks.reserve(x.ranks.size());
            for (int r : x.ranks)
                dranks.push_back(Ds->rank_of(Ee.index_at_rank(r)));
            std::sort(dranks.begin(), dranks.end());
            Monomial am{dranks};
            Scalar g = pair_monomials(Ee, *Ds, am, x);
            omega.add_term(am, c / g);
        }
    }
    return omega;
}

Verdict coadjoint_cocycle_check(const LinearFamily& t, const LieInftyStructure& s,
                                const Caps& caps, Route route) {
    SpacePtr Ds = s.space->dual();
    if (!t.source()->same_as(*Ds) || !t.target()->same_as(*s.space))
        throw MalformedInput("coadjoint candidate must map S(E*) to E");
    Verdict sym = check_symmetric(t, caps);
    if (!sym.pass)
        throw SymmetryViolation("coadjoint candidate is not symmetric", sym.witness);

    Verdict v;
    v.check = "coadjoint-cocycle";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;

    LinearFamily tinv = comorphism_inverse(t, caps);
    // verify T o T^-1 = id on the checked range
    {
        Comorphism T{t}, U{tinv};
        Comorphism TU = compose(T, U, caps);
        Comorphism id = identity_comorphism(s.space);
        if (!(TU.family() == id.family()))
            throw NotInvertible("comorphism inversion failed to verify T o T^-1 = id");
        v.note("inverse-verified", "weight<=" + std::to_string(caps.max_weight));
    }
    SymElement omega = omega_from_inverse(tinv, caps);

    if (route == Route::Fast || route == Route::Both) {
        std::string witness;
        const bool closed = is_cocycle(s, omega, caps, &witness);
        if (!closed)
            v.fail(witness, "<omega, M_E(x)> != 0", "0");
    }
    if (route == Route::Generic || route == Route::Both) {
        Action coadj = rep_to_action(coadjoint_representation(s));
        Verdict oop = check_ooperator(t, coadj, s, caps);
        if (route == Route::Generic) {
            oop.check = "coadjoint-cocycle/ooperator";
            return oop;
        }
        v.note("ooperator-route", oop.pass ? "pass" : "fail at " + oop.witness);
        if (oop.pass != v.pass)
            v.note("route-disagreement", "cocycle and O-operator routes differ");
    }
    return v;
}

}  // namespace linfty
