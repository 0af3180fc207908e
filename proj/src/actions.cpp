#include "linfty/actions.hpp"

#include "linfty/errors.hpp"

#include <algorithm>

namespace linfty {

namespace {

std::vector<int> translate_word(const GradedSpace& from, const GradedSpace& to,
                                const std::vector<int>& ranks,
                                const std::function<int(int)>& index_map) {
    std::vector<int> out;
    out.reserve(ranks.size());
    for (int r : ranks)
        out.push_back(to.rank_of(index_map(from.index_at_rank(r))));
    return out;
}

}  // namespace

SymElement embed_left(const SumSpace& ev, const SymElement& x) {
    SymElement out(ev.sum);
    for (const auto& [m, c] : x.terms())
        out.add_word(translate_word(*ev.left, *ev.sum, m.ranks,
                                    [&](int i) { return ev.from_left(i); }),
                     c);
    return out;
}

SymElement embed_right(const SumSpace& ev, const SymElement& v) {
    SymElement out(ev.sum);
    for (const auto& [m, c] : v.terms())
        out.add_word(translate_word(*ev.right, *ev.sum, m.ranks,
                                    [&](int i) { return ev.from_right(i); }),
                     c);
    return out;
}

bool mono_pure_left(const SumSpace& ev, const Monomial& m) {
    for (int r : m.ranks)
        if (!ev.rank_is_left(r))
            return false;
    return true;
}

bool mono_pure_right(const SumSpace& ev, const Monomial& m) {
    for (int r : m.ranks)
        if (ev.rank_is_left(r))
            return false;
    return true;
}

SymElement restrict_left(const SumSpace& ev, const SymElement& e) {
    SymElement out(ev.left);
    for (const auto& [m, c] : e.terms()) {
        if (!mono_pure_left(ev, m))
            continue;
        out.add_word(translate_word(*ev.sum, *ev.left, m.ranks,
                                    [&](int i) { return ev.to_left(i); }),
                     c);
    }
    return out;
}

SymElement restrict_right(const SumSpace& ev, const SymElement& e) {
    SymElement out(ev.right);
    for (const auto& [m, c] : e.terms()) {
        if (!mono_pure_right(ev, m))
            continue;
        out.add_word(translate_word(*ev.sum, *ev.right, m.ranks,
                                    [&](int i) { return ev.to_right(i); }),
                     c);
    }
    return out;
}

LinearFamily embed_family_left(const SumSpace& ev, const LinearFamily& f) {
    LinearFamily out(ev.sum, ev.sum, f.degree());
    for (const auto& [m, v] : f.terms()) {
        SymElement word(ev.sum);
        word.add_word(translate_word(*ev.left, *ev.sum, m.ranks,
                                     [&](int i) { return ev.from_left(i); }),
                      1);
        // canonical input monomial with the sign folded into the value
        for (const auto& [mm, cc] : word.terms())
            out.add_term(mm, cc * embed_left(ev, v));
    }
    return out;
}

LinearFamily embed_family_right(const SumSpace& ev, const LinearFamily& f) {
    LinearFamily out(ev.sum, ev.sum, f.degree());
    for (const auto& [m, v] : f.terms()) {
        SymElement word(ev.sum);
        word.add_word(translate_word(*ev.right, *ev.sum, m.ranks,
                                     [&](int i) { return ev.from_right(i); }),
                      1);
        for (const auto& [mm, cc] : word.terms())
            out.add_term(mm, cc * embed_right(ev, v));
    }
    return out;
}

// --- morphism checks -----------------------------------------------------

namespace {

Verdict morphism_comorphism_route(const LinearFamily& phi, const LieInftyStructure& src,
                                  const LieInftyStructure& tgt, const Caps& caps) {
    Verdict v;
    v.check = "check-morphism";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const Comorphism F{phi};
    const Coderivation Msrc = src.coderivation();
    const Coderivation Mtgt = tgt.coderivation();
    for_each_monomial(*src.space, 1, caps.max_weight, [&](const Monomial& x) {
        if (!v.pass)
            return;
        SymElement lhs = F.eval(Msrc.eval(x));
        SymElement rhs = Mtgt.eval(F.eval(x));
        if (!(lhs == rhs))
            v.fail(to_string(*src.space, x), lhs.str(), rhs.str());
    });
    return v;
}

Verdict morphism_component_route(const LinearFamily& phi, const LieInftyStructure& src,
                                 const LieInftyStructure& tgt, const Caps& caps) {
    Verdict v;
    v.check = "check-morphism/components";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const Coderivation Msrc = src.coderivation();
    for_each_monomial(*src.space, 1, caps.max_weight, [&](const Monomial& x) {
        if (!v.pass)
            return;
        // lhs: sum over Sh(k, n-k) of Phi(l_k(...) . rest) = phi(M_src(x))
        SymElement lhs = phi.apply(Msrc.eval(x));
        // rhs: sum over ordered splits with 1/j! of m_j(phi(b_1),...,phi(b_j))
        SymElement rhs(tgt.space);
        Scalar factorial = 1;
        for (int j = 1; j <= x.weight(); ++j) {
            factorial *= j;
            const Scalar coeff = Scalar(1) / factorial;
            for_each_split(*src.space, x, j, [&](int sign, const std::vector<Monomial>& blocks) {
                SymElement prod;
                bool dead = false;
                for (const auto& b : blocks) {
                    SymElement pb = phi.apply(b);
                    if (pb.is_zero()) {
                        dead = true;
                        break;
                    }
                    prod = prod.space() ? odot(prod, pb) : pb;
                }
                if (dead || prod.is_zero())
                    return;
                SymElement term = tgt.brackets.apply(prod);
                term *= coeff * sign;
                rhs += term;
            });
        }
        if (!(lhs == rhs))
            v.fail(to_string(*src.space, x), lhs.str(), rhs.str());
    });
    return v;
}

Verdict combine_routes(Verdict fast, const Verdict& generic) {
    if (fast.pass != generic.pass) {
        Verdict out = fast.pass ? generic : fast;
        out.note("route-disagreement", "fast and generic paths returned different verdicts");
        return out;
    }
    if (!fast.pass && fast.witness != generic.witness)
        fast.note("generic-witness", generic.witness);
    fast.note("routes-agree", "true");
    return fast;
}

}  // namespace

Verdict check_linfty_morphism(const LinearFamily& phi, const LieInftyStructure& src,
                              const LieInftyStructure& tgt, const Caps& caps, Route route) {
    if (phi.degree() != 0)
        throw MalformedInput("morphism family must have degree zero");
    if (!phi.source()->same_as(*src.space) || !phi.target()->same_as(*tgt.space))
        throw MalformedInput("morphism family spaces do not match the structures");
    switch (route) {
        case Route::Fast:
            return morphism_comorphism_route(phi, src, tgt, caps);
        case Route::Generic:
            return morphism_component_route(phi, src, tgt, caps);
        case Route::Both:
            return combine_routes(morphism_comorphism_route(phi, src, tgt, caps),
                                  morphism_component_route(phi, src, tgt, caps));
    }
    throw MalformedInput("unknown route");
}

// --- representations ------------------------------------------------------

namespace {

EndoMatrix endo_value(const Representation& rep, const SymElement& weight1endo) {
    return to_matrix(rep.es, weight1endo);
}

EndoMatrix d_matrix(const Representation& rep) {
    EndoMatrix dm;
    for (int r = 0; r < rep.V->dim(); ++r) {
        SymElement image = rep.d.apply(Monomial{{r}});
        const int a = rep.V->index_at_rank(r);
        for (const auto& [mono, c] : image.terms())
            dm[{a, rep.V->index_at_rank(mono.ranks[0])}] = c;
    }
    return dm;
}

void mat_add(EndoMatrix& into, const EndoMatrix& other, const Scalar& factor) {
    for (const auto& [ab, c] : other) {
        auto [it, fresh] = into.try_emplace(ab, factor * c);
        if (!fresh) {
            it->second += factor * c;
            if (is_zero(it->second))
                into.erase(it);
        }
    }
}

EndoMatrix graded_commutator(const EndoSpace& es, const EndoMatrix& x, int degx,
                             const EndoMatrix& y, int degy) {
    EndoMatrix out = compose_matrices(es, x, y);
    mat_add(out, compose_matrices(es, y, x), ((degx & 1) && (degy & 1)) ? Scalar(1) : Scalar(-1));
    return out;
}

Verdict representation_direct_route(const Representation& rep, const LieInftyStructure& src,
                                    const Caps& caps) {
    Verdict v;
    v.check = "check-representation";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const Coderivation M = src.coderivation();
    const EndoMatrix dm = d_matrix(rep);
    for_each_monomial(*src.space, 1, caps.max_weight, [&](const Monomial& x) {
        if (!v.pass)
            return;
        EndoMatrix lhs = endo_value(rep, rep.phi.apply(M.eval(x)));
        // rhs: dPhi_n(x) + 1/2 sum_{Sh(j, n-j)} eps [[Phi_j, Phi_{n-j}]]
        EndoMatrix phix = endo_value(rep, rep.phi.apply(x));
        EndoMatrix rhs = graded_commutator(rep.es, dm, 1, phix, degree(*src.space, x) + 1);
        for (auto& [ab, c] : rhs)
            c = -c;
        for_each_split2(*src.space, x, [&](int sign, const Monomial& b1, const Monomial& b2) {
            EndoMatrix m1 = endo_value(rep, rep.phi.apply(b1));
            if (m1.empty())
                return;
            EndoMatrix m2 = endo_value(rep, rep.phi.apply(b2));
            if (m2.empty())
                return;
            const int deg1 = degree(*src.space, b1) + 1;
            const int deg2 = degree(*src.space, b2) + 1;
            EndoMatrix br = graded_commutator(rep.es, m1, deg1, m2, deg2);
            if (deg1 & 1)
                for (auto& [ab, c] : br)
                    c = -c;
            mat_add(rhs, br, Scalar(1, 2) * sign);
        });
        if (lhs != rhs) {
            SymElement ld = from_matrix(rep.es, lhs), rd = from_matrix(rep.es, rhs);
            v.fail(to_string(*src.space, x), ld.str(), rd.str());
        }
    });
    return v;
}

}  // namespace

Verdict check_representation(const Representation& rep, const LieInftyStructure& src,
                             const Caps& caps, Route route) {
    if (rep.phi.degree() != 0)
        throw MalformedInput("representation family must target End(V)[1] with degree zero");
    if (rep.d.support_arity() > 1 || rep.d.degree() != 1)
        throw InvalidComplex("representation requires an arity-one degree +1 differential");
    {
        const EndoMatrix dm = d_matrix(rep);
        if (!compose_matrices(rep.es, dm, dm).empty())
            throw InvalidComplex("differential does not square to zero");
    }
    switch (route) {
        case Route::Fast:
            return representation_direct_route(rep, src, caps);
        case Route::Generic: {
            LieInftyStructure dgla = endo_dgla(rep.es, rep.d, caps.max_weight);
            Verdict v = check_linfty_morphism(rep.phi, src, dgla, caps, Route::Fast);
            v.check = "check-representation/morphism";
            return v;
        }
        case Route::Both: {
            Verdict fast = representation_direct_route(rep, src, caps);
            LieInftyStructure dgla = endo_dgla(rep.es, rep.d, caps.max_weight);
            Verdict generic = check_linfty_morphism(rep.phi, src, dgla, caps, Route::Fast);
            generic.check = "check-representation/morphism";
            return combine_routes(std::move(fast), generic);
        }
    }
    throw MalformedInput("unknown route");
}

Representation adjoint_representation(const LieInftyStructure& s) {
    Representation rep;
    rep.E = s.space;
    rep.V = s.space;
    rep.es = make_endo_space(s.space);
    rep.d = LinearFamily(s.space, s.space, 1);
    for (int r = 0; r < s.space->dim(); ++r) {
        SymElement image = s.brackets.apply(Monomial{{r}});
        if (!image.is_zero())
            rep.d.add_term(Monomial{{r}}, image);
    }
    rep.phi = LinearFamily(s.space, rep.es.endo1, 0);
    const int support = s.brackets.support_arity();
    for_each_monomial(*s.space, 1, std::max(0, support - 1), [&](const Monomial& x) {
        EndoMatrix mat;
        SymElement xe = SymElement::single(s.space, x, 1);
        for (int r = 0; r < s.space->dim(); ++r) {
            SymElement image = s.brackets.apply(odot(xe, SymElement::basis(s.space, r)));
            const int a = s.space->index_at_rank(r);
            for (const auto& [mono, c] : image.terms())
                mat[{a, s.space->index_at_rank(mono.ranks[0])}] = c;
        }
        if (!mat.empty())
            rep.phi.add_term(x, from_matrix(rep.es, mat));
    });
    return rep;
}

Representation dual_representation(const Representation& rep) {
    Representation out;
    out.E = rep.E;
    out.V = rep.V->dual();
    out.es = make_endo_space(out.V);
    // d* on V*: <d*(a), v> = -(-1)^{|a|} <a, d v>
    out.d = LinearFamily(out.V, out.V, 1);
    const EndoMatrix dm = d_matrix(rep);
    for (int r = 0; r < out.V->dim(); ++r) {
        const int a = out.V->index_at_rank(r);
        const int da = out.V->at(a).degree;
        SymElement image(out.V);
        for (const auto& [bc, c] : dm)
            if (bc.second == a)
                image.add_term(Monomial{{out.V->rank_of(bc.first)}},
                               ((da & 1) ? Scalar(1) : Scalar(-1)) * c);
        if (!image.is_zero())
            out.d.add_term(Monomial{{r}}, image);
    }
    out.phi = LinearFamily(rep.E, out.es.endo1, 0);
    for (const auto& [x, value] : rep.phi.terms()) {
        const EndoMatrix mx = to_matrix(rep.es, value);
        const int degx = degree(*rep.E, x);
        EndoMatrix dualmat;
        for (const auto& [ba, c] : mx) {
            // entry b->a of Phi contributes to a*->b* of *Phi
            const int a = ba.second;
            const int dastar = -rep.V->at(a).degree;
            const Scalar sign = (((degx + 1) * dastar) & 1) ? Scalar(1) : Scalar(-1);
            auto key = std::make_pair(a, ba.first);
            auto [it, fresh] = dualmat.try_emplace(key, sign * c);
            if (!fresh)
                it->second += sign * c;
        }
        if (!dualmat.empty())
            out.phi.add_term(x, from_matrix(out.es, dualmat));
    }
    return out;
}

Representation coadjoint_representation(const LieInftyStructure& s) {
    return dual_representation(adjoint_representation(s));
}

// --- actions --------------------------------------------------------------

LinearFamily sum_slice_family(const SumSpace& ev, const LinearFamily& f, const SymElement& x,
                              const Caps& caps) {
    LinearFamily out(ev.right, ev.right,
                     x.homogeneous_degree().value_or(-f.degree()) + f.degree());
    if (x.is_zero())
        return out;
    SymElement xe = embed_left(ev, x);
    for_each_monomial(*ev.right, 1, caps.max_weight, [&](const Monomial& vm) {
        SymElement arg = odot(xe, embed_right(ev, SymElement::single(ev.right, vm, 1)));
        SymElement val = restrict_right(ev, f.apply(arg));
        if (!val.is_zero())
            out.add_term(vm, val);
    });
    return out;
}

LinearFamily action_slice_family(const Action& a, const SymElement& x, const Caps& caps) {
    return sum_slice_family(a.ev, a.phi, x, caps);
}

Action adjoint_action(const LieInftyStructure& s) {
    Action a;
    a.ev = direct_sum(s.space, s.space);
    a.m = s.brackets;
    a.phi = LinearFamily(a.ev.sum, a.ev.sum, 1);
    const int support = s.brackets.support_arity();
    for_each_monomial(*a.ev.sum, 2, support, [&](const Monomial& w) {
        // mixed monomials only
        bool has_left = false, has_right = false;
        for (int r : w.ranks)
            (a.ev.rank_is_left(r) ? has_left : has_right) = true;
        if (!has_left || !has_right)
            return;
        // read the word in canonical sum order, identify both copies with E
        std::vector<int> eword;
        eword.reserve(w.ranks.size());
        for (int r : w.ranks) {
            const int idx = a.ev.sum->index_at_rank(r);
            eword.push_back(s.space->rank_of(a.ev.is_left(idx) ? a.ev.to_left(idx)
                                                               : a.ev.to_right(idx)));
        }
        SymElement arg(s.space);
        arg.add_word(eword, 1);
        SymElement val = s.brackets.apply(arg);
        if (!val.is_zero())
            a.phi.add_term(w, embed_right(a.ev, val));
    });
    return a;
}

Action rep_to_action(const Representation& rep) {
    Action a;
    a.ev = direct_sum(rep.E, rep.V);
    a.m = rep.d;
    a.phi = LinearFamily(a.ev.sum, a.ev.sum, 1);
    for (const auto& [x, value] : rep.phi.terms()) {
        const EndoMatrix mx = to_matrix(rep.es, value);
        if (mx.empty())
            continue;
        SymElement xe = embed_left(a.ev, SymElement::single(rep.E, x, 1));
        for (int r = 0; r < rep.V->dim(); ++r) {
            SymElement img = apply_matrix(rep.es, mx, SymElement::basis(rep.V, r));
            if (img.is_zero())
                continue;
            SymElement arg = odot(xe, embed_right(a.ev, SymElement::basis(rep.V, r)));
            // arg is a single mixed monomial with a +-1 coefficient
            for (const auto& [w, c] : arg.terms())
                a.phi.add_term(w, c * embed_right(a.ev, img));
        }
    }
    return a;
}

Representation action_to_linear_rep(const Action& a) {
    Representation rep;
    rep.E = a.ev.left;
    rep.V = a.ev.right;
    rep.es = make_endo_space(rep.V);
    rep.d = LinearFamily(rep.V, rep.V, 1);
    for (int r = 0; r < rep.V->dim(); ++r) {
        SymElement image = a.m.apply(Monomial{{r}});
        if (!image.is_zero())
            rep.d.add_term(Monomial{{r}}, image);
    }
    rep.phi = LinearFamily(rep.E, rep.es.endo1, 0);
    Caps slice_caps;
    slice_caps.max_weight = 1;
    for_each_monomial(*rep.E, 1, a.phi.support_arity(), [&](const Monomial& x) {
        LinearFamily slice =
            action_slice_family(a, SymElement::single(rep.E, x, 1), slice_caps);
        EndoMatrix mat;
        for (const auto& [vm, val] : slice.terms()) {
            const int b = rep.V->index_at_rank(vm.ranks[0]);
            for (const auto& [om, c] : val.terms())
                mat[{b, rep.V->index_at_rank(om.ranks[0])}] = c;
        }
        if (!mat.empty())
            rep.phi.add_term(x, from_matrix(rep.es, mat));
    });
    return rep;
}

LinearFamily semidirect_family(const LinearFamily& l, const Action& a) {
    LinearFamily total = embed_family_left(a.ev, l);
    total += embed_family_right(a.ev, a.m);
    total += a.phi;
    return total;
}

namespace {

Verdict action_morphism_route(const LinearFamily& l, const Action& a, const Caps& caps) {
    Verdict v;
    v.check = "check-action/morphism";
    v.max_weight = caps.max_weight;
    v.max_arity = caps.max_arity;
    const LieInftyStructure src{l.source(), l, 0};
    const Coderivation M = src.coderivation();
    const Coderivation Mv{a.m};
    for_each_monomial(*l.source(), 1, caps.max_weight, [&](const Monomial& x) {
        if (!v.pass)
            return;
        SymElement xe = SymElement::single(l.source(), x, 1);
        // Phi_{M_E(x)}
        LinearFamily lhs = action_slice_family(a, M.eval(x), caps);
        // d_{M_V}(Phi_x) + 1/2 sum_{Sh} eps [[Phi_{x(1)}, Phi_{x(2)}]],
        // materialized to the weight cap (the comparison range)
        LinearFamily phix = action_slice_family(a, xe, caps);
        LinearFamily rhs = rn_bracket(Mv.family(), phix, caps);
        rhs *= Scalar(-1);
        for_each_split2(*l.source(), x, [&](int sign, const Monomial& b1, const Monomial& b2) {
            LinearFamily s1 =
                action_slice_family(a, SymElement::single(l.source(), b1, 1), caps);
            if (s1.is_zero())
                return;
            LinearFamily s2 =
                action_slice_family(a, SymElement::single(l.source(), b2, 1), caps);
            if (s2.is_zero())
                return;
            LinearFamily br = rn_bracket(s1, s2, caps);
            if (s1.degree() & 1)
                br *= Scalar(-1);
            br *= Scalar(1, 2) * sign;
            rhs += br;
        });
        if (!(lhs == rhs)) {
            // report the first slice input where the operators differ
            std::string witness = to_string(*l.source(), x);
            std::string lv = "<family>", rv = "<family>";
            for_each_monomial(*a.ev.right, 1, caps.max_weight, [&](const Monomial& vm) {
                if (lv != "<family>")
                    return;
                SymElement le = lhs.apply(vm), re = rhs.apply(vm);
                if (!(le == re)) {
                    witness += " | " + to_string(*a.ev.right, vm);
                    lv = le.str();
                    rv = re.str();
                }
            });
            v.fail(witness, lv, rv);
        }
    });
    return v;
}

}  // namespace

Verdict check_action(const LinearFamily& l, const Action& a, const Caps& caps, Route route) {
    switch (route) {
        case Route::Fast: {
            Verdict v = check_jacobi(semidirect_family(l, a), caps.max_weight);
            v.check = "check-action";
            v.max_arity = caps.max_arity;
            return v;
        }
        case Route::Generic:
            return action_morphism_route(l, a, caps);
        case Route::Both: {
            Verdict fast = check_jacobi(semidirect_family(l, a), caps.max_weight);
            fast.check = "check-action";
            fast.max_arity = caps.max_arity;
            return combine_routes(std::move(fast), action_morphism_route(l, a, caps));
        }
    }
    throw MalformedInput("unknown route");
}

LieInftyStructure semidirect(const LieInftyStructure& s, const Action& a, const Caps& caps) {
    LinearFamily total = semidirect_family(s.brackets, a);
    return certify_structure(std::move(total), caps.max_weight);
}

}  // namespace linfty
