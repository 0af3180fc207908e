#include "linfty/endo.hpp"

#include "linfty/errors.hpp"

namespace linfty {

EndoSpace make_endo_space(const SpacePtr& V) {
    std::vector<BasisElement> basis;
    basis.reserve(static_cast<size_t>(V->dim()) * static_cast<size_t>(V->dim()));
    for (int a = 0; a < V->dim(); ++a)
        for (int b = 0; b < V->dim(); ++b)
            basis.push_back(BasisElement{"[" + V->at(a).name + "->" + V->at(b).name + "]",
                                         V->at(b).degree - V->at(a).degree - 1});
    EndoSpace es;
    es.V = V;
    es.endo1 = GradedSpace::make(std::move(basis));
    return es;
}

EndoMatrix to_matrix(const EndoSpace& es, const SymElement& weight1) {
    EndoMatrix m;
    for (const auto& [mono, c] : weight1.terms()) {
        if (mono.weight() != 1)
            throw MalformedInput("to_matrix: element must have weight one");
        auto [a, b] = es.endo_pair(es.endo1->index_at_rank(mono.ranks[0]));
        m[{a, b}] = c;
    }
    return m;
}

SymElement from_matrix(const EndoSpace& es, const EndoMatrix& m) {
    SymElement out(es.endo1);
    for (const auto& [ab, c] : m)
        out.add_term(Monomial{{es.endo1->rank_of(es.endo_index(ab.first, ab.second))}}, c);
    return out;
}

EndoMatrix compose_matrices(const EndoSpace&, const EndoMatrix& second, const EndoMatrix& first) {
    EndoMatrix out;
    for (const auto& [ab, c1] : first)
        for (const auto& [cd, c2] : second) {
            if (ab.second != cd.first)
                continue;
            auto key = std::make_pair(ab.first, cd.second);
            auto [it, fresh] = out.try_emplace(key, c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (is_zero(it->second))
                    out.erase(it);
            }
        }
    return out;
}

SymElement apply_matrix(const EndoSpace& es, const EndoMatrix& m, const SymElement& v) {
    SymElement out(es.V);
    for (const auto& [mono, c] : v.terms()) {
        if (mono.weight() != 1)
            throw MalformedInput("apply_matrix: element must have weight one");
        const int a = es.V->index_at_rank(mono.ranks[0]);
        for (const auto& [ab, k] : m)
            if (ab.first == a)
                out.add_term(Monomial{{es.V->rank_of(ab.second)}}, c * k);
    }
    return out;
}

std::optional<int> matrix_degree(const EndoSpace& es, const EndoMatrix& m) {
    std::optional<int> d;
    for (const auto& [ab, c] : m) {
        int dm = es.V->at(ab.second).degree - es.V->at(ab.first).degree;
        if (d && *d != dm)
            return std::nullopt;
        d = dm;
    }
    return d;
}

LieInftyStructure endo_dgla(const EndoSpace& es, const LinearFamily& d, int certify_weight) {
    if (d.degree() != 1 || d.support_arity() > 1 || !d.source()->same_as(*es.V) || !d.endo())
        throw MalformedInput("endo_dgla: d must be an arity-one degree +1 family on V");
    EndoMatrix dm;
    for (int r = 0; r < es.V->dim(); ++r) {
        SymElement image = d.apply(Monomial{{r}});
        const int a = es.V->index_at_rank(r);
        for (const auto& [mono, c] : image.terms())
            dm[{a, es.V->index_at_rank(mono.ranks[0])}] = c;
    }
    if (!compose_matrices(es, dm, dm).empty())
        throw InvalidComplex("endo_dgla: d does not square to zero");

    LinearFamily l(es.endo1, es.endo1, 1);
    auto commutator_c = [&](const EndoMatrix& x, int degx, const EndoMatrix& y, int degy) {
        EndoMatrix out = compose_matrices(es, x, y);
        EndoMatrix yx = compose_matrices(es, y, x);
        const int sign = ((degx & 1) && (degy & 1)) ? 1 : -1;
        for (const auto& [ab, c] : yx) {
            auto [it, fresh] = out.try_emplace(ab, sign * c);
            if (!fresh) {
                it->second += sign * c;
                if (is_zero(it->second))
                    out.erase(it);
            }
        }
        return out;
    };

    for (int r = 0; r < es.endo1->dim(); ++r) {
        auto [a, b] = es.endo_pair(es.endo1->index_at_rank(r));
        EndoMatrix phi{{{a, b}, Scalar(1)}};
        const int degphi = es.V->at(b).degree - es.V->at(a).degree;
        // l1(phi) = -[d, phi]_c
        EndoMatrix boundary = commutator_c(dm, 1, phi, degphi);
        for (auto& [ab2, c] : boundary)
            c = -c;
        SymElement v = from_matrix(es, boundary);
        if (!v.is_zero())
            l.add_term(Monomial{{r}}, v);
        // l2 on canonical two-letter words
        for (int r2 = r; r2 < es.endo1->dim(); ++r2) {
            if (r2 == r && (es.endo1->degree_at_rank(r) & 1))
                continue;  // odd square word vanishes
            auto [a2, b2] = es.endo_pair(es.endo1->index_at_rank(r2));
            EndoMatrix psi{{{a2, b2}, Scalar(1)}};
            const int degpsi = es.V->at(b2).degree - es.V->at(a2).degree;
            EndoMatrix br = commutator_c(phi, degphi, psi, degpsi);
            if (degphi & 1)
                for (auto& [ab2, c] : br)
                    c = -c;
            SymElement v2 = from_matrix(es, br);
            if (!v2.is_zero())
                l.add_term(Monomial{{r, r2}}, v2);
        }
    }
    return certify_structure(std::move(l), certify_weight);
}

}  // namespace linfty
