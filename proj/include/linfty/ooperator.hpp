#pragma once

#include "linfty/actions.hpp"

namespace linfty {

// An O-operator candidate is a degree-zero family t: S(V) -> E; the
// comorphism T it generates is the object the defining equation
//   M_E o T = T o (Phi^T + M_V)
// constrains.

// Family of the deformed coderivation Phi^T of S(V):
//   Phi^T(v) = 0 on V,  Phi^T(v) = Phi_{T(v_(1))} v_(2) otherwise,
// generated by sum Phi_{.,.} (T (x) id) Delta.
LinearFamily phi_T_family(const Action& a, const Comorphism& T, const Caps& caps);
// Direct Sweedler evaluation Phi_{T(v_(1))} v_(2) on one monomial (the
// lemma's description; cross-route for the coderivation generated above).
SymElement phi_T_direct(const Action& a, const Comorphism& T, const Monomial& v,
                        const Caps& caps);

// Exact check of M_E o T = T o (Phi^T + M_V) on all basis monomials of
// S(V) up to the weight cap; the weight-one specialization
// l_1(t_1(v)) = t_1(m_1(v)) is reported separately.
Verdict check_ooperator(const LinearFamily& t, const Action& a, const LieInftyStructure& E,
                        const Caps& caps);

// O-operator with respect to the adjoint action.
Verdict check_rota_baxter(const LinearFamily& t, const LieInftyStructure& s, const Caps& caps);

// The induced structure M_{V^T} = Phi^T + M_V, with T certified as a Lie
// infinity-morphism (V, M_{V^T}) -> (E, M_E). Refuses unless check_ooperator
// passes.
struct InducedStructure {
    LieInftyStructure structure;  // on V
    Verdict morphism;             // T as a morphism certificate
};
InducedStructure induced_structure(const LinearFamily& t, const Action& a,
                                   const LieInftyStructure& E, const Caps& caps);
// The displayed bracket expansion m_n^T, derived from the coalgebra-level
// definition (cross-check route for the family of M_{V^T}).
LinearFamily induced_brackets_explicit(const LinearFamily& t, const Action& a,
                                       const Caps& caps);

// --- comorphism inversion and the coadjoint cocycle ----------------------

// Weight-triangular inverse of the comorphism generated by t: the weight-n
// component is solved from lower weights; requires t_1 invertible.
LinearFamily comorphism_inverse(const LinearFamily& t, const Caps& caps);

// Symmetry of a candidate t: S(E*) -> E:
//   <b, t_n(a_1..a_n)> = (-1)^{|a||b| + |a_n|(|a_1|+...+|a_{n-1}|)}
//                        <a_n, t_n(a_1..a_{n-1}, b)>.
Verdict check_symmetric(const LinearFamily& t, const Caps& caps);
// The displayed symmetry of an inverse component t^{-1}_n: S(E) -> E*.
Verdict check_inverse_symmetric(const LinearFamily& tinv, const Caps& caps);

// omega in S^{>=2}(E*) with <omega, x_1...x_{k+1}> = <t^{-1}_k(x_1..x_k), x_{k+1}>.
SymElement omega_from_inverse(const LinearFamily& tinv, const Caps& caps);

// Invertible symmetric T over V = E* is an O-operator for the coadjoint
// representation iff omega is a cocycle. Primary route: the cocycle test;
// the O-operator route is the theorem-level cross-check.
Verdict coadjoint_cocycle_check(const LinearFamily& t, const LieInftyStructure& s,
                                const Caps& caps, Route route = Route::Both);

}  // namespace linfty
