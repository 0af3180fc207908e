#pragma once

#include "linfty/endo.hpp"
#include "linfty/structure.hpp"

namespace linfty {

// --- element transport between V, E and S(E (+) V) ---------------------

// Embeddings re-normalize words, folding any Koszul sign produced by the
// canonical order of the sum space.
SymElement embed_left(const SumSpace& ev, const SymElement& x);
SymElement embed_right(const SumSpace& ev, const SymElement& v);
// Restriction to pure-left/pure-right monomials, translated back.
SymElement restrict_left(const SumSpace& ev, const SymElement& e);
SymElement restrict_right(const SumSpace& ev, const SymElement& e);
bool mono_pure_left(const SumSpace& ev, const Monomial& m);
bool mono_pure_right(const SumSpace& ev, const Monomial& m);

// Families on E (resp. V) as families on the sum space supported on pure
// monomials, and back.
LinearFamily embed_family_left(const SumSpace& ev, const LinearFamily& f);
LinearFamily embed_family_right(const SumSpace& ev, const LinearFamily& f);

// --- Lie infinity-morphisms --------------------------------------------

enum class Route { Fast, Generic, Both };

// phi: degree-zero family source -> target of a morphism candidate.
// Fast route: the comorphism-level identity F o M_src = M_tgt o F.
// Generic route: the component unshuffle identity of the definition.
Verdict check_linfty_morphism(const LinearFamily& phi, const LieInftyStructure& src,
                              const LieInftyStructure& tgt, const Caps& caps,
                              Route route = Route::Both);

// --- representations -----------------------------------------------------

struct Representation {
    SpacePtr E;
    SpacePtr V;
    LinearFamily d;    // arity-one degree +1 family on V, d^2 = 0
    EndoSpace es;      // End(V)[1]
    LinearFamily phi;  // degree-zero family E -> End(V)[1]
};

// Fast route: the displayed identity
//   sum eps Phi_{n-i+1}(l_i(...),...) = dPhi_n + 1/2 sum eps [[Phi_j, Phi_{n-j}]]
// Generic route: phi is a Lie infinity-morphism into endo_dgla(V, d).
Verdict check_representation(const Representation& rep, const LieInftyStructure& src,
                             const Caps& caps, Route route = Route::Both);

Representation adjoint_representation(const LieInftyStructure& s);
// <*Phi(e)(a), v> = -(-1)^{(|e|+1)|a|} <a, Phi(e)(v)> on (V*, d*).
Representation dual_representation(const Representation& rep);
Representation coadjoint_representation(const LieInftyStructure& s);

// --- Lie infinity-actions ------------------------------------------------

// Stored by the structure constants Phi_{k,i}: the family over S(E (+) V)
// supported on mixed monomials with values in the V summand.
struct Action {
    SumSpace ev;
    LinearFamily phi;  // over the sum space, degree +1, mixed support
    LinearFamily m;    // target brackets on V (M_V)
};

// The slice family v |-> f(x (x) v) of a family over the sum space, as a
// family on V. For an action this generates the coderivation Phi_x.
LinearFamily sum_slice_family(const SumSpace& ev, const LinearFamily& f, const SymElement& x,
                              const Caps& caps);
LinearFamily action_slice_family(const Action& a, const SymElement& x, const Caps& caps);

Action adjoint_action(const LieInftyStructure& s);
Action rep_to_action(const Representation& rep);
Representation action_to_linear_rep(const Action& a);

// M_{E(+)V} = M_E + Upsilon + M_V as one family over the sum space.
LinearFamily semidirect_family(const LinearFamily& l, const Action& a);

// Fast route: the semidirect coderivation squares to zero on the checked
// range. Generic route: the morphism identity
//   Phi_{M_E(x)} = d_{M_V}(Phi_x) + 1/2 sum eps [[Phi_{x(1)}, Phi_{x(2)}]]
// compared as coderivations of S(V).
Verdict check_action(const LinearFamily& l, const Action& a, const Caps& caps,
                     Route route = Route::Both);

// E (+) V with the full structure; throws Refused unless the square check
// passes (a failing square certifies that phi is not an action).
LieInftyStructure semidirect(const LieInftyStructure& s, const Action& a, const Caps& caps);

}  // namespace linfty
