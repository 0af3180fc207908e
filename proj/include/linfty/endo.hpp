#pragma once

#include "linfty/structure.hpp"

namespace linfty {

// End(V)[1] over a finite graded space V. Basis element a->b is the map
// sending basis vector a to b; its unshifted degree is |b| - |a|.
struct EndoSpace {
    SpacePtr V;
    SpacePtr endo1;  // shifted degrees |b| - |a| - 1

    int endo_index(int a, int b) const { return a * V->dim() + b; }
    std::pair<int, int> endo_pair(int e) const { return {e / V->dim(), e % V->dim()}; }
};

EndoSpace make_endo_space(const SpacePtr& V);

// Sparse matrix form of a weight-one element of End(V): (a,b) -> coefficient
// of the map v_a |-> v_b.
using EndoMatrix = std::map<std::pair<int, int>, Scalar>;

EndoMatrix to_matrix(const EndoSpace& es, const SymElement& weight1);
SymElement from_matrix(const EndoSpace& es, const EndoMatrix& m);
EndoMatrix compose_matrices(const EndoSpace& es, const EndoMatrix& second,
                            const EndoMatrix& first);
// Applies a matrix to a weight-one element of V.
SymElement apply_matrix(const EndoSpace& es, const EndoMatrix& m, const SymElement& v);
// Unshifted End(V)-degree of a homogeneous matrix (nullopt for 0 or mixed).
std::optional<int> matrix_degree(const EndoSpace& es, const EndoMatrix& m);

// The symmetric DGLA structure on End(V)[1] for a complex (V, d):
//   l1(phi)     = -[d, phi]_c
//   l2(phi,psi) = (-1)^{deg phi} [phi, psi]_c
// d is an arity-one degree +1 family on V with d^2 = 0 (else InvalidComplex).
LieInftyStructure endo_dgla(const EndoSpace& es, const LinearFamily& d, int certify_weight);

}  // namespace linfty
