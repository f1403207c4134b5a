// K-group computations: the exterior-algebra model for torus automorphisms,
// crossed-product K-groups by Z, and the assembled ordered invariant.
#pragma once

#include "ut4k/lattice.hpp"
#include "ut4k/numberfield.hpp"
#include "ut4k/smith.hpp"

#include <vector>

namespace ut4k {

// Subsets of {0..n-1} ordered by (size, lexicographic); the wedge basis.
std::vector<std::vector<int>> exteriorBasis(int n);
// The even-degree (resp. odd-degree) subsets, in the same order.
std::vector<std::vector<int>> exteriorBasisEven(int n);
std::vector<std::vector<int>> exteriorBasisOdd(int n);
// Position of a subset in one of the bases above; -1 when absent.
Index exteriorIndexOf(const std::vector<std::vector<int>>& basis, const std::vector<int>& subset);

// Action induced on the exterior algebra by a unimodular matrix, split into
// the even and odd graded parts. Entry (T, S) of a graded block is the minor
// of m on rows T and columns S; with both subsets kept ascending the wedge
// reordering signs are exactly the determinant signs.
struct GradedAutomorphism {
    int n = 0;
    IntMatrix even;
    IntMatrix odd;
};

GradedAutomorphism exteriorAction(const IntMatrix& m);

// K-groups of a crossed product by Z from the action on the K-groups of the
// coefficient algebra (both assumed free): the six-term sequence collapses to
//   K0 = coker(id - m0) + ker(id - m1),
//   K1 = coker(id - m1) + ker(id - m0),
// where the extension splits because the kernel terms are free.
struct PvResult {
    FpAbelianGroup k0, k1;
    FpAbelianGroup k0Coker, k1Coker;
    Index k0KerRank = 0, k1KerRank = 0;
};

PvResult pvCrossedProduct(const IntMatrix& m0, const IntMatrix& m1);

// The automorphism of Z^4 induced by conjugation by 1+e23 on the rank-4
// quotient of the three-step group: x1 -> x1 - x2, x2 -> x2, x3 -> x3,
// x4 -> x3 + x4 (columns are images).
IntMatrix ut4AlphaMatrix();

// Full pipeline for the rank-4 case: exterior action of alpha, then the
// crossed-product K-groups. Expected outcome: both groups are Z^10.
struct Ut4KGroups {
    GradedAutomorphism action;
    PvResult pv;
};
Ut4KGroups ut4KGroups();

// Action on K1 of the index-4 tensor-product subalgebra:
// [id (x) (1 1; 0 1)] (+) [(1 1; 0 1) (x) id], an 8x8 unipotent block matrix.
IntMatrix betaTensorK1Matrix();

// The ordered invariant of B_theta: free K-groups of rank 10, the positivity
// functional supported on the first three coordinates, the class of the unit,
// and the range of the trace as a lattice in power-basis coordinates.
struct ElliottInvariant {
    FpAbelianGroup k0, k1;
    FieldPtr field;
    RealAlgebraic theta;
    std::vector<FieldElement> coneNormal; // (1, theta, theta^2, 0, ..., 0), length 10
    IntVector orderUnit;                  // (1, 0, ..., 0), length 10
    RationalLattice traceRange;           // Z + theta Z + theta^2 Z in power coords
};

// Throws DomainError when theta is rational (degree-1 field).
ElliottInvariant elliottInvariant(const RealAlgebraic& theta);

// x = 0, or the pairing x1 + x2 theta + x3 theta^2 is strictly positive.
bool coneContains(const ElliottInvariant& inv, const IntVector& x);

// Membership of a's power-basis coordinates in the trace-range lattice.
bool traceRangeContains(const ElliottInvariant& inv, const FieldElement& a);

} // namespace ut4k
