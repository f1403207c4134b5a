// Finitely generated subgroups of Q^n, held in a canonical form so that
// equality of subgroups is equality of data: an integer row-HNF basis over a
// single positive denominator.
#pragma once

#include "ut4k/matrix.hpp"

namespace ut4k {

// Canonical row-style Hermite normal form: row echelon, positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows dropped.
IntMatrix hermiteNormalForm(const IntMatrix& m);

struct RationalLattice {
    Index ambientDim = 0;
    Int den = Int(1);     // positive; coprime to the gcd of the basis entries
    IntMatrix basis;      // canonical HNF rows; the lattice is (1/den) * rowspan

    Index rank() const { return basis.rows(); }
    bool operator==(const RationalLattice& o) const
    {
        return ambientDim == o.ambientDim && den == o.den && allEqual(basis, o.basis);
    }
};

// Lattice generated by the rows of gens inside Q^ambientDim.
RationalLattice latticeFromGenerators(const RatMatrix& gens, Index ambientDim);
RationalLattice latticeFromGenerators(const IntMatrix& gens, Index ambientDim);

// Set equality of the generated subgroups. Throws on ambient dimension
// mismatch.
bool latticeEqual(const RationalLattice& a, const RationalLattice& b);

bool latticeContains(const RationalLattice& l, const RatVector& v);

// Lattice generated by the union of the two generating sets.
RationalLattice latticeSum(const RationalLattice& a, const RationalLattice& b);

// Rank of span(a) ∩ span(b) as Q-subspaces; for lattices this equals the rank
// of the intersection lattice.
Index spanIntersectionRank(const RationalLattice& a, const RationalLattice& b);

// Image of l under an integer matrix acting on column vectors.
RationalLattice latticeApply(const IntMatrix& m, const RationalLattice& l);

// Generators of l as rational row vectors (basis rows divided by den).
RatMatrix latticeGenerators(const RationalLattice& l);

} // namespace ut4k
