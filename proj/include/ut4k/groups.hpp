// Exact arithmetic in the group of 4x4 unitriangular integer matrices, the
// conjugation automorphism by 1+e23, its invariant sublattices, and the
// central 2-cocycle obtained from the coset section with vanishing corner
// entry.
#pragma once

#include "ut4k/lattice.hpp"
#include "ut4k/smith.hpp"

namespace ut4k {

// Upper unitriangular 4x4 integer matrix, stored by its strict upper entries.
struct UT4Element {
    Int a12, a13, a14, a23, a24, a34;

    bool operator==(const UT4Element&) const = default;
};

inline UT4Element ut4Identity() { return {}; }

// 1 + c*e(i,j), 1-based indices with i < j.
UT4Element ut4Elementary(int i, int j, const Int& c = Int(1));

UT4Element ut4Mul(const UT4Element& a, const UT4Element& b);
UT4Element ut4Inv(const UT4Element& a);
// a b a^-1 b^-1.
UT4Element ut4Commutator(const UT4Element& a, const UT4Element& b);

Eigen::Matrix<Int, 4, 4> ut4ToMatrix(const UT4Element& a);
UT4Element ut4FromMatrix(const Eigen::Matrix<Int, 4, 4>& m);

// Central elements are exactly those supported on the corner entry.
bool ut4IsCentral(const UT4Element& a);

// The coset section for the central quotient: zero out the corner entry.
UT4Element ut4CosetRep(const UT4Element& a);

// Conjugation by 1+e23.
UT4Element betaApply(const UT4Element& x);

// Induced action on Z^4 in the basis {1+e12, 1+e13, 1+e24, 1+e34} modulo the
// center (columns are images of the basis vectors).
IntMatrix betaMatrix();

// Projection of a group element to Z^4 in that basis.
IntVector ut4ToZ4(const UT4Element& a);

// The central exponent a with cocycle value e^{2 pi i a theta}:
// a = corner entry of c(x) c(y) c(xy)^(-1), which is central by construction.
Int cocycleExponent(const UT4Element& x, const UT4Element& y);

// The two rank-2 sublattices of Z^4 preserved by the conjugation action in
// both directions.
struct XySublattices {
    RationalLattice xTilde, yTilde;
};
XySublattices xySublattices();

// Verifies invariance of both sublattices under the action and its inverse,
// and reports the rank of the intersection of their spans.
struct XyInvarianceReport {
    bool betaFixesX = false, betaInvFixesX = false;
    bool betaFixesY = false, betaInvFixesY = false;
    Index intersectionRank = -1;
    bool allInvariant() const
    {
        return betaFixesX && betaInvFixesX && betaFixesY && betaInvFixesY;
    }
};
XyInvarianceReport verifyXyInvariance();

// Z^4 divided by the subgroup generated by both sublattices.
FpAbelianGroup quotientByXy();

// Brute-force check of the 2-cocycle identity
//   a(x,y) + a(xy,z) = a(y,z) + a(x,yz)
// over all triples of coset representatives whose entries lie in
// {-radius..radius} (corner entry fixed at 0). The result is independent of
// how the sweep is partitioned.
struct CocycleSweepResult {
    bool holds = false;
    long triplesChecked = 0;
};
CocycleSweepResult cocycleIdentitySweep(int radius);

} // namespace ut4k
