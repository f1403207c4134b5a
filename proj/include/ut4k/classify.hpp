// Decides when two of the algebras are isomorphic and enumerates the
// companions of a given theta. The uniform criterion is equality of the
// trace-range subgroups Z + theta Z + theta^2 Z of R; a positive verdict is
// always backed by an integer change-of-basis certificate in GL(3,Z) carrying
// (1, theta, theta^2) to (1, eta, eta^2).
#pragma once

#include "ut4k/ktheory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ut4k {

struct Certificate {
    IntMatrix a; // 3x3, det +-1, a (1,theta,theta^2)^t = (1,eta,eta^2)^t
};

// Exact recheck of both certificate invariants, independent of construction.
bool verifyCertificate(const FieldPtr& field, const FieldElement& eta, const IntMatrix& a);

enum class IsoVerdict { Isomorphic, NotIsomorphic };

struct ClassificationResult {
    IsoVerdict verdict = IsoVerdict::NotIsomorphic;
    std::optional<Certificate> certificate;
    std::string degreeCase;
    RationalLattice traceLatticeTheta, traceLatticeEta; // power-basis coordinates
    // Set when eta is theta or a mirror translate (the certificate is then
    // the explicit triangular matrix).
    std::optional<std::pair<int, Int>> translate;
};

// eta must live in Q(theta); throws DomainError when eta is rational. The
// verdict is bound-free: lattice equality is decidable exactly.
ClassificationResult decideIsomorphic(const FieldPtr& field, const FieldElement& eta);

// eta given in surd form. When theta is not quadratic over the same
// squarefree radicand the verdict is immediately negative (the fields, hence
// the trace ranges, differ).
ClassificationResult decideIsomorphicSurd(const FieldPtr& field, const QuadraticSurd& eta);

// Certificate for an isomorphic pair; empty when the pair is not isomorphic.
// For eta = +-theta + k the explicit triangular matrix
// [[1,0,0],[k,+-1,0],[k^2,+-2k,1]] is returned.
std::optional<Certificate> certificateFor(const FieldPtr& field, const FieldElement& eta);

// One representative per equivalence class {+-eta + Z}, normalized: constant
// coordinate reduced into [0,1), then the lexicographically smaller of the
// two sign choices.
FieldElement normalizeClassRep(const FieldElement& eta);

struct EquivalentsList {
    std::vector<FieldElement> classes; // normalized, sorted, pairwise distinct
    bool complete = true;              // false only for the bounded cubic search
    Int bound = Int(0);
    std::string degreeCase;
};

// All eta equivalent to theta, by degree: a single class for degree > 4; at
// most two classes for degree 4 (exact test); a bounded search on a cubic
// Thue equation for degree 3 (complete only up to the bound, and flagged so);
// a finite divisor-constrained search for degree 2.
EquivalentsList enumerateEquivalents(const FieldPtr& field, const Int& bound);

// Integer points of a^3 + p a^2 b + q a b^2 + r b^3 = 1 with |a|,|b| <= bound
// for which the induced 3x3 matrix has integer entries and determinant 1.
struct CubicPoint {
    Int a, b;
    IntMatrix mat; // the certificate candidate for eta = a theta + b theta^2
};
std::vector<CubicPoint> cubicIntegerPoints(const Rat& p, const Rat& q, const Rat& r, const Int& bound);

// Degree-4 test: mu = lambda3^3/8 - lambda3 lambda2/2 + lambda1. A companion
// class exists iff 1/mu is the cube of a nonzero integer k and the
// reconstructed matrix is integral with determinant 1; then zeta =
// (k lambda3 / 2) theta + k theta^2.
struct Degree4Companion {
    Rat mu;
    std::optional<Int> k;
    std::optional<IntMatrix> mat;
    // Coefficients of zeta on (theta, theta^2); set iff k is set.
    std::optional<std::pair<Int, Int>> zetaCoeffs;
};
Degree4Companion degree4Mu(const Rat& lambda3, const Rat& lambda2, const Rat& lambda1, const Rat& lambda0);

// Degree-2 enumeration: candidates (x + y sqrt(k))/z are bounded by the
// divisor constraints z | c^2 s and y/(zw) = b/(cd), then validated by exact
// lattice equality. Finite, no search bound involved.
EquivalentsList quadraticEquivalents(const QuadraticSurd& theta);

// Exact nonsingularity of the projective curve
// X^3 + p X^2 Y + q X Y^2 + r Y^3 - Z^3 = 0, reported as two sub-checks: the
// affine system F = F_x = F_y = 0 (resultant/gcd elimination over Q) and the
// line at infinity (discriminant of the binary cubic).
struct NonsingularityReport {
    bool affineNoSingularPoints = false;
    Rat partialsResultant;     // resultant of the two partial derivatives in x,y
    Rat infinityDiscriminant;  // discriminant of the degree-3 binary form
    bool nonsingularAtInfinity = false;
    bool nonsingular() const { return affineNoSingularPoints && nonsingularAtInfinity; }
};
NonsingularityReport verifyNonsingularCubic(const Rat& p, const Rat& q, const Rat& r);

} // namespace ut4k
