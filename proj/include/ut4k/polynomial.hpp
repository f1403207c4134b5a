// Exact univariate polynomial arithmetic over Q. A polynomial is a dense
// coefficient vector in ascending order; the zero polynomial is the empty
// vector (degree -1).
#pragma once

#include "ut4k/matrix.hpp"

#include <utility>
#include <vector>

namespace ut4k {

using Poly = RatVector;

Poly polyFromCoeffs(std::initializer_list<Rat> ascending);

// Degree, with deg 0 for nonzero constants and -1 for the zero polynomial.
Index polyDegree(const Poly& p);

bool polyIsZero(const Poly& p);

// Drops trailing zero coefficients.
Poly polyTrim(const Poly& p);

Rat polyLeading(const Poly& p);

Poly polyAdd(const Poly& a, const Poly& b);
Poly polySub(const Poly& a, const Poly& b);
Poly polyMul(const Poly& a, const Poly& b);
Poly polyScale(const Rat& c, const Poly& a);

// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
std::pair<Poly, Poly> polyDivRem(const Poly& a, const Poly& b);

Poly polyDerivative(const Poly& p);

Rat polyEval(const Poly& p, const Rat& x);

// Monic gcd.
Poly polyGcd(const Poly& a, const Poly& b);

Poly polyMonic(const Poly& p);

// p / gcd(p, p'): the radical of p, same roots without multiplicity.
Poly squarefreePart(const Poly& p);

// Sturm sequence of p (p assumed nonzero).
std::vector<Poly> sturmSequence(const Poly& p);

// Number of distinct real roots of p in the half-open interval (lo, hi],
// counted by Sturm sign changes. Requires lo < hi.
Index countRealRoots(const Poly& p, const Rat& lo, const Rat& hi);
Index countRealRoots(const std::vector<Poly>& sturm, const Rat& lo, const Rat& hi);

// All rational roots of p, ascending, each listed once. Exact: roots are
// isolated with Sturm sequences and integer candidates are tested directly,
// so no integer factorization is involved.
std::vector<Rat> rationalRoots(const Poly& p);

// Irreducibility over Q for degrees 1..4 (rational-root test plus, for
// quartics, a resolvent-cubic test for quadratic factorizations). Throws for
// degree 0 or degree > 4.
bool isIrreducibleUpToDeg4(const Poly& p);

// Characteristic polynomial of a square rational matrix, monic, ascending
// coefficients (Faddeev-LeVerrier).
Poly characteristicPolynomial(const RatMatrix& m);

// Interval [lo, hi] such that p maps [x.first, x.second] into it (exact
// interval Horner evaluation).
std::pair<Rat, Rat> polyEvalInterval(const Poly& p, const Rat& xlo, const Rat& xhi);

// Discriminant of the binary cubic x^3 + p x^2 y + q x y^2 + r y^3.
Rat binaryCubicDiscriminant(const Rat& p, const Rat& q, const Rat& r);

// Resultant of two univariate polynomials (via the subresultant-free
// Euclidean formula over Q).
Rat polyResultant(const Poly& a, const Poly& b);

} // namespace ut4k
