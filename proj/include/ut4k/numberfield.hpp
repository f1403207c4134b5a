// Exact arithmetic in Q(theta) for a real algebraic theta given by a monic
// minimal polynomial and an isolating interval with rational endpoints.
#pragma once

#include "ut4k/polynomial.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace ut4k {

// A real algebraic number: a monic rational polynomial, irreducible over Q,
// together with an interval containing exactly one of its real roots.
struct RealAlgebraic {
    Poly minpoly;            // monic, ascending coefficients
    Rat lo, hi;              // lo <= theta <= hi, the only root in the interval
    bool irreducibilityChecked = false; // verified for degree <= 4, asserted above

    Index degree() const { return polyDegree(minpoly); }
};

// Validates and normalizes: monic polynomial, irreducible (verified up to
// degree 4; higher degrees are taken on trust and flagged), interval
// isolating exactly one real root. Throws std::invalid_argument otherwise.
RealAlgebraic makeRealAlgebraic(const Poly& monicPoly, const Rat& lo, const Rat& hi);

// Halves the isolating interval n times (sign-change bisection).
RealAlgebraic refined(const RealAlgebraic& a, int n);

// Decimal approximation accurate to the stated number of fractional digits.
std::string approximateDecimal(const RealAlgebraic& a, int digits);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, RatVector coords);

    const FieldPtr& field() const { return field_; }
    const RatVector& coords() const { return coords_; }
    Index degree() const { return coords_.size(); }

    bool isZero() const;
    bool isRational() const;
    // The value as a rational; requires isRational().
    Rat rationalValue() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    FieldElement pow(unsigned long e) const;

private:
    FieldPtr field_;
    RatVector coords_;
};

// The field Q(theta), with the power basis 1, theta, ..., theta^(d-1).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(const RealAlgebraic& generator);

    const RealAlgebraic& generator() const { return gen_; }
    Index degree() const { return gen_.degree(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;           // the generator as an element
    FieldElement fromRational(const Rat& r) const;
    FieldElement element(const RatVector& coords) const;
    // theta^k for any k >= 0 (reduced).
    FieldElement thetaPower(unsigned long k) const;

    // Product of two coordinate vectors, reduced mod the minimal polynomial.
    RatVector mulCoords(const RatVector& a, const RatVector& b) const;
    RatVector invCoords(const RatVector& a) const;

    bool sameField(const NumberField& other) const;

private:
    explicit NumberField(RealAlgebraic gen);

    RealAlgebraic gen_;
    // Row k holds the coordinates of theta^(d+k), k = 0..d-2.
    RatMatrix powerTable_;
};

// Exact sign of the real number represented by a (evaluated at the
// distinguished root of the field generator): -1, 0 or +1.
int signOf(const FieldElement& a);

// Comparison of field elements as real numbers.
int compareReal(const FieldElement& a, const FieldElement& b);

// Monic minimal polynomial of a over Q (squarefree part of the
// characteristic polynomial of multiplication by a). Its degree divides the
// field degree.
Poly minimalPolynomial(const FieldElement& a);

// Detects eta = +theta + k or eta = -theta + k with k an integer; returns
// (sign, k) with sign in {+1, -1} or nothing.
std::optional<std::pair<int, Int>> integerTranslateClass(const FieldElement& eta);

// A real quadratic irrational (x + y*sqrt(k))/z with k = kNum/kDen > 0 and
// not a rational square; y != 0.
struct QuadraticSurd {
    Int x, y, z;
    Int kNum, kDen;
};

// Canonical form: gcd(x,y,z) = 1, z > 0, and the radicand is a squarefree
// integer (kDen = 1), absorbing square factors into y.
QuadraticSurd canonicalSurd(const QuadraticSurd& q);

// The field Q(theta) for theta = (x + y*sqrt(k))/z, plus theta itself.
std::pair<FieldPtr, FieldElement> surdToField(const QuadraticSurd& q);

// Writes a degree-2 field generator back in canonical surd form.
QuadraticSurd surdFromField(const RealAlgebraic& theta);

// Coordinates of (x + y*sqrt(k))/z inside an existing degree-2 field whose
// generator has the same squarefree radicand; empty if the radicands differ.
std::optional<FieldElement> surdInField(const FieldPtr& field, const QuadraticSurd& q);

// Largest square factor: n = s^2 * f with f squarefree (trial division; n is
// expected to be small here).
std::pair<Int, Int> extractSquare(const Int& n);

} // namespace ut4k
