#include "ut4k/numberfield.hpp"

#include <sstream>
#include <stdexcept>

namespace ut4k {

RealAlgebraic makeRealAlgebraic(const Poly& poly, const Rat& lo, const Rat& hi)
{
    Poly p = polyTrim(poly);
    const Index d = polyDegree(p);
    if (d < 1) throw std::invalid_argument("makeRealAlgebraic: degree must be at least 1");
    p = polyMonic(p);

    RealAlgebraic a;
    a.minpoly = p;
    a.lo = lo;
    a.hi = hi;

    if (d <= 4) {
        if (!isIrreducibleUpToDeg4(p))
            throw std::invalid_argument("makeRealAlgebraic: polynomial is reducible over Q");
        a.irreducibilityChecked = true;
    } else {
        // Full factorization over Q is out of scope; catch the blatant case
        // and otherwise record that irreducibility was asserted by the caller.
        if (!rationalRoots(p).empty())
            throw std::invalid_argument("makeRealAlgebraic: polynomial has a rational root");
        a.irreducibilityChecked = false;
    }

    if (d == 1) {
        const Rat root = -p(0);
        if (!(lo <= root && root <= hi))
            throw std::invalid_argument("makeRealAlgebraic: interval does not contain the root");
        return a;
    }

    if (!(lo < hi)) throw std::invalid_argument("makeRealAlgebraic: empty interval");
    if (polyEval(p, lo).isZero() || polyEval(p, hi).isZero())
        throw std::logic_error("makeRealAlgebraic: rational root at interval endpoint");
    const Index n = countRealRoots(p, lo, hi);
    if (n != 1) {
        std::ostringstream os;
        os << "makeRealAlgebraic: interval isolates " << n << " roots (need exactly 1)";
        throw std::invalid_argument(os.str());
    }
    return a;
}

RealAlgebraic refined(const RealAlgebraic& a, int n)
{
    if (a.degree() == 1) return a;
    RealAlgebraic r = a;
    int sLo = polyEval(r.minpoly, r.lo).sign();
    for (int i = 0; i < n; ++i) {
        const Rat mid = (r.lo + r.hi) * Rat(Int(1), Int(2));
        const int sMid = polyEval(r.minpoly, mid).sign();
        if (sMid == 0) throw std::logic_error("refined: rational midpoint is a root");
        if (sMid == sLo) {
            r.lo = mid;
        } else {
            r.hi = mid;
        }
    }
    return r;
}

std::string approximateDecimal(const RealAlgebraic& a, int digits)
{
    RealAlgebraic r = a;
    if (r.degree() > 1) {
        const Rat target = Rat(Int(1), pow(Int(10), static_cast<unsigned long>(digits + 2)));
        while (r.hi - r.lo > target) r = refined(r, 1);
    } else {
        r.lo = r.hi = -r.minpoly(0);
    }
    const Rat mid = (r.lo + r.hi) * Rat(Int(1), Int(2));
    const Int scale = pow(Int(10), static_cast<unsigned long>(digits));
    const Rat scaled = mid * Rat(scale);
    Int rounded = floor(scaled + Rat(Int(1), Int(2)));
    std::string sign;
    if (rounded.sign() < 0) {
        sign = "-";
        rounded = -rounded;
    }
    const Int ip = rounded / scale;
    const Int fp = rounded % scale;
    std::string frac = fp.str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    return sign + ip.str() + "." + frac;
}

FieldElement::FieldElement(FieldPtr field, RatVector coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    if (!field_) throw std::invalid_argument("FieldElement: null field");
    if (coords_.size() != field_->degree())
        throw std::invalid_argument("FieldElement: coordinate length mismatch");
}

bool FieldElement::isZero() const
{
    for (Index i = 0; i < coords_.size(); ++i)
        if (!coords_(i).isZero()) return false;
    return true;
}

bool FieldElement::isRational() const
{
    for (Index i = 1; i < coords_.size(); ++i)
        if (!coords_(i).isZero()) return false;
    return true;
}

Rat FieldElement::rationalValue() const
{
    if (!isRational()) throw std::invalid_argument("rationalValue: element is irrational");
    return coords_(0);
}

namespace {

void requireSameField(const FieldElement& a, const FieldElement& b)
{
    if (!a.field() || !b.field()) throw std::invalid_argument("field element is uninitialized");
    if (!a.field()->sameField(*b.field()))
        throw std::invalid_argument("field mismatch between operands");
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    requireSameField(a, b);
    return FieldElement(a.field(), a.coords() + b.coords());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    requireSameField(a, b);
    return FieldElement(a.field(), a.coords() - b.coords());
}

FieldElement operator-(const FieldElement& a)
{
    return FieldElement(a.field(), -a.coords());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    requireSameField(a, b);
    return FieldElement(a.field(), a.field()->mulCoords(a.coords(), b.coords()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    requireSameField(a, b);
    return FieldElement(a.field(), a.field()->mulCoords(a.coords(), b.field()->invCoords(b.coords())));
}

bool operator==(const FieldElement& a, const FieldElement& b)
{
    requireSameField(a, b);
    for (Index i = 0; i < a.coords().size(); ++i)
        if (!(a.coords()(i) == b.coords()(i))) return false;
    return true;
}

FieldElement FieldElement::pow(unsigned long e) const
{
    FieldElement acc = field_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

NumberField::NumberField(RealAlgebraic gen) : gen_(std::move(gen))
{
    const Index d = degree();
    // Row k: coordinates of theta^(d+k) on the power basis.
    powerTable_ = RatMatrix::Zero(std::max<Index>(d - 1, 0), d);
    RatVector cur(d); // theta^d = -(c_0 + c_1 theta + ...)
    for (Index j = 0; j < d; ++j) cur(j) = -gen_.minpoly(j);
    for (Index k = 0; k + 1 < d; ++k) {
        powerTable_.row(k) = cur.transpose();
        // Multiply by theta: shift, then reduce the overflow term.
        RatVector next = RatVector::Zero(d);
        for (Index j = 0; j + 1 < d; ++j) next(j + 1) = cur(j);
        const Rat top = cur(d - 1);
        if (!top.isZero())
            for (Index j = 0; j < d; ++j) next(j) += top * -gen_.minpoly(j);
        cur = next;
    }
}

FieldPtr NumberField::create(const RealAlgebraic& generator)
{
    const RealAlgebraic validated = makeRealAlgebraic(generator.minpoly, generator.lo, generator.hi);
    return FieldPtr(new NumberField(validated));
}

FieldElement NumberField::zero() const
{
    return FieldElement(shared_from_this(), RatVector::Zero(degree()));
}

FieldElement NumberField::one() const { return fromRational(Rat(1)); }

FieldElement NumberField::theta() const
{
    RatVector c = RatVector::Zero(degree());
    if (degree() == 1)
        c(0) = -gen_.minpoly(0);
    else
        c(1) = Rat(1);
    return FieldElement(shared_from_this(), c);
}

FieldElement NumberField::fromRational(const Rat& r) const
{
    RatVector c = RatVector::Zero(degree());
    c(0) = r;
    return FieldElement(shared_from_this(), c);
}

FieldElement NumberField::element(const RatVector& coords) const
{
    return FieldElement(shared_from_this(), coords);
}

FieldElement NumberField::thetaPower(unsigned long k) const
{
    return theta().pow(k);
}

RatVector NumberField::mulCoords(const RatVector& a, const RatVector& b) const
{
    const Index d = degree();
    RatVector prod = RatVector::Zero(2 * d - 1);
    for (Index i = 0; i < d; ++i) {
        if (a(i).isZero()) continue;
        for (Index j = 0; j < d; ++j) prod(i + j) += a(i) * b(j);
    }
    RatVector res = prod.head(d);
    for (Index k = d; k < 2 * d - 1; ++k) {
        if (prod(k).isZero()) continue;
        for (Index j = 0; j < d; ++j) res(j) += prod(k) * powerTable_(k - d, j);
    }
    return res;
}

RatVector NumberField::invCoords(const RatVector& a) const
{
    const Index d = degree();
    Poly r0 = gen_.minpoly;
    Poly r1 = polyTrim(a);
    if (polyIsZero(r1)) throw std::invalid_argument("invCoords: division by zero element");
    Poly t0, t1 = polyFromCoeffs({Rat(1)});
    while (polyDegree(r1) > 0) {
        auto [q, r] = polyDivRem(r0, r1);
        Poly t = polySub(t0, polyMul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    // r1 is a nonzero constant: gcd(a, minpoly) = 1 since minpoly is irreducible.
    if (polyIsZero(r1)) throw std::logic_error("invCoords: generator polynomial not irreducible");
    const Poly inv = polyScale(inverse(r1(0)), t1);
    RatVector c = RatVector::Zero(d);
    for (Index i = 0; i < inv.size() && i < d; ++i) c(i) = inv(i);
    if (inv.size() > d) throw std::logic_error("invCoords: inverse degree out of range");
    return c;
}

bool NumberField::sameField(const NumberField& other) const
{
    if (this == &other) return true;
    if (degree() != other.degree()) return false;
    for (Index i = 0; i < gen_.minpoly.size(); ++i)
        if (!(gen_.minpoly(i) == other.gen_.minpoly(i))) return false;
    if (gen_.lo == other.gen_.lo && gen_.hi == other.gen_.hi) return true;
    if (degree() == 1) return true;
    // Same minimal polynomial, different isolating intervals: the fields
    // agree exactly when the intervals isolate the same root, i.e. the
    // intersection still contains a root.
    const Rat lo = std::max(gen_.lo, other.gen_.lo);
    const Rat hi = std::min(gen_.hi, other.gen_.hi);
    if (!(lo < hi)) return false; // an endpoint root would be rational
    return countRealRoots(gen_.minpoly, lo, hi) == 1;
}

int signOf(const FieldElement& a)
{
    if (a.isZero()) return 0;
    if (a.isRational()) return a.coords()(0).sign();
    RealAlgebraic t = a.field()->generator();
    const Poly p = polyTrim(a.coords());
    for (int iter = 0; iter < 100000; ++iter) {
        const auto [lo, hi] = polyEvalInterval(p, t.lo, t.hi);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        t = refined(t, 1);
    }
    // a is nonzero (coordinates over an irreducible power basis), so the
    // interval eventually separates from zero.
    throw std::logic_error("signOf: sign determination did not converge");
}

int compareReal(const FieldElement& a, const FieldElement& b)
{
    return signOf(a - b);
}

Poly minimalPolynomial(const FieldElement& a)
{
    const Index d = a.field()->degree();
    RatMatrix mult(d, d);
    for (Index j = 0; j < d; ++j) {
        RatVector ej = RatVector::Zero(d);
        ej(j) = Rat(1);
        const RatVector col = a.field()->mulCoords(a.coords(), ej);
        for (Index i = 0; i < d; ++i) mult(i, j) = col(i);
    }
    // The characteristic polynomial of multiplication by a is minpoly(a)
    // raised to the power d/deg(a); its squarefree part is the minimal
    // polynomial itself.
    return squarefreePart(characteristicPolynomial(mult));
}

std::optional<std::pair<int, Int>> integerTranslateClass(const FieldElement& eta)
{
    const FieldPtr& f = eta.field();
    const FieldElement theta = f->theta();
    for (int sign : {1, -1}) {
        const FieldElement diff = sign > 0 ? eta - theta : eta + theta;
        if (diff.isRational() && diff.rationalValue().isInteger())
            return std::make_pair(sign, diff.rationalValue().num());
    }
    return std::nullopt;
}

std::pair<Int, Int> extractSquare(const Int& n)
{
    if (n.sign() <= 0) throw std::invalid_argument("extractSquare: needs a positive integer");
    Int square(1), free(1);
    Int m = n;
    Int p(2);
    const Int limit(1000000);
    while (p * p <= m && p <= limit) {
        if (divides(p, m)) {
            int count = 0;
            while (divides(p, m)) {
                m = divExact(m, p);
                ++count;
            }
            for (int i = 0; i < count / 2; ++i) square *= p;
            if (count % 2 == 1) free *= p;
        }
        p += (p == Int(2)) ? Int(1) : Int(2);
    }
    // The unfactored remainder is squarefree unless it is a perfect square
    // (it has no prime factor below the trial bound).
    if (m.isPerfectSquare()) {
        square *= isqrt(m);
    } else {
        free *= m;
    }
    return {square, free};
}

namespace {

// Compares y*sqrt(r) with the rational t (r > 0).
int compareSurdPart(const Int& y, const Int& r, const Rat& t)
{
    const int sy = y.sign();
    const int st = t.sign();
    if (sy == 0) return -st;
    if (sy > 0 && st <= 0) return 1;
    if (sy < 0 && st >= 0) return -1;
    // Same strict sign: compare squares, flipping for the negative branch.
    const Rat lhs = Rat(y * y * r);
    const Rat rhs = t * t;
    const int c = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    return sy > 0 ? c : -c;
}

bool surdInInterval(const Int& x, const Int& y, const Int& z, const Int& r,
                    const Rat& lo, const Rat& hi)
{
    // (x + y sqrt(r))/z vs bounds, z > 0.
    const Rat zr(z);
    return compareSurdPart(y, r, lo * zr - Rat(x)) >= 0 &&
           compareSurdPart(y, r, hi * zr - Rat(x)) <= 0;
}

} // namespace

QuadraticSurd canonicalSurd(const QuadraticSurd& q)
{
    if (q.z.isZero()) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (q.y.isZero()) throw std::invalid_argument("QuadraticSurd: y = 0 is rational");
    if (q.kDen.isZero()) throw std::invalid_argument("QuadraticSurd: radicand denominator is zero");
    if ((q.kNum * q.kDen).sign() <= 0)
        throw std::invalid_argument("QuadraticSurd: radicand must be positive for a real value");

    // sqrt(kn/kd) = sqrt(kn*kd)/kd; split off the square part.
    Int kn = abs(q.kNum), kd = abs(q.kDen);
    const Int g = gcd(kn, kd);
    kn = divExact(kn, g);
    kd = divExact(kd, g);
    const auto [s, radicand] = extractSquare(kn * kd);
    if (radicand.isOne())
        throw std::invalid_argument("QuadraticSurd: radicand is a rational square");

    Int x = q.x * kd, y = q.y * s, z = q.z * kd;
    if (z.sign() < 0) {
        x = -x;
        y = -y;
        z = -z;
    }
    const Int c = gcd(gcd(abs(x), abs(y)), z);
    if (!c.isOne()) {
        x = divExact(x, c);
        y = divExact(y, c);
        z = divExact(z, c);
    }
    return {x, y, z, radicand, Int(1)};
}

std::pair<FieldPtr, FieldElement> surdToField(const QuadraticSurd& q0)
{
    const QuadraticSurd q = canonicalSurd(q0);
    // theta = (x + y sqrt(r))/z satisfies theta^2 - (2x/z) theta + (x^2 - y^2 r)/z^2.
    const Rat c1 = Rat(Int(-2) * q.x, q.z);
    const Rat c0 = Rat(q.x * q.x - q.y * q.y * q.kNum, q.z * q.z);
    const Poly minpoly = polyFromCoeffs({c0, c1, Rat(1)});

    // Isolate: bracket sqrt(r) and shrink until the interval separates the
    // two conjugate roots.
    Rat slo(1), shi(Rat(q.kNum));
    for (int iter = 0;; ++iter) {
        Rat lo, hi;
        if (q.y.sign() > 0) {
            lo = (Rat(q.x) + Rat(q.y) * slo) / Rat(q.z);
            hi = (Rat(q.x) + Rat(q.y) * shi) / Rat(q.z);
        } else {
            lo = (Rat(q.x) + Rat(q.y) * shi) / Rat(q.z);
            hi = (Rat(q.x) + Rat(q.y) * slo) / Rat(q.z);
        }
        if (countRealRoots(minpoly, lo, hi) == 1) {
            const RealAlgebraic gen = makeRealAlgebraic(minpoly, lo, hi);
            const FieldPtr field = NumberField::create(gen);
            return {field, field->theta()};
        }
        if (iter > 10000) throw std::logic_error("surdToField: isolation did not converge");
        const Rat mid = (slo + shi) * Rat(Int(1), Int(2));
        if (mid * mid < Rat(q.kNum))
            slo = mid;
        else
            shi = mid;
    }
}

QuadraticSurd surdFromField(const RealAlgebraic& theta)
{
    if (theta.degree() != 2) throw std::invalid_argument("surdFromField: field degree is not 2");
    const Rat c1 = theta.minpoly(1), c0 = theta.minpoly(0);
    const Rat disc = c1 * c1 - Rat(4) * c0;
    if (disc.sign() <= 0) throw std::logic_error("surdFromField: no real roots");
    // sqrt(disc) = (s / den(disc)) * sqrt(radicand).
    const auto [s, radicand] = extractSquare(disc.num() * disc.den());
    // Roots: -c1/2 +- (s/(2*den)) sqrt(radicand).
    const Rat p = -c1 * Rat(Int(1), Int(2));
    const Rat t = Rat(s, Int(2) * disc.den());
    const Int z = lcm(p.den(), t.den());
    const Int x = (p * Rat(z)).num();
    const Int yAbs = (t * Rat(z)).num();
    for (const Int& y : {yAbs, -yAbs}) {
        if (surdInInterval(x, y, z, radicand, theta.lo, theta.hi)) {
            QuadraticSurd q{x, y, z, radicand, Int(1)};
            return canonicalSurd(q);
        }
    }
    throw std::logic_error("surdFromField: neither conjugate lies in the isolating interval");
}

std::optional<FieldElement> surdInField(const FieldPtr& field, const QuadraticSurd& q0)
{
    if (field->degree() != 2) return std::nullopt;
    const QuadraticSurd base = surdFromField(field->generator());
    const QuadraticSurd q = canonicalSurd(q0);
    if (!(q.kNum == base.kNum)) return std::nullopt;
    // sqrt(r) = (Z theta - X)/Y, hence (x + y sqrt(r))/z expands to
    // coordinates over {1, theta}.
    const Rat sqrtConst = Rat(-base.x, base.y);
    const Rat sqrtTheta = Rat(base.z, base.y);
    const Rat c0 = Rat(q.x, q.z) + Rat(q.y, q.z) * sqrtConst;
    const Rat c1 = Rat(q.y, q.z) * sqrtTheta;
    RatVector coords(2);
    coords(0) = c0;
    coords(1) = c1;
    return field->element(coords);
}

} // namespace ut4k
