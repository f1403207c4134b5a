#include "ut4k/classify.hpp"

#include "ut4k/errors.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ut4k {

namespace {

// Lattice Z + u Z + u^2 Z in the power-basis coordinates of u's field.
RationalLattice traceLattice(const FieldPtr& field, const FieldElement& u)
{
    const Index d = field->degree();
    RatMatrix gens(3, d);
    gens.row(0) = field->one().coords().transpose();
    gens.row(1) = u.coords().transpose();
    gens.row(2) = (u * u).coords().transpose();
    return latticeFromGenerators(gens, d);
}

IntMatrix translateCertificate(int sign, const Int& k)
{
    IntMatrix a(3, 3);
    a << Int(1), Int(0), Int(0),
         k, Int(sign), Int(0),
         k * k, Int(2 * sign) * k, Int(1);
    return a;
}

// det of m with row `row` replaced by g.
Int detWithRow(const IntMatrix& m, Index row, const IntVector& g)
{
    IntMatrix t = m;
    for (Index j = 0; j < m.cols(); ++j) t(row, j) = g(j);
    return determinant(t);
}

// Integer solution of n1 d1 + n2 d2 + n3 d3 = target, if any.
std::optional<std::array<Int, 3>> solveTernary(const Int& d1, const Int& d2, const Int& d3, const Int& target)
{
    const ExtGcd e12 = extendedGcd(d1, d2);
    const ExtGcd e = extendedGcd(e12.g, d3);
    if (e.g.isZero()) {
        if (!target.isZero()) return std::nullopt;
        return std::array<Int, 3>{Int(0), Int(0), Int(0)};
    }
    if (!divides(e.g, target)) return std::nullopt;
    const Int m = divExact(target, e.g);
    return std::array<Int, 3>{m * e.x * e12.x, m * e.x * e12.y, m * e.y};
}

// General certificate construction: each row of the matrix solves
// row . (1, theta, theta^2) = target over Z, and for degree 2 the rows carry
// a one-parameter family (the primitive relation vector) used to adjust the
// determinant to +-1.
std::optional<IntMatrix> buildCertificate(const FieldPtr& field, const FieldElement& eta)
{
    const Index d = field->degree();
    const FieldElement one = field->one();
    const FieldElement theta = field->theta();
    const FieldElement theta2 = field->thetaPower(2);
    const FieldElement eta2 = eta * eta;
    const std::array<FieldElement, 3> targets = {one, eta, eta2};

    if (d >= 3) {
        // 1, theta, theta^2 are independent: rows are the (unique) power-basis
        // coordinates, which must be integral and supported on the first three
        // coordinates.
        IntMatrix a(3, 3);
        for (Index i = 0; i < 3; ++i) {
            const RatVector& c = targets[static_cast<size_t>(i)].coords();
            for (Index j = 3; j < d; ++j)
                if (!c(j).isZero()) return std::nullopt;
            for (Index j = 0; j < 3; ++j) {
                if (!c(j).isInteger()) return std::nullopt;
                a(i, j) = c(j).num();
            }
        }
        if (!isUnimodular(a)) return std::nullopt;
        return a;
    }

    // Degree 2: solve the underdetermined integer system per row. Clear all
    // denominators once so the systems are integral.
    RatMatrix basis(3, 2);
    basis.row(0) = one.coords().transpose();
    basis.row(1) = theta.coords().transpose();
    basis.row(2) = theta2.coords().transpose();
    Int den(1);
    for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 2; ++j) den = lcm(den, basis(i, j).den());
        den = lcm(den, targets[static_cast<size_t>(i)].coords()(0).den());
        den = lcm(den, targets[static_cast<size_t>(i)].coords()(1).den());
    }
    IntMatrix system(2, 3); // (basis scaled)^T
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 2; ++j) system(j, i) = (basis(i, j) * Rat(den)).num();

    IntMatrix a0(3, 3);
    for (Index i = 0; i < 3; ++i) {
        IntVector rhs(2);
        for (Index j = 0; j < 2; ++j)
            rhs(j) = (targets[static_cast<size_t>(i)].coords()(j) * Rat(den)).num();
        const auto sol = solveDiophantine(system, rhs);
        if (!sol) return std::nullopt;
        for (Index j = 0; j < 3; ++j) a0(i, j) = (*sol)(j);
    }

    const IntMatrix ker = kernelBasis(system);
    if (ker.rows() != 1) throw std::logic_error("buildCertificate: relation space is not rank 1");
    IntVector g(3);
    for (Index j = 0; j < 3; ++j) g(j) = ker(0, j);

    // det(a0 + sum n_i e_i g^t) = det a0 + sum n_i det(a0 with row i -> g).
    const Int det0 = determinant(a0);
    const Int d1 = detWithRow(a0, 0, g);
    const Int d2 = detWithRow(a0, 1, g);
    const Int d3 = detWithRow(a0, 2, g);
    for (const Int& target : {Int(1) - det0, Int(-1) - det0}) {
        const auto n = solveTernary(d1, d2, d3, target);
        if (!n) continue;
        IntMatrix a = a0;
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) a(i, j) += (*n)[static_cast<size_t>(i)] * g(j);
        if (!isUnimodular(a)) throw std::logic_error("buildCertificate: determinant adjustment failed");
        return a;
    }
    return std::nullopt;
}

} // namespace

bool verifyCertificate(const FieldPtr& field, const FieldElement& eta, const IntMatrix& a)
{
    if (a.rows() != 3 || a.cols() != 3) return false;
    if (!isUnimodular(a)) return false;
    const FieldElement eta2 = eta * eta;
    const std::array<FieldElement, 3> targets = {field->one(), eta, eta2};
    for (Index i = 0; i < 3; ++i) {
        FieldElement acc = field->zero();
        for (Index j = 0; j < 3; ++j)
            acc = acc + field->fromRational(Rat(a(i, j))) * field->thetaPower(static_cast<unsigned long>(j));
        if (!(acc == targets[static_cast<size_t>(i)])) return false;
    }
    return true;
}

ClassificationResult decideIsomorphic(const FieldPtr& field, const FieldElement& eta)
{
    if (!eta.field() || !eta.field()->sameField(*field))
        throw std::invalid_argument("decideIsomorphic: eta must live in the theta field");
    if (field->degree() < 2 || eta.isRational())
        throw DomainError("decideIsomorphic: both numbers must be irrational");

    ClassificationResult r;
    r.degreeCase = "degree " + std::to_string(field->degree());
    r.traceLatticeTheta = traceLattice(field, field->theta());
    r.traceLatticeEta = traceLattice(field, eta);
    r.translate = integerTranslateClass(eta);

    if (!latticeEqual(r.traceLatticeTheta, r.traceLatticeEta)) {
        r.verdict = IsoVerdict::NotIsomorphic;
        return r;
    }
    r.verdict = IsoVerdict::Isomorphic;

    std::optional<IntMatrix> a;
    if (r.translate) a = translateCertificate(r.translate->first, r.translate->second);
    else a = buildCertificate(field, eta);
    if (!a || !verifyCertificate(field, eta, *a))
        throw std::logic_error("decideIsomorphic: equal trace lattices but no verifiable certificate");
    r.certificate = Certificate{*a};
    return r;
}

ClassificationResult decideIsomorphicSurd(const FieldPtr& field, const QuadraticSurd& eta)
{
    const auto elt = surdInField(field, eta);
    if (!elt) {
        ClassificationResult r;
        r.verdict = IsoVerdict::NotIsomorphic;
        r.degreeCase = "quadratic radicands differ (distinct fields)";
        if (field->degree() >= 2) r.traceLatticeTheta = traceLattice(field, field->theta());
        return r;
    }
    if (elt->isRational()) throw DomainError("decideIsomorphicSurd: eta is rational");
    return decideIsomorphic(field, *elt);
}

std::optional<Certificate> certificateFor(const FieldPtr& field, const FieldElement& eta)
{
    ClassificationResult r = decideIsomorphic(field, eta);
    if (r.verdict != IsoVerdict::Isomorphic) return std::nullopt;
    return r.certificate;
}

FieldElement normalizeClassRep(const FieldElement& eta)
{
    const FieldPtr& f = eta.field();
    auto reduce = [&](const FieldElement& e) {
        RatVector c = e.coords();
        c(0) = c(0) - Rat(floor(c(0)));
        return f->element(c);
    };
    const FieldElement plus = reduce(eta);
    const FieldElement minus = reduce(-eta);
    // Lexicographic comparison of coordinate vectors.
    for (Index i = 0; i < plus.coords().size(); ++i) {
        if (plus.coords()(i) < minus.coords()(i)) return plus;
        if (minus.coords()(i) < plus.coords()(i)) return minus;
    }
    return plus;
}

namespace {

void addClass(std::vector<FieldElement>& classes, const FieldElement& eta)
{
    const FieldElement rep = normalizeClassRep(eta);
    for (const FieldElement& c : classes)
        if (c == rep) return;
    classes.push_back(rep);
}

bool coordsLexLess(const FieldElement& a, const FieldElement& b)
{
    for (Index i = 0; i < a.coords().size(); ++i) {
        if (a.coords()(i) < b.coords()(i)) return true;
        if (b.coords()(i) < a.coords()(i)) return false;
    }
    return false;
}

std::vector<Int> positiveDivisors(const Int& n0)
{
    Int n = abs(n0);
    if (n.isZero()) throw std::invalid_argument("positiveDivisors: zero");
    std::vector<Int> small, large;
    Int p(1);
    long guard = 0;
    while (p * p <= n) {
        if (divides(p, n)) {
            small.push_back(p);
            const Int q = divExact(n, p);
            if (!(q == p)) large.push_back(q);
        }
        p += Int(1);
        if (++guard > 20000000L)
            throw DomainError("positiveDivisors: denominator too large to enumerate");
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace

namespace {

// Emits (a, b) when F(a, b) = 1 survives the matrix reconstruction filter.
void emitCubicPoint(std::vector<CubicPoint>& out, const Int& av, const Int& bv,
                    const Rat& l2, const Rat& l1, const Rat& l0)
{
    const Rat ar(av), br(bv);
    const Rat t = Rat(2) * ar * br - br * br * l2;
    const Rat e = ar * ar - br * br * l1 - t * l2;
    const Rat dd = -t * l1 - br * br * l0;
    const Rat cc = -t * l0;
    if (!cc.isInteger() || !dd.isInteger() || !e.isInteger()) return;
    IntMatrix m(3, 3);
    m << Int(1), Int(0), Int(0),
         Int(0), av, bv,
         cc.num(), dd.num(), e.num();
    if (!(determinant(m) == Int(1))) return;
    out.push_back({av, bv, m});
}

} // namespace

std::vector<CubicPoint> cubicIntegerPoints(const Rat& p, const Rat& q, const Rat& r, const Int& bound)
{
    if (bound < Int(1)) throw std::invalid_argument("cubicIntegerPoints: bound must be >= 1");
    // Recover the monic cubic lambda's: p = -2 l2, q = l2^2 + l1, r = l0 - l1 l2.
    const Rat l2 = -p * Rat(Int(1), Int(2));
    const Rat l1 = q - l2 * l2;
    const Rat l0 = r + l1 * l2;

    // Clear denominators: L a^3 + P a^2 b + Q a b^2 + R b^3 = L over Z.
    const Int clear = lcm(lcm(p.den(), q.den()), r.den());
    const Rat clearR(clear);
    const Int cp = (p * clearR).num(), cq = (q * clearR).num(), cr = (r * clearR).num();

    std::vector<CubicPoint> out;
    if (!bound.fitsLong()) throw std::invalid_argument("cubicIntegerPoints: bound does not fit a machine word");
    const long b = bound.toLong();

    // With |a|,|b| <= B every Horner intermediate is bounded by
    // 4 max|coef| (B+1)^3, so 128-bit arithmetic is exact whenever the
    // coefficients and that bound fit; otherwise fall back to big integers.
    const Int cap = (abs(cp) + abs(cq) + abs(cr) + abs(clear) + Int(1)) * pow(Int(b) + Int(1), 3) * Int(8);
    const bool fits = cap < pow(Int(2), 126) && cp.fitsLong() && cq.fitsLong() && cr.fitsLong() && clear.fitsLong();

    if (fits) {
        const __int128 fp = cp.toLong(), fq = cq.toLong(), fr = cr.toLong(), fl = clear.toLong();
        for (long ai = -b; ai <= b; ++ai) {
            const __int128 a = ai;
            const __int128 c2 = fp * a * a;
            const __int128 c1 = fq * a;
            const __int128 c0 = fl * a * a * a - fl;
            for (long bi = -b; bi <= b; ++bi) {
                const __int128 bb = bi;
                const __int128 acc = ((fr * bb + c1) * bb + c2) * bb + c0;
                if (acc != 0) continue;
                emitCubicPoint(out, Int(ai), Int(bi), l2, l1, l0);
            }
        }
    } else {
        Int av, bv, acc;
        for (long ai = -b; ai <= b; ++ai) {
            av = Int(ai);
            const Int c2 = cp * av * av;
            const Int c1 = cq * av;
            const Int c0 = clear * av * av * av - clear;
            for (long bi = -b; bi <= b; ++bi) {
                bv = Int(bi);
                acc = cr * bv + c1;
                acc *= bv;
                acc += c2;
                acc *= bv;
                acc += c0;
                if (!acc.isZero()) continue;
                emitCubicPoint(out, av, bv, l2, l1, l0);
            }
        }
    }
    // The loops already emit in lexicographic (a, b) order.
    return out;
}

Degree4Companion degree4Mu(const Rat& lambda3, const Rat& lambda2, const Rat& lambda1, const Rat& lambda0)
{
    Degree4Companion res;
    const Rat eighth(Int(1), Int(8));
    const Rat half(Int(1), Int(2));
    res.mu = eighth * lambda3 * lambda3 * lambda3 - half * lambda3 * lambda2 + lambda1;
    if (res.mu.isZero()) return res;
    const Rat inv = inverse(res.mu);
    if (!inv.isInteger()) return res;
    // 1/mu must be the cube of a nonzero integer.
    mpz_class root;
    const int exact = mpz_root(root.get_mpz_t(), inv.num().raw().get_mpz_t(), 3);
    if (exact == 0) return res;
    const Int k(root);
    if (k.isZero()) return res;

    const Rat kr(k);
    const Rat aCoeff = half * kr * lambda3;
    const Rat eCoeff = Rat(Int(1), Int(4)) * kr * kr * lambda3 * lambda3 - kr * kr * lambda2;
    const Rat dCoeff = -kr * kr * lambda1;
    const Rat cCoeff = -kr * kr * lambda0;
    if (!aCoeff.isInteger() || !eCoeff.isInteger() || !dCoeff.isInteger() || !cCoeff.isInteger())
        return res;
    IntMatrix m(3, 3);
    m << Int(1), Int(0), Int(0),
         Int(0), aCoeff.num(), k,
         cCoeff.num(), dCoeff.num(), eCoeff.num();
    if (!(determinant(m) == Int(1))) return res;
    res.k = k;
    res.mat = m;
    res.zetaCoeffs = std::make_pair(aCoeff.num(), k);
    return res;
}

EquivalentsList quadraticEquivalents(const QuadraticSurd& theta0)
{
    const QuadraticSurd theta = canonicalSurd(theta0);
    auto [field, thetaElt] = surdToField(theta);

    EquivalentsList list;
    list.degreeCase = "degree 2";
    list.complete = true;
    addClass(list.classes, thetaElt);

    const RationalLattice target = traceLattice(field, thetaElt);
    // theta = (a + b sqrt(k))/c in canonical integer-radicand form (s = 1).
    const Int &a = theta.x, &b = theta.y, &c = theta.z;
    // d = denominator of 2a/c in lowest form.
    const Int dDen = divExact(c, gcd(Int(2) * a, c));
    const Int cd = c * dDen;

    for (const Int& z : positiveDivisors(c * c)) {
        for (const Int& w : positiveDivisors(z)) {
            // y / (z w) = b / (c d)  =>  y = b z w / (c d) when integral.
            const Int num = b * z * w;
            if (!divides(cd, num)) continue;
            const Int yAbs = abs(divExact(num, cd));
            if (yAbs.isZero()) continue;
            for (const Int& y : {yAbs, -yAbs}) {
                for (Int x(0); x < z; x += Int(1)) {
                    if (!gcd(gcd(abs(x), abs(y)), z).isOne()) continue;
                    const QuadraticSurd cand{x, y, z, theta.kNum, Int(1)};
                    const auto elt = surdInField(field, cand);
                    if (!elt || elt->isRational()) continue;
                    if (latticeEqual(traceLattice(field, *elt), target))
                        addClass(list.classes, *elt);
                }
            }
        }
    }
    std::sort(list.classes.begin(), list.classes.end(), coordsLexLess);
    return list;
}

EquivalentsList enumerateEquivalents(const FieldPtr& field, const Int& bound)
{
    const Index d = field->degree();
    if (d < 2) throw DomainError("enumerateEquivalents: theta is rational");

    EquivalentsList list;
    list.bound = bound;

    if (d == 2) {
        EquivalentsList q = quadraticEquivalents(surdFromField(field->generator()));
        // Rebuild the representatives inside the caller's field object.
        EquivalentsList out;
        out.degreeCase = q.degreeCase;
        out.complete = true;
        out.bound = bound;
        for (const FieldElement& e : q.classes) addClass(out.classes, field->element(e.coords()));
        std::sort(out.classes.begin(), out.classes.end(), coordsLexLess);
        return out;
    }

    addClass(list.classes, field->theta());

    if (d == 3) {
        list.degreeCase = "degree 3";
        list.complete = false; // search is exhaustive only up to the bound
        const Poly& mp = field->generator().minpoly;
        const Rat l2 = mp(2), l1 = mp(1), l0 = mp(0);
        const Rat p = Rat(-2) * l2;
        const Rat q = l2 * l2 + l1;
        const Rat r = l0 - l1 * l2;
        for (const CubicPoint& pt : cubicIntegerPoints(p, q, r, bound)) {
            RatVector coords = RatVector::Zero(3);
            coords(1) = Rat(pt.a);
            coords(2) = Rat(pt.b);
            addClass(list.classes, field->element(coords));
        }
    } else if (d == 4) {
        list.degreeCase = "degree 4";
        list.complete = true;
        const Poly& mp = field->generator().minpoly;
        const Degree4Companion comp = degree4Mu(mp(3), mp(2), mp(1), mp(0));
        if (comp.k) {
            RatVector coords = RatVector::Zero(4);
            coords(1) = Rat(comp.zetaCoeffs->first);
            coords(2) = Rat(comp.zetaCoeffs->second);
            addClass(list.classes, field->element(coords));
        }
    } else {
        list.degreeCase = "degree > 4";
        list.complete = true;
    }

    std::sort(list.classes.begin(), list.classes.end(), coordsLexLess);
    return list;
}

NonsingularityReport verifyNonsingularCubic(const Rat& p, const Rat& q, const Rat& r)
{
    NonsingularityReport rep;

    // Line at infinity (Z = 0): singular exactly when the binary cubic
    // X^3 + p X^2 Y + q X Y^2 + r Y^3 has a repeated root.
    rep.infinityDiscriminant = binaryCubicDiscriminant(p, q, r);
    rep.nonsingularAtInfinity = !rep.infinityDiscriminant.isZero();

    // Affine part: common complex solutions of F = F_x = F_y = 0 where
    // F(x,y) = C(x,y) - 1 and C is the binary cubic. The partials are binary
    // quadratics; eliminate with resultant/gcd, then check C on any shared
    // root directions ([1:0] is never shared since C_x(1,0) = 3).
    const Poly cx = polyFromCoeffs({q, Rat(2) * p, Rat(3)});          // C_x(t,1)
    const Poly cy = polyFromCoeffs({Rat(3) * r, Rat(2) * q, p});      // C_y(t,1)
    const Poly cPoly = polyFromCoeffs({r, q, p, Rat(1)});             // C(t,1)
    rep.partialsResultant = polyResultant(cx, cy);

    const Poly common = polyGcd(cx, cy);
    if (polyDegree(common) == 0) {
        // Partials vanish together only at the origin, where F = -1.
        rep.affineNoSingularPoints = true;
    } else {
        // On a shared root direction the whole line satisfies
        // F(t x0, t y0) = t^3 C(x0, y0) - 1; no solution iff C vanishes there.
        const Poly rem = polyDivRem(cPoly, squarefreePart(common)).second;
        rep.affineNoSingularPoints = polyIsZero(rem);
    }
    return rep;
}

} // namespace ut4k
