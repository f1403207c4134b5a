#include "ut4k/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ut4k {

Poly polyFromCoeffs(std::initializer_list<Rat> ascending)
{
    Poly p(static_cast<Index>(ascending.size()));
    Index i = 0;
    for (const Rat& c : ascending) p(i++) = c;
    return polyTrim(p);
}

Index polyDegree(const Poly& p)
{
    for (Index i = p.size() - 1; i >= 0; --i)
        if (!p(i).isZero()) return i;
    return -1;
}

bool polyIsZero(const Poly& p) { return polyDegree(p) < 0; }

Poly polyTrim(const Poly& p)
{
    const Index d = polyDegree(p);
    return p.head(d + 1);
}

Rat polyLeading(const Poly& p)
{
    const Index d = polyDegree(p);
    if (d < 0) return Rat(0);
    return p(d);
}

Poly polyAdd(const Poly& a, const Poly& b)
{
    Poly r = Poly::Zero(std::max(a.size(), b.size()));
    for (Index i = 0; i < a.size(); ++i) r(i) += a(i);
    for (Index i = 0; i < b.size(); ++i) r(i) += b(i);
    return polyTrim(r);
}

Poly polySub(const Poly& a, const Poly& b)
{
    Poly r = Poly::Zero(std::max(a.size(), b.size()));
    for (Index i = 0; i < a.size(); ++i) r(i) += a(i);
    for (Index i = 0; i < b.size(); ++i) r(i) -= b(i);
    return polyTrim(r);
}

Poly polyMul(const Poly& a, const Poly& b)
{
    const Index da = polyDegree(a), db = polyDegree(b);
    if (da < 0 || db < 0) return Poly();
    Poly r = Poly::Zero(da + db + 1);
    for (Index i = 0; i <= da; ++i) {
        if (a(i).isZero()) continue;
        for (Index j = 0; j <= db; ++j) r(i + j) += a(i) * b(j);
    }
    return r;
}

Poly polyScale(const Rat& c, const Poly& a)
{
    if (c.isZero()) return Poly();
    Poly r(a.size());
    for (Index i = 0; i < a.size(); ++i) r(i) = c * a(i);
    return polyTrim(r);
}

std::pair<Poly, Poly> polyDivRem(const Poly& a, const Poly& b)
{
    const Index db = polyDegree(b);
    if (db < 0) throw std::invalid_argument("polyDivRem: division by zero polynomial");
    Poly rem = polyTrim(a);
    Index dr = polyDegree(rem);
    if (dr < db) return {Poly(), rem};
    Poly quot = Poly::Zero(dr - db + 1);
    const Rat lcInv = inverse(b(db));
    while (dr >= db) {
        const Rat c = rem(dr) * lcInv;
        quot(dr - db) = c;
        for (Index i = 0; i <= db; ++i) rem(dr - db + i) -= c * b(i);
        rem(dr) = Rat(0); // exact by construction
        dr = polyDegree(rem);
    }
    return {polyTrim(quot), polyTrim(rem)};
}

Poly polyDerivative(const Poly& p)
{
    const Index d = polyDegree(p);
    if (d <= 0) return Poly();
    Poly r(d);
    for (Index i = 1; i <= d; ++i) r(i - 1) = Rat(Int(static_cast<long>(i))) * p(i);
    return polyTrim(r);
}

Rat polyEval(const Poly& p, const Rat& x)
{
    Rat acc(0);
    for (Index i = p.size() - 1; i >= 0; --i) acc = acc * x + p(i);
    return acc;
}

Poly polyGcd(const Poly& a, const Poly& b)
{
    Poly x = polyTrim(a), y = polyTrim(b);
    while (!polyIsZero(y)) {
        Poly r = polyDivRem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return polyMonic(x);
}

Poly polyMonic(const Poly& p)
{
    if (polyIsZero(p)) return Poly();
    return polyScale(inverse(polyLeading(p)), p);
}

Poly squarefreePart(const Poly& p)
{
    if (polyDegree(p) <= 1) return polyMonic(p);
    const Poly g = polyGcd(p, polyDerivative(p));
    return polyMonic(polyDivRem(p, g).first);
}

std::vector<Poly> sturmSequence(const Poly& p)
{
    std::vector<Poly> seq;
    Poly p0 = polyTrim(p);
    if (polyIsZero(p0)) throw std::invalid_argument("sturmSequence: zero polynomial");
    seq.push_back(p0);
    Poly p1 = polyDerivative(p0);
    while (!polyIsZero(p1)) {
        seq.push_back(p1);
        Poly r = polyDivRem(p0, p1).second;
        p0 = std::move(p1);
        p1 = polyScale(Rat(-1), r);
    }
    return seq;
}

namespace {

Index signChangesAt(const std::vector<Poly>& seq, const Rat& x)
{
    Index changes = 0;
    int prev = 0;
    for (const Poly& q : seq) {
        const int s = polyEval(q, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

Index countRealRoots(const std::vector<Poly>& sturm, const Rat& lo, const Rat& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("countRealRoots: empty interval");
    return signChangesAt(sturm, lo) - signChangesAt(sturm, hi);
}

Index countRealRoots(const Poly& p, const Rat& lo, const Rat& hi)
{
    return countRealRoots(sturmSequence(squarefreePart(p)), lo, hi);
}

namespace {

// Cauchy bound: all real roots lie in [-B, B].
Rat rootBound(const Poly& p)
{
    const Index d = polyDegree(p);
    const Rat lcInv = inverse(polyLeading(p));
    Rat maxAbs(0);
    for (Index i = 0; i < d; ++i) {
        const Rat v = abs(p(i) * lcInv);
        if (maxAbs < v) maxAbs = v;
    }
    return Rat(1) + maxAbs;
}

// Isolating intervals (lo, hi] for every real root of a squarefree p.
void isolate(const std::vector<Poly>& sturm, const Rat& lo, const Rat& hi,
             std::vector<std::pair<Rat, Rat>>& out)
{
    const Index n = countRealRoots(sturm, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    const Rat mid = (lo + hi) * Rat(Int(1), Int(2));
    isolate(sturm, lo, mid, out);
    isolate(sturm, mid, hi, out);
}

} // namespace

std::vector<Rat> rationalRoots(const Poly& p0)
{
    const Poly p = squarefreePart(p0);
    const Index d = polyDegree(p);
    std::vector<Rat> roots;
    if (d <= 0) return roots;
    if (p(0).isZero()) roots.push_back(Rat(0));

    // Substitute x = y / L with L the lcm of coefficient denominators of the
    // monic form: q(y) = y^d + sum m_i L^{d-i} y^i is monic with integer
    // coefficients, and rational roots of p correspond to integer roots of q.
    const Poly m = polyMonic(p);
    Int l(1);
    for (Index i = 0; i < d; ++i) l = lcm(l, m(i).den());
    Poly q = Poly::Zero(d + 1);
    q(d) = Rat(1);
    Int power(1);
    for (Index i = d - 1; i >= 0; --i) {
        power *= l;
        q(i) = m(i) * Rat(power);
    }

    // Isolate the real roots of q and refine each interval to width < 1, so
    // it contains at most one integer candidate.
    const std::vector<Poly> sturm = sturmSequence(q);
    const Rat b = rootBound(q);
    std::vector<std::pair<Rat, Rat>> intervals;
    isolate(sturm, -b, b, intervals);
    for (auto& [lo, hi] : intervals) {
        while (hi - lo >= Rat(1)) {
            const Rat mid = (lo + hi) * Rat(Int(1), Int(2));
            if (countRealRoots(sturm, lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
        const Int cLo = ceil(lo), cHi = floor(hi);
        for (Int c = cLo; c <= cHi; c += Int(1)) {
            if (c.isZero()) continue; // x = 0 handled above
            if (polyEval(q, Rat(c)).isZero()) {
                const Rat root = Rat(c, l);
                if (!polyEval(p, root).isZero())
                    throw std::logic_error("rationalRoots: scaling inconsistency");
                roots.push_back(root);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool isIrreducibleUpToDeg4(const Poly& p0)
{
    const Poly p = polyMonic(p0);
    const Index d = polyDegree(p);
    if (d < 1 || d > 4) throw std::invalid_argument("isIrreducibleUpToDeg4: degree out of range");
    if (d == 1) return true;
    if (!rationalRoots(p).empty()) return false;
    if (d <= 3) return true;

    // Quartic with no rational root: it is reducible iff it splits into two
    // rational quadratics. Depress (x = y - a3/4) and factor
    // (y^2 + u y + v)(y^2 - u y + w): z = u^2 must be a rational square root
    // of the resolvent cubic z^3 + 2P z^2 + (P^2 - 4R) z - Q^2.
    const Rat a3 = p(3), a2 = p(2), a1 = p(1), a0 = p(0);
    const Rat quarter(Int(1), Int(4));
    const Rat s = a3 * quarter;
    const Rat P = a2 - Rat(3) * Rat(2) * s * s;            // a2 - 6 s^2
    const Rat Q = a1 - Rat(2) * a2 * s + Rat(8) * s * s * s;
    const Rat R = a0 - a1 * s + a2 * s * s - Rat(3) * s * s * s * s;
    if (Q.isZero()) {
        // (y^2 + v)(y^2 + w): v + w = P, v w = R; rational iff P^2 - 4R is a
        // rational square.
        if (isRationalSquare(P * P - Rat(4) * R)) return false;
    }
    const Poly resolvent =
        polyFromCoeffs({-(Q * Q), P * P - Rat(4) * R, Rat(2) * P, Rat(1)});
    for (const Rat& z : rationalRoots(resolvent)) {
        if (z.sign() <= 0) continue;
        if (isRationalSquare(z)) return false; // u = sqrt(z) gives a rational split
    }
    return true;
}

Poly characteristicPolynomial(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristicPolynomial: not square");
    const Index n = m.rows();
    // Faddeev-LeVerrier: c_n = 1, M_1 = I, c_{n-k} = -tr(m M_k)/k,
    // M_{k+1} = m M_k + c_{n-k} I.
    Poly c = Poly::Zero(n + 1);
    c(n) = Rat(1);
    RatMatrix mk = RatMatrix::Identity(n, n);
    for (Index k = 1; k <= n; ++k) {
        const RatMatrix prod = m * mk;
        Rat tr(0);
        for (Index i = 0; i < n; ++i) tr += prod(i, i);
        const Rat ck = -tr / Rat(Int(static_cast<long>(k)));
        c(n - k) = ck;
        if (k < n) {
            mk = prod;
            for (Index i = 0; i < n; ++i) mk(i, i) += ck;
        }
    }
    return c;
}

std::pair<Rat, Rat> polyEvalInterval(const Poly& p, const Rat& xlo, const Rat& xhi)
{
    Rat lo(0), hi(0);
    for (Index i = p.size() - 1; i >= 0; --i) {
        // [lo,hi] * [xlo,xhi] + p(i)
        const Rat a = lo * xlo, b = lo * xhi, c = hi * xlo, d = hi * xhi;
        lo = std::min(std::min(a, b), std::min(c, d)) + p(i);
        hi = std::max(std::max(a, b), std::max(c, d)) + p(i);
    }
    return {lo, hi};
}

Rat binaryCubicDiscriminant(const Rat& p, const Rat& q, const Rat& r)
{
    // disc(x^3 + p x^2 + q x + r) = 18pqr - 4p^3 r + p^2 q^2 - 4q^3 - 27r^2.
    return Rat(18) * p * q * r - Rat(4) * p * p * p * r + p * p * q * q -
           Rat(4) * q * q * q - Rat(27) * r * r;
}

Rat polyResultant(const Poly& a0, const Poly& b0)
{
    // res(a, b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
    // with r = a mod b; over Q the Euclidean recursion is exact.
    Poly a = polyTrim(a0), b = polyTrim(b0);
    Index da = polyDegree(a), db = polyDegree(b);
    if (da < 0 || db < 0) return Rat(0);
    Rat res(1);
    while (db > 0) {
        const Poly r = polyDivRem(a, b).second;
        const Index dr = polyDegree(r);
        if (dr < 0) return Rat(0);
        res = res * ((da * db) % 2 == 1 ? Rat(-1) : Rat(1)) * pow(polyLeading(b), static_cast<unsigned long>(da - dr));
        a = b;
        b = r;
        da = db;
        db = dr;
    }
    // b is a nonzero constant.
    return res * pow(b(0), static_cast<unsigned long>(da));
}

} // namespace ut4k
