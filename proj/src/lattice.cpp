#include "ut4k/lattice.hpp"

#include <stdexcept>

namespace ut4k {

IntMatrix hermiteNormalForm(const IntMatrix& m)
{
    IntMatrix a = m;
    const Index rows = a.rows(), cols = a.cols();
    Index r = 0; // next pivot row
    for (Index c = 0; c < cols && r < rows; ++c) {
        // Euclid down column c until at most one nonzero remains at row r.
        while (true) {
            Index p = -1;
            Int best(0);
            for (Index i = r; i < rows; ++i) {
                if (a(i, c).isZero()) continue;
                Int v = abs(a(i, c));
                if (p < 0 || v < best) {
                    p = i;
                    best = v;
                }
            }
            if (p < 0) break; // column is zero below r
            if (p != r) a.row(r).swap(a.row(p));
            bool clear = true;
            for (Index i = r + 1; i < rows; ++i) {
                if (a(i, c).isZero()) continue;
                const Int q = divFloor(a(i, c), a(r, c));
                if (!q.isZero())
                    for (Index j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
                if (!a(i, c).isZero()) clear = false;
            }
            if (clear) break;
        }
        if (a(r, c).isZero()) continue;
        if (a(r, c).sign() < 0)
            for (Index j = 0; j < cols; ++j) a(r, j) = -a(r, j);
        // Reduce the entries above the pivot into [0, pivot).
        for (Index i = 0; i < r; ++i) {
            const Int q = divFloor(a(i, c), a(r, c));
            if (!q.isZero())
                for (Index j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
        }
        ++r;
    }
    return a.topRows(r);
}

namespace {

RationalLattice canonicalize(const IntMatrix& intGens, const Int& den, Index ambientDim)
{
    RationalLattice l;
    l.ambientDim = ambientDim;
    l.basis = hermiteNormalForm(intGens);
    l.den = den;
    // Reduce the common denominator against the content of the basis.
    Int g = l.den;
    for (Index i = 0; i < l.basis.rows() && !g.isOne(); ++i)
        for (Index j = 0; j < l.basis.cols() && !g.isOne(); ++j) g = gcd(g, l.basis(i, j));
    if (!g.isOne() && !g.isZero()) {
        l.den = divExact(l.den, g);
        for (Index i = 0; i < l.basis.rows(); ++i)
            for (Index j = 0; j < l.basis.cols(); ++j) l.basis(i, j) = divExact(l.basis(i, j), g);
    }
    return l;
}

} // namespace

RationalLattice latticeFromGenerators(const RatMatrix& gens, Index ambientDim)
{
    if (gens.cols() != ambientDim && gens.rows() != 0)
        throw std::invalid_argument("latticeFromGenerators: ambient dimension mismatch");
    Int den(1);
    for (Index i = 0; i < gens.rows(); ++i)
        for (Index j = 0; j < gens.cols(); ++j) den = lcm(den, gens(i, j).den());
    IntMatrix ig(gens.rows(), ambientDim);
    for (Index i = 0; i < gens.rows(); ++i)
        for (Index j = 0; j < gens.cols(); ++j) {
            const Rat scaled = gens(i, j) * Rat(den);
            ig(i, j) = scaled.num();
        }
    return canonicalize(ig, den, ambientDim);
}

RationalLattice latticeFromGenerators(const IntMatrix& gens, Index ambientDim)
{
    if (gens.cols() != ambientDim && gens.rows() != 0)
        throw std::invalid_argument("latticeFromGenerators: ambient dimension mismatch");
    return canonicalize(gens, Int(1), ambientDim);
}

bool latticeEqual(const RationalLattice& a, const RationalLattice& b)
{
    if (a.ambientDim != b.ambientDim)
        throw std::invalid_argument("latticeEqual: ambient dimension mismatch");
    return a == b;
}

bool latticeContains(const RationalLattice& l, const RatVector& v)
{
    if (v.size() != l.ambientDim) throw std::invalid_argument("latticeContains: dimension mismatch");
    // Scale into the integer basis; membership fails unless den * v is integral.
    IntVector w(v.size());
    for (Index j = 0; j < v.size(); ++j) {
        const Rat s = v(j) * Rat(l.den);
        if (!s.isInteger()) return false;
        w(j) = s.num();
    }
    // Reduce against the echelon rows.
    for (Index i = 0; i < l.basis.rows(); ++i) {
        Index c = 0;
        while (c < l.basis.cols() && l.basis(i, c).isZero()) ++c;
        if (c == l.basis.cols()) continue;
        if (w(c).isZero()) continue;
        if (!divides(l.basis(i, c), w(c))) return false;
        const Int q = divExact(w(c), l.basis(i, c));
        for (Index j = c; j < v.size(); ++j) w(j) -= q * l.basis(i, j);
    }
    for (Index j = 0; j < v.size(); ++j)
        if (!w(j).isZero()) return false;
    return true;
}

RationalLattice latticeSum(const RationalLattice& a, const RationalLattice& b)
{
    if (a.ambientDim != b.ambientDim)
        throw std::invalid_argument("latticeSum: ambient dimension mismatch");
    const Int den = lcm(a.den, b.den);
    const Int fa = divExact(den, a.den), fb = divExact(den, b.den);
    IntMatrix gens(a.basis.rows() + b.basis.rows(), a.ambientDim);
    for (Index i = 0; i < a.basis.rows(); ++i)
        for (Index j = 0; j < a.ambientDim; ++j) gens(i, j) = fa * a.basis(i, j);
    for (Index i = 0; i < b.basis.rows(); ++i)
        for (Index j = 0; j < a.ambientDim; ++j) gens(a.basis.rows() + i, j) = fb * b.basis(i, j);
    return canonicalize(gens, den, a.ambientDim);
}

Index spanIntersectionRank(const RationalLattice& a, const RationalLattice& b)
{
    if (a.ambientDim != b.ambientDim)
        throw std::invalid_argument("spanIntersectionRank: ambient dimension mismatch");
    RatMatrix joint(a.basis.rows() + b.basis.rows(), a.ambientDim);
    for (Index i = 0; i < a.basis.rows(); ++i)
        for (Index j = 0; j < a.ambientDim; ++j) joint(i, j) = Rat(a.basis(i, j));
    for (Index i = 0; i < b.basis.rows(); ++i)
        for (Index j = 0; j < a.ambientDim; ++j) joint(a.basis.rows() + i, j) = Rat(b.basis(i, j));
    return a.rank() + b.rank() - rank(joint);
}

RationalLattice latticeApply(const IntMatrix& m, const RationalLattice& l)
{
    if (m.cols() != l.ambientDim) throw std::invalid_argument("latticeApply: dimension mismatch");
    // Rows of basis are column vectors to m; the image rows are basis * m^T.
    IntMatrix image = l.basis * m.transpose();
    return canonicalize(image, l.den, m.rows());
}

RatMatrix latticeGenerators(const RationalLattice& l)
{
    RatMatrix g(l.basis.rows(), l.basis.cols());
    for (Index i = 0; i < l.basis.rows(); ++i)
        for (Index j = 0; j < l.basis.cols(); ++j) g(i, j) = Rat(l.basis(i, j), l.den);
    return g;
}

} // namespace ut4k
