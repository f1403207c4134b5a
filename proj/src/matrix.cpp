#include "ut4k/matrix.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace ut4k {

RatMatrix toRat(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVector toRat(const IntVector& v)
{
    RatVector r(v.size());
    for (Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
    return r;
}

bool isIntegral(const RatMatrix& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).isInteger()) return false;
    return true;
}

bool isIntegral(const RatVector& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).isInteger()) return false;
    return true;
}

IntMatrix toInt(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).isInteger()) throw std::invalid_argument("toInt: non-integer entry");
            r(i, j) = m(i, j).num();
        }
    return r;
}

IntVector toInt(const RatVector& v)
{
    IntVector r(v.size());
    for (Index i = 0; i < v.size(); ++i) {
        if (!v(i).isInteger()) throw std::invalid_argument("toInt: non-integer entry");
        r(i) = v(i).num();
    }
    return r;
}

// Bareiss fraction-free elimination: every intermediate entry is an exact
// minor of the input, and each division is exact.
Int determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Index n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k).isZero()) {
            Index p = k + 1;
            while (p < n && a(p, k).isZero()) ++p;
            if (p == n) return Int(0);
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = divExact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = Int(0);
        }
        prev = a(k, k);
    }
    Int det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Rat determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Index n = m.rows();
    RatMatrix a = m;
    Rat det(1);
    for (Index k = 0; k < n; ++k) {
        Index p = k;
        while (p < n && a(p, k).isZero()) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            a.row(k).swap(a.row(p));
            det = -det;
        }
        det *= a(k, k);
        const Rat inv = inverse(a(k, k));
        for (Index i = k + 1; i < n; ++i) {
            const Rat f = a(i, k) * inv;
            if (f.isZero()) continue;
            for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

bool isUnimodular(const IntMatrix& m)
{
    if (m.rows() != m.cols()) return false;
    const Int d = determinant(m);
    return d.isOne() || (-d).isOne();
}

Index rank(const RatMatrix& m)
{
    RatMatrix a = m;
    Index r = 0;
    for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Index p = r;
        while (p < a.rows() && a(p, c).isZero()) ++p;
        if (p == a.rows()) continue;
        a.row(r).swap(a.row(p));
        const Rat inv = inverse(a(r, c));
        for (Index i = r + 1; i < a.rows(); ++i) {
            const Rat f = a(i, c) * inv;
            if (f.isZero()) continue;
            for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<RatVector> solveLinear(const RatMatrix& a0, const RatVector& b0)
{
    if (a0.rows() != b0.size()) throw std::invalid_argument("solveLinear: shape mismatch");
    RatMatrix a = a0;
    RatVector b = b0;
    const Index m = a.rows(), n = a.cols();
    std::vector<Index> pivotCol;
    Index r = 0;
    for (Index c = 0; c < n && r < m; ++c) {
        Index p = r;
        while (p < m && a(p, c).isZero()) ++p;
        if (p == m) continue;
        a.row(r).swap(a.row(p));
        std::swap(b(r), b(p));
        const Rat inv = inverse(a(r, c));
        for (Index j = c; j < n; ++j) a(r, j) *= inv;
        b(r) *= inv;
        for (Index i = 0; i < m; ++i) {
            if (i == r || a(i, c).isZero()) continue;
            const Rat f = a(i, c);
            for (Index j = c; j < n; ++j) a(i, j) -= f * a(r, j);
            b(i) -= f * b(r);
        }
        pivotCol.push_back(c);
        ++r;
    }
    for (Index i = r; i < m; ++i)
        if (!b(i).isZero()) return std::nullopt;
    RatVector x = RatVector::Zero(n);
    for (Index i = 0; i < r; ++i) x(pivotCol[static_cast<size_t>(i)]) = b(i);
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const Index n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::Identity(n, n);
    for (Index c = 0; c < n; ++c) {
        Index p = c;
        while (p < n && a(p, c).isZero()) ++p;
        if (p == n) return std::nullopt;
        a.row(c).swap(a.row(p));
        inv.row(c).swap(inv.row(p));
        const Rat f = ut4k::inverse(a(c, c));
        for (Index j = 0; j < n; ++j) {
            a(c, j) *= f;
            inv(c, j) *= f;
        }
        for (Index i = 0; i < n; ++i) {
            if (i == c || a(i, c).isZero()) continue;
            const Rat g = a(i, c);
            for (Index j = 0; j < n; ++j) {
                a(i, j) -= g * a(c, j);
                inv(i, j) -= g * inv(c, j);
            }
        }
    }
    return inv;
}

IntMatrix unimodularInverse(const IntMatrix& m)
{
    if (!isUnimodular(m)) throw std::invalid_argument("unimodularInverse: not unimodular");
    auto inv = inverse(toRat(m));
    return toInt(*inv);
}

IntMatrix kroneckerProduct(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

} // namespace ut4k
