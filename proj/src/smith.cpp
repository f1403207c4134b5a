#include "ut4k/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace ut4k {

Index SmithForm::rank() const
{
    const Index n = std::min(d.rows(), d.cols());
    Index r = 0;
    while (r < n && !d(r, r).isZero()) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const
{
    const Index n = std::min(d.rows(), d.cols());
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

// Position of the entry of minimal nonzero absolute value in the block with
// upper-left corner (s,s); ties go to the lowest row, then lowest column.
bool findPivot(const IntMatrix& a, Index s, Index& pr, Index& pc)
{
    bool found = false;
    Int best(0);
    for (Index i = s; i < a.rows(); ++i) {
        for (Index j = s; j < a.cols(); ++j) {
            if (a(i, j).isZero()) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

bool blockCleared(const IntMatrix& a, Index s)
{
    for (Index i = s + 1; i < a.rows(); ++i)
        if (!a(i, s).isZero()) return false;
    for (Index j = s + 1; j < a.cols(); ++j)
        if (!a(s, j).isZero()) return false;
    return true;
}

} // namespace

SmithForm smithNormalForm(const IntMatrix& m)
{
    const Index rows = m.rows(), cols = m.cols();
    SmithForm f;
    f.d = m;
    f.u = IntMatrix::Identity(rows, rows);
    f.v = IntMatrix::Identity(cols, cols);
    IntMatrix& d = f.d;
    IntMatrix& u = f.u;
    IntMatrix& v = f.v;

    const Index n = std::min(rows, cols);
    for (Index s = 0; s < n; ++s) {
        Index pr = s, pc = s;
        if (!findPivot(d, s, pr, pc)) break; // rest of the block is zero
        if (pr != s) {
            d.row(s).swap(d.row(pr));
            u.row(s).swap(u.row(pr));
        }
        if (pc != s) {
            d.col(s).swap(d.col(pc));
            v.col(s).swap(v.col(pc));
        }
        while (!blockCleared(d, s)) {
            for (Index i = s + 1; i < rows; ++i) {
                if (d(i, s).isZero()) continue;
                const Int q = divFloor(d(i, s), d(s, s));
                if (!q.isZero()) {
                    for (Index j = 0; j < cols; ++j) d(i, j) -= q * d(s, j);
                    for (Index j = 0; j < rows; ++j) u(i, j) -= q * u(s, j);
                }
            }
            for (Index j = s + 1; j < cols; ++j) {
                if (d(s, j).isZero()) continue;
                const Int q = divFloor(d(s, j), d(s, s));
                if (!q.isZero()) {
                    for (Index i = 0; i < rows; ++i) d(i, j) -= q * d(i, s);
                    for (Index i = 0; i < cols; ++i) v(i, j) -= q * v(i, s);
                }
            }
            // Remainders smaller than the pivot may be left; re-pivot.
            if (!blockCleared(d, s)) {
                findPivot(d, s, pr, pc);
                if (pr != s) {
                    d.row(s).swap(d.row(pr));
                    u.row(s).swap(u.row(pr));
                }
                if (pc != s) {
                    d.col(s).swap(d.col(pc));
                    v.col(s).swap(v.col(pc));
                }
            }
        }
        if (d(s, s).sign() < 0) {
            for (Index j = 0; j < cols; ++j) d(s, j) = -d(s, j);
            for (Index j = 0; j < rows; ++j) u(s, j) = -u(s, j);
        }
    }

    // Enforce the divisibility chain d1 | d2 | ... : when d_s does not divide
    // d_t, fold column t into column s and re-diagonalize that corner.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index s = 0; s + 1 < n; ++s) {
            if (d(s, s).isZero()) continue;
            for (Index t = s + 1; t < n; ++t) {
                if (d(t, t).isZero() || divides(d(s, s), d(t, t))) continue;
                for (Index i = 0; i < rows; ++i) d(i, s) += d(i, t);
                for (Index i = 0; i < cols; ++i) v(i, s) += v(i, t);
                // The corner is now [[d_s, 0], [d_t, d_t]]; clear it with a
                // two-by-two reduction.
                while (!d(t, s).isZero() || !d(s, t).isZero()) {
                    if (abs(d(t, s)) < abs(d(s, s)) && !d(t, s).isZero()) {
                        d.row(s).swap(d.row(t));
                        u.row(s).swap(u.row(t));
                    }
                    if (!d(t, s).isZero()) {
                        const Int q = divFloor(d(t, s), d(s, s));
                        if (!q.isZero()) {
                            for (Index j = 0; j < cols; ++j) d(t, j) -= q * d(s, j);
                            for (Index j = 0; j < rows; ++j) u(t, j) -= q * u(s, j);
                        }
                        if (!d(t, s).isZero()) {
                            d.row(s).swap(d.row(t));
                            u.row(s).swap(u.row(t));
                            continue;
                        }
                    }
                    if (!d(s, t).isZero()) {
                        const Int q = divFloor(d(s, t), d(s, s));
                        if (!q.isZero()) {
                            for (Index i = 0; i < rows; ++i) d(i, t) -= q * d(i, s);
                            for (Index i = 0; i < cols; ++i) v(i, t) -= q * v(i, s);
                        }
                        if (!d(s, t).isZero()) {
                            d.col(s).swap(d.col(t));
                            v.col(s).swap(v.col(t));
                        }
                    }
                }
                if (d(s, s).sign() < 0) {
                    for (Index j = 0; j < cols; ++j) d(s, j) = -d(s, j);
                    for (Index j = 0; j < rows; ++j) u(s, j) = -u(s, j);
                }
                if (d(t, t).sign() < 0) {
                    for (Index j = 0; j < cols; ++j) d(t, j) = -d(t, j);
                    for (Index j = 0; j < rows; ++j) u(t, j) = -u(t, j);
                }
                changed = true;
            }
        }
    }

    return f;
}

std::string FpAbelianGroup::describe() const
{
    if (freeRank == 0 && invariantFactors.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (freeRank == 1) {
        os << "Z";
        first = false;
    } else if (freeRank > 1) {
        os << "Z^" << freeRank;
        first = false;
    }
    for (const Int& f : invariantFactors) {
        if (!first) os << " + ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

FpAbelianGroup cokernel(const IntMatrix& m)
{
    const SmithForm f = smithNormalForm(m);
    FpAbelianGroup g;
    const Index r = f.rank();
    g.freeRank = m.rows() - r;
    for (Index i = 0; i < r; ++i)
        if (!f.d(i, i).isOne()) g.invariantFactors.push_back(f.d(i, i));
    return g;
}

IntMatrix kernelBasis(const IntMatrix& m)
{
    const SmithForm f = smithNormalForm(m);
    const Index r = f.rank();
    const Index k = m.cols() - r;
    IntMatrix basis(k, m.cols());
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < m.cols(); ++j) basis(i, j) = f.v(j, r + i);
    return basis;
}

std::optional<IntVector> solveDiophantine(const IntMatrix& m, const IntVector& rhs)
{
    if (m.rows() != rhs.size()) throw std::invalid_argument("solveDiophantine: shape mismatch");
    const SmithForm f = smithNormalForm(m);
    const IntVector c = f.u * rhs;
    IntVector y = IntVector::Zero(m.cols());
    const Index n = std::min(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        const Int di = i < n ? f.d(i, i) : Int(0);
        if (di.isZero()) {
            if (!c(i).isZero()) return std::nullopt;
        } else {
            if (!divides(di, c(i))) return std::nullopt;
            y(i) = divExact(c(i), di);
        }
    }
    return IntVector(f.v * y);
}

} // namespace ut4k
