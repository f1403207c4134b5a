#include "ut4k/groups.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace ut4k {

UT4Element ut4Elementary(int i, int j, const Int& c)
{
    if (!(1 <= i && i < j && j <= 4)) throw std::invalid_argument("ut4Elementary: need 1 <= i < j <= 4");
    UT4Element e;
    if (i == 1 && j == 2) e.a12 = c;
    else if (i == 1 && j == 3) e.a13 = c;
    else if (i == 1 && j == 4) e.a14 = c;
    else if (i == 2 && j == 3) e.a23 = c;
    else if (i == 2 && j == 4) e.a24 = c;
    else e.a34 = c;
    return e;
}

UT4Element ut4Mul(const UT4Element& a, const UT4Element& b)
{
    UT4Element c;
    c.a12 = a.a12 + b.a12;
    c.a13 = a.a13 + b.a13 + a.a12 * b.a23;
    c.a14 = a.a14 + b.a14 + a.a12 * b.a24 + a.a13 * b.a34;
    c.a23 = a.a23 + b.a23;
    c.a24 = a.a24 + b.a24 + a.a23 * b.a34;
    c.a34 = a.a34 + b.a34;
    return c;
}

UT4Element ut4Inv(const UT4Element& a)
{
    UT4Element b;
    b.a12 = -a.a12;
    b.a23 = -a.a23;
    b.a34 = -a.a34;
    b.a13 = -a.a13 + a.a12 * a.a23;
    b.a24 = -a.a24 + a.a23 * a.a34;
    b.a14 = -a.a14 + a.a12 * a.a24 + a.a13 * a.a34 - a.a12 * a.a23 * a.a34;
    return b;
}

UT4Element ut4Commutator(const UT4Element& a, const UT4Element& b)
{
    return ut4Mul(ut4Mul(a, b), ut4Mul(ut4Inv(a), ut4Inv(b)));
}

Eigen::Matrix<Int, 4, 4> ut4ToMatrix(const UT4Element& a)
{
    Eigen::Matrix<Int, 4, 4> m;
    m << Int(1), a.a12, a.a13, a.a14,
         Int(0), Int(1), a.a23, a.a24,
         Int(0), Int(0), Int(1), a.a34,
         Int(0), Int(0), Int(0), Int(1);
    return m;
}

UT4Element ut4FromMatrix(const Eigen::Matrix<Int, 4, 4>& m)
{
    for (Index i = 0; i < 4; ++i) {
        if (!m(i, i).isOne()) throw std::invalid_argument("ut4FromMatrix: diagonal entry is not 1");
        for (Index j = 0; j < i; ++j)
            if (!m(i, j).isZero()) throw std::invalid_argument("ut4FromMatrix: lower entry is not 0");
    }
    return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

bool ut4IsCentral(const UT4Element& a)
{
    return a.a12.isZero() && a.a13.isZero() && a.a23.isZero() && a.a24.isZero() && a.a34.isZero();
}

UT4Element ut4CosetRep(const UT4Element& a)
{
    UT4Element r = a;
    r.a14 = Int(0);
    return r;
}

UT4Element betaApply(const UT4Element& x)
{
    static const UT4Element g = ut4Elementary(2, 3);
    return ut4Mul(ut4Mul(g, x), ut4Inv(g));
}

IntMatrix betaMatrix()
{
    IntMatrix m = IntMatrix::Identity(4, 4);
    m(1, 0) = Int(-1); // 1+e12 -> 1+e12-e13
    m(2, 3) = Int(1);  // 1+e34 -> 1+e24+e34
    return m;
}

IntVector ut4ToZ4(const UT4Element& a)
{
    IntVector v(4);
    v << a.a12, a.a13, a.a24, a.a34;
    return v;
}

Int cocycleExponent(const UT4Element& x, const UT4Element& y)
{
    const UT4Element rx = ut4CosetRep(x);
    const UT4Element ry = ut4CosetRep(y);
    const UT4Element prod = ut4Mul(rx, ry);
    const UT4Element central = ut4Mul(prod, ut4Inv(ut4CosetRep(prod)));
    if (!ut4IsCentral(central))
        throw std::logic_error("cocycleExponent: section defect is not central");
    return central.a14;
}

XySublattices xySublattices()
{
    IntMatrix gx(2, 4), gy(2, 4);
    gx << Int(0), Int(-1), Int(1), Int(0),
          Int(1), Int(0), Int(0), Int(1);
    gy << Int(0), Int(-1), Int(-1), Int(0),
          Int(1), Int(0), Int(0), Int(-1);
    return {latticeFromGenerators(gx, 4), latticeFromGenerators(gy, 4)};
}

XyInvarianceReport verifyXyInvariance()
{
    const XySublattices xy = xySublattices();
    const IntMatrix b = betaMatrix();
    const IntMatrix bInv = unimodularInverse(b);
    XyInvarianceReport r;
    r.betaFixesX = latticeEqual(latticeApply(b, xy.xTilde), xy.xTilde);
    r.betaInvFixesX = latticeEqual(latticeApply(bInv, xy.xTilde), xy.xTilde);
    r.betaFixesY = latticeEqual(latticeApply(b, xy.yTilde), xy.yTilde);
    r.betaInvFixesY = latticeEqual(latticeApply(bInv, xy.yTilde), xy.yTilde);
    r.intersectionRank = spanIntersectionRank(xy.xTilde, xy.yTilde);
    return r;
}

FpAbelianGroup quotientByXy()
{
    // Z^4 / row span of the four generators = cokernel of the transpose.
    IntMatrix gens(4, 4);
    gens << Int(0), Int(-1), Int(1), Int(0),
            Int(1), Int(0), Int(0), Int(1),
            Int(0), Int(-1), Int(-1), Int(0),
            Int(1), Int(0), Int(0), Int(-1);
    return cokernel(gens.transpose());
}

CocycleSweepResult cocycleIdentitySweep(int radius)
{
    const int width = 2 * radius + 1;
    long count = 1;
    for (int i = 0; i < 5; ++i) count *= width;

    std::vector<UT4Element> reps;
    reps.reserve(static_cast<size_t>(count));
    for (long code = 0; code < count; ++code) {
        long c = code;
        int v[5];
        for (int& vi : v) {
            vi = static_cast<int>(c % width) - radius;
            c /= width;
        }
        UT4Element e;
        e.a12 = Int(v[0]);
        e.a13 = Int(v[1]);
        e.a23 = Int(v[2]);
        e.a24 = Int(v[3]);
        e.a34 = Int(v[4]);
        reps.push_back(e);
    }

    // Every term in the identity is a cocycle value on a pair drawn from the
    // box or from the (finite) set of product representatives, so tabulate
    // those values once and run the triple loop over the tables. All table
    // entries come out of cocycleExponent itself.
    const size_t n = reps.size();
    std::map<std::array<long, 5>, int> prodIndexOf;
    std::vector<UT4Element> prods;
    std::vector<int> prodIdx(n * n);
    std::vector<long> w(n * n);
    const auto keyOf = [](const UT4Element& e) {
        return std::array<long, 5>{e.a12.toLong(), e.a13.toLong(), e.a23.toLong(),
                                   e.a24.toLong(), e.a34.toLong()};
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            w[i * n + j] = cocycleExponent(reps[i], reps[j]).toLong();
            const UT4Element p = ut4CosetRep(ut4Mul(reps[i], reps[j]));
            const auto [it, inserted] = prodIndexOf.try_emplace(keyOf(p), static_cast<int>(prods.size()));
            if (inserted) prods.push_back(p);
            prodIdx[i * n + j] = it->second;
        }

    const size_t m = prods.size();
    std::vector<long> wProdRep(m * n); // cocycle(product rep, box element)
    for (size_t p = 0; p < m; ++p)
        for (size_t k = 0; k < n; ++k)
            wProdRep[p * n + k] = cocycleExponent(prods[p], reps[k]).toLong();
    std::vector<long> wRepProd(n * m); // cocycle(box element, product rep)
    for (size_t i = 0; i < n; ++i)
        for (size_t p = 0; p < m; ++p)
            wRepProd[i * m + p] = cocycleExponent(reps[i], prods[p]).toLong();

    CocycleSweepResult res;
    res.holds = true;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const long axy = w[i * n + j];
            const size_t xy = static_cast<size_t>(prodIdx[i * n + j]);
            for (size_t k = 0; k < n; ++k) {
                const long lhs = axy + wProdRep[xy * n + k];
                const long rhs = w[j * n + k] + wRepProd[i * m + static_cast<size_t>(prodIdx[j * n + k])];
                ++res.triplesChecked;
                if (lhs != rhs) {
                    res.holds = false;
                    return res;
                }
            }
        }
    }
    return res;
}

} // namespace ut4k
