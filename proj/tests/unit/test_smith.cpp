#include "ut4k/smith.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ut4k;
using namespace testsupport;

namespace {

bool smithInvariantsHold(const IntMatrix& m, const SmithForm& f)
{
    if (!allEqual(f.u * m * f.v, f.d)) return false;
    if (!isUnimodular(f.u) || !isUnimodular(f.v)) return false;
    const Index n = std::min(f.d.rows(), f.d.cols());
    for (Index i = 0; i < f.d.rows(); ++i)
        for (Index j = 0; j < f.d.cols(); ++j)
            if (i != j && !f.d(i, j).isZero()) return false;
    bool seenZero = false;
    for (Index i = 0; i < n; ++i) {
        if (f.d(i, i).sign() < 0) return false;
        if (f.d(i, i).isZero()) {
            seenZero = true;
        } else {
            if (seenZero) return false; // zeros must trail
            if (i > 0 && !f.d(i - 1, i - 1).isZero() && !divides(f.d(i - 1, i - 1), f.d(i, i)))
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("smith normal form of the identity")
{
    const IntMatrix id = IntMatrix::Identity(3, 3);
    const SmithForm f = smithNormalForm(id);
    CHECK(allEqual(f.d, id));
    CHECK(smithInvariantsHold(id, f));
}

TEST_CASE("smith normal form of the shear defect [[0,-2],[0,0]]")
{
    const IntMatrix m = fromRows({{0, -2}, {0, 0}});
    const SmithForm f = smithNormalForm(m);
    CHECK(smithInvariantsHold(m, f));
    CHECK(f.d(0, 0) == Int(2));
    CHECK(f.d(1, 1) == Int(0));
    CHECK(f.rank() == 1);
}

TEST_CASE("smith normal form on random matrices keeps the invariants")
{
    Rng rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const Index rows = 1 + static_cast<Index>(rng() % 6);
        const Index cols = 1 + static_cast<Index>(rng() % 6);
        const IntMatrix m = randomIntMatrix(rng, rows, cols, 5);
        const SmithForm f = smithNormalForm(m);
        CAPTURE(trial);
        REQUIRE(smithInvariantsHold(m, f));
    }
}

TEST_CASE("cokernel of the zero matrix is free")
{
    const FpAbelianGroup g = cokernel(IntMatrix::Zero(3, 3));
    CHECK(g.freeRank == 3);
    CHECK(g.invariantFactors.empty());
    CHECK(g.describe() == "Z^3");
}

TEST_CASE("cokernel of id - [[1,2],[0,1]] is Z + Z/2")
{
    const IntMatrix m = fromRows({{0, -2}, {0, 0}});
    const FpAbelianGroup g = cokernel(m);
    CHECK(g.freeRank == 1);
    REQUIRE(g.invariantFactors.size() == 1);
    CHECK(g.invariantFactors[0] == Int(2));
}

TEST_CASE("cokernel is invariant under unimodular row and column changes")
{
    Rng rng(911);
    for (int trial = 0; trial < 80; ++trial) {
        const Index n = 2 + static_cast<Index>(rng() % 4);
        const IntMatrix m = randomIntMatrix(rng, n, n, 4);
        const IntMatrix u = randomUnimodular(rng, n);
        const IntMatrix v = randomUnimodular(rng, n);
        CHECK(cokernel(m) == cokernel(IntMatrix(u * m * v)));
    }
}

TEST_CASE("kernel basis: identity and the 2x2 shear defect")
{
    CHECK(kernelBasis(IntMatrix::Identity(4, 4)).rows() == 0);

    const IntMatrix m = fromRows({{0, -2}, {0, 0}});
    const IntMatrix k = kernelBasis(m);
    REQUIRE(k.rows() == 1);
    // The kernel is spanned by (1, 0) up to sign.
    CHECK(abs(k(0, 0)) == Int(1));
    CHECK(k(0, 1) == Int(0));
}

TEST_CASE("kernel rows solve the system and capture all small solutions")
{
    Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const Index rows = 1 + static_cast<Index>(rng() % 3);
        const IntMatrix m = randomIntMatrix(rng, rows, 4, 3);
        const IntMatrix k = kernelBasis(m);
        for (Index i = 0; i < k.rows(); ++i) {
            const IntVector x = k.row(i).transpose();
            const IntVector y = m * x;
            for (Index j = 0; j < y.size(); ++j) CHECK(y(j).isZero());
        }
        // Brute-force kernel vectors with entries in [-3,3] must lie in the
        // integer span of the basis rows.
        const IntMatrix kt = k.transpose();
        for (int c0 = -3; c0 <= 3; ++c0)
            for (int c1 = -3; c1 <= 3; ++c1)
                for (int c2 = -3; c2 <= 3; ++c2)
                    for (int c3 = -3; c3 <= 3; ++c3) {
                        IntVector x = intVec({c0, c1, c2, c3});
                        const IntVector y = m * x;
                        bool inKernel = true;
                        for (Index j = 0; j < y.size(); ++j) inKernel = inKernel && y(j).isZero();
                        if (!inKernel) continue;
                        CHECK(solveDiophantine(kt, x).has_value());
                    }
    }
}

TEST_CASE("solveDiophantine finds integer solutions exactly when they exist")
{
    const IntMatrix m = fromRows({{2, 0}, {0, 3}});
    const auto sol = solveDiophantine(m, intVec({4, -9}));
    REQUIRE(sol.has_value());
    CHECK((*sol)(0) == Int(2));
    CHECK((*sol)(1) == Int(-3));
    CHECK(!solveDiophantine(m, intVec({1, 0})).has_value());

    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix a = randomIntMatrix(rng, 3, 4, 4);
        const IntMatrix xs = randomIntMatrix(rng, 4, 1, 5);
        const IntVector rhs = a * xs.col(0);
        const auto s = solveDiophantine(a, rhs);
        REQUIRE(s.has_value());
        const IntVector back = a * *s;
        CHECK(allEqual(back, rhs));
    }
}
