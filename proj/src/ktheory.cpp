#include "ut4k/ktheory.hpp"

#include "ut4k/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ut4k {

std::vector<std::vector<int>> exteriorBasis(int n)
{
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= n; ++size) {
        // Lexicographic enumeration of the ascending size-subsets.
        std::vector<int> s(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) s[static_cast<size_t>(i)] = i;
        while (true) {
            out.push_back(s);
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && s[static_cast<size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

namespace {

std::vector<std::vector<int>> filterByParity(int n, int parity)
{
    std::vector<std::vector<int>> out;
    for (auto& s : exteriorBasis(n))
        if (static_cast<int>(s.size()) % 2 == parity) out.push_back(s);
    return out;
}

Int minor(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    const Index k = static_cast<Index>(rows.size());
    IntMatrix sub(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            sub(i, j) = m(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
    return determinant(sub);
}

IntMatrix gradedBlock(const IntMatrix& m, const std::vector<std::vector<int>>& basis)
{
    const Index dim = static_cast<Index>(basis.size());
    IntMatrix block(dim, dim);
    for (Index col = 0; col < dim; ++col) {
        const auto& source = basis[static_cast<size_t>(col)];
        for (Index row = 0; row < dim; ++row) {
            const auto& target = basis[static_cast<size_t>(row)];
            block(row, col) =
                target.size() == source.size() ? minor(m, target, source) : Int(0);
        }
    }
    return block;
}

} // namespace

std::vector<std::vector<int>> exteriorBasisEven(int n) { return filterByParity(n, 0); }
std::vector<std::vector<int>> exteriorBasisOdd(int n) { return filterByParity(n, 1); }

Index exteriorIndexOf(const std::vector<std::vector<int>>& basis, const std::vector<int>& subset)
{
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == subset) return static_cast<Index>(i);
    return -1;
}

GradedAutomorphism exteriorAction(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("exteriorAction: matrix not square");
    if (!isUnimodular(m)) throw std::invalid_argument("exteriorAction: matrix not unimodular");
    GradedAutomorphism g;
    g.n = static_cast<int>(m.rows());
    g.even = gradedBlock(m, exteriorBasisEven(g.n));
    g.odd = gradedBlock(m, exteriorBasisOdd(g.n));
    return g;
}

PvResult pvCrossedProduct(const IntMatrix& m0, const IntMatrix& m1)
{
    if (m0.rows() != m0.cols() || m1.rows() != m1.cols())
        throw std::invalid_argument("pvCrossedProduct: actions must be square");
    const IntMatrix d0 = IntMatrix::Identity(m0.rows(), m0.rows()) - m0;
    const IntMatrix d1 = IntMatrix::Identity(m1.rows(), m1.rows()) - m1;
    PvResult r;
    r.k0Coker = cokernel(d0);
    r.k1Coker = cokernel(d1);
    r.k0KerRank = kernelBasis(d0).rows();
    r.k1KerRank = kernelBasis(d1).rows();
    r.k0 = r.k0Coker;
    r.k0.freeRank += r.k1KerRank;
    r.k1 = r.k1Coker;
    r.k1.freeRank += r.k0KerRank;
    return r;
}

IntMatrix ut4AlphaMatrix()
{
    IntMatrix a = IntMatrix::Identity(4, 4);
    a(1, 0) = Int(-1); // x1 -> x1 - x2
    a(2, 3) = Int(1);  // x4 -> x3 + x4
    return a;
}

Ut4KGroups ut4KGroups()
{
    Ut4KGroups out;
    out.action = exteriorAction(ut4AlphaMatrix());
    out.pv = pvCrossedProduct(out.action.even, out.action.odd);
    return out;
}

IntMatrix betaTensorK1Matrix()
{
    IntMatrix shear(2, 2);
    shear << Int(1), Int(1), Int(0), Int(1);
    const IntMatrix id2 = IntMatrix::Identity(2, 2);
    const IntMatrix blockA = kroneckerProduct(id2, shear);
    const IntMatrix blockB = kroneckerProduct(shear, id2);
    IntMatrix m = IntMatrix::Zero(8, 8);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) {
            m(i, j) = blockA(i, j);
            m(4 + i, 4 + j) = blockB(i, j);
        }
    return m;
}

ElliottInvariant elliottInvariant(const RealAlgebraic& theta)
{
    if (theta.degree() < 2) throw DomainError("elliottInvariant: theta is rational");
    ElliottInvariant inv;
    inv.theta = theta;
    inv.field = NumberField::create(theta);

    const Ut4KGroups kg = ut4KGroups();
    inv.k0 = kg.pv.k0;
    inv.k1 = kg.pv.k1;

    const FieldElement one = inv.field->one();
    const FieldElement t = inv.field->theta();
    const FieldElement t2 = inv.field->thetaPower(2);
    inv.coneNormal = {one, t, t2};
    for (int i = 3; i < 10; ++i) inv.coneNormal.push_back(inv.field->zero());

    inv.orderUnit = IntVector::Zero(10);
    inv.orderUnit(0) = Int(1);

    const Index d = inv.field->degree();
    RatMatrix gens(3, d);
    gens.row(0) = one.coords().transpose();
    gens.row(1) = t.coords().transpose();
    gens.row(2) = t2.coords().transpose();
    inv.traceRange = latticeFromGenerators(gens, d);
    return inv;
}

bool coneContains(const ElliottInvariant& inv, const IntVector& x)
{
    if (x.size() != 10) throw std::invalid_argument("coneContains: vector must have length 10");
    bool zero = true;
    for (Index i = 0; i < x.size(); ++i)
        if (!x(i).isZero()) {
            zero = false;
            break;
        }
    if (zero) return true;
    FieldElement pairing = inv.field->zero();
    for (Index i = 0; i < 3; ++i) {
        const FieldElement term = inv.field->fromRational(Rat(x(i))) * inv.coneNormal[static_cast<size_t>(i)];
        pairing = pairing + term;
    }
    return signOf(pairing) > 0;
}

bool traceRangeContains(const ElliottInvariant& inv, const FieldElement& a)
{
    if (!a.field() || !a.field()->sameField(*inv.field))
        throw std::invalid_argument("traceRangeContains: element from a different field");
    return latticeContains(inv.traceRange, a.coords());
}

} // namespace ut4k
