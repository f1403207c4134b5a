// Smith normal form over the integers, and the kernel/cokernel bookkeeping
// built on top of it.
#pragma once

#include "ut4k/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ut4k {

// u * m * v = d with u, v unimodular, d diagonal with nonnegative entries
// d1 | d2 | ... | dr followed by zeros.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    Index rank() const;
    std::vector<Int> diagonal() const;
};

// Deterministic elimination: the pivot is the entry of minimal nonzero
// absolute value in the remaining block, ties broken by lowest row then
// lowest column, so u and v are reproducible.
SmithForm smithNormalForm(const IntMatrix& m);

// A finitely generated abelian group in invariant-factor form:
// Z^freeRank + Z/f1 + ... + Z/fk with 1 < f1 | f2 | ... | fk.
struct FpAbelianGroup {
    Index freeRank = 0;
    std::vector<Int> invariantFactors;

    bool operator==(const FpAbelianGroup&) const = default;
    bool isFree() const { return invariantFactors.empty(); }
    // "Z^3", "Z + Z/2", "0", ...
    std::string describe() const;
};

// Z^rows / (column span of m).
FpAbelianGroup cokernel(const IntMatrix& m);

// Rows form a basis of the integer kernel {x : m x = 0}. The kernel of an
// integer matrix is saturated, so the basis is automatically primitive.
IntMatrix kernelBasis(const IntMatrix& m);

// One integer solution of m x = rhs, if any. The full solution set is the
// returned vector plus the span of kernelBasis(m).
std::optional<IntVector> solveDiophantine(const IntMatrix& m, const IntVector& rhs);

} // namespace ut4k
