// Dense exact matrices and the handful of generic operations the rest of the
// library leans on: fraction-free determinants, rational elimination,
// Kronecker products.
#pragma once

#include "ut4k/scalar.hpp"

#include <Eigen/Core>

#include <optional>

namespace ut4k {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <typename Derived, typename Other>
bool allEqual(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

RatMatrix toRat(const IntMatrix& m);
RatVector toRat(const IntVector& v);

// True when every entry is an integer.
bool isIntegral(const RatMatrix& m);
bool isIntegral(const RatVector& v);

// Requires isIntegral.
IntMatrix toInt(const RatMatrix& m);
IntVector toInt(const RatVector& v);

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination).
Int determinant(const IntMatrix& m);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rat determinant(const RatMatrix& m);

bool isUnimodular(const IntMatrix& m);

Index rank(const RatMatrix& m);

// Solves a*x = b over the rationals; empty when inconsistent. When the
// solution is not unique an arbitrary member of the affine solution set is
// returned.
std::optional<RatVector> solveLinear(const RatMatrix& a, const RatVector& b);

// Inverse of a square nonsingular rational matrix; empty when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Inverse of a unimodular integer matrix (adjugate route, stays integral).
IntMatrix unimodularInverse(const IntMatrix& m);

IntMatrix kroneckerProduct(const IntMatrix& a, const IntMatrix& b);

} // namespace ut4k
