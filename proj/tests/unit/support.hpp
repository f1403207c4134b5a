// Shared helpers for the unit tests: deterministic random matrices and small
// conversion shims.
#pragma once

#include "ut4k/matrix.hpp"

#include <random>

namespace testsupport {

using ut4k::Index;
using ut4k::Int;
using ut4k::IntMatrix;
using ut4k::IntVector;
using ut4k::Rat;
using ut4k::RatMatrix;
using ut4k::RatVector;

using Rng = std::mt19937_64;

inline IntMatrix randomIntMatrix(Rng& rng, Index rows, Index cols, int maxAbs)
{
    std::uniform_int_distribution<int> dist(-maxAbs, maxAbs);
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = Int(dist(rng));
    return m;
}

// Product of random elementary operations: always determinant +-1.
inline IntMatrix randomUnimodular(Rng& rng, Index n, int ops = 12, int maxShear = 3)
{
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> shear(-maxShear, maxShear);
    std::uniform_int_distribution<int> kind(0, 5);
    IntMatrix m = IntMatrix::Identity(n, n);
    for (int s = 0; s < ops; ++s) {
        const Index i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
        case 0:
        case 1:
        case 2: {
            if (i == j) break;
            const Int c(shear(rng));
            for (Index k = 0; k < n; ++k) m(i, k) += c * m(j, k);
            break;
        }
        case 3:
            if (i != j) m.row(i).swap(m.row(j));
            break;
        case 4:
            for (Index k = 0; k < n; ++k) m(i, k) = -m(i, k);
            break;
        default: {
            if (i == j) break;
            const Int c(shear(rng));
            for (Index k = 0; k < n; ++k) m(k, i) += c * m(k, j);
            break;
        }
        }
    }
    return m;
}

inline IntMatrix fromRows(std::initializer_list<std::initializer_list<long>> rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = Int(v);
        ++i;
    }
    return m;
}

inline RatVector ratVec(std::initializer_list<Rat> vals)
{
    RatVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (const Rat& r : vals) v(i++) = r;
    return v;
}

inline IntVector intVec(std::initializer_list<long> vals)
{
    IntVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (long r : vals) v(i++) = Int(r);
    return v;
}

} // namespace testsupport
