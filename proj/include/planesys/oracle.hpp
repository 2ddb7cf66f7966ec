#pragma once

#include <cstdint>

#include "planesys/linear_system.hpp"

namespace planesys {

struct OracleConfig {
    std::int64_t prime = 2147483647;  // 2^31 - 1
    std::uint64_t seed = 42;
    int trials = 3;
};

// Independent dimension check by explicit interpolation over F_p: place n
// random distinct points, build the matrix of vanishing conditions (all
// Hasse derivatives of order < m_i at the i-th point) on the coefficients
// of a degree-d plane curve, and return (#coefficients - 1 - rank).
// Negative multiplicities impose no conditions and are clamped to zero.
// Degenerate point choices can only lower the rank, so the minimum of the
// computed dimensions over the trials is the best (smallest) estimate and
// is what general position yields with overwhelming probability.
// Deterministic for a fixed config.  Requires degree >= 0.
long long oracle_dim(const LinearSystem& L, const OracleConfig& cfg = {});

} // namespace planesys
