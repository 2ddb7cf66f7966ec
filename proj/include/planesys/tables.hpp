#pragma once

#include <string>
#include <vector>

#include "planesys/linear_system.hpp"

namespace planesys {

struct TableRow {
    const char* literal;
    int n;
    long long r;
    long long c2;
    long long g;
    long long g_prime;   // kGPrimeDash when displayed as a dash
    bool hyperelliptic;
};

inline constexpr long long kGPrimeDash = -1000;

// The reference catalog of minimal-self-intersection ample systems:
// for every (n, r) with n >= 10 whose minimum C^2 is at most 5, the
// system(s) attaining it.
const std::vector<TableRow>& minimal_c2_rows();

// The reference catalog of all ample systems with C^2 <= 5 and r >= 2.
const std::vector<TableRow>& c2_le5_rows();

struct TableVerification {
    bool minimal_ok{};
    bool catalog_ok{};
    long long cells_scanned{};
    std::vector<std::string> mismatches;
};

// Recompute both catalogs by exhaustive enumeration over n in [10, 30],
// r in [0, 8] (degree <= deg_max) and compare them, row by row including
// all displayed invariants, against the frozen reference data.
TableVerification verify_tables(long long deg_max = 30);

} // namespace planesys
