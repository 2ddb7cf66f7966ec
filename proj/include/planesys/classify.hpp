#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planesys/adjoint.hpp"
#include "planesys/linear_system.hpp"

namespace planesys {

// The seven normal-form families, keyed by the invariants (m, alpha)
// of the adjoint chain and the shape of the sorted multiplicity vector.
struct NormalFormMatch {
    int family{};      // 1..7
    long long m{};     // adjoint chain length
    long long alpha{}; // dimension at the last nonempty level
    long long e{};     // shape offset parameter (0 where the family has none)
};

// Match an effective genus >= 2 class (nonzero multiplicities, sorted)
// against the normal-form families.  Exactly one family must match;
// zero or several matches throw.
NormalFormMatch classify_mm(const LinearSystem& C);

struct Achiever {
    LinearSystem system;
    std::string family;  // structural tag, e.g. "6;2^l,1^k"
};

struct MinC2Report {
    int n{};
    long long r{};
    long long h{};       // floor((n+r)/2)
    int parity{};        // (n+r) mod 2
    long long b_param{}; // ceil((h-7)/5), the step parameter of the large-h families
    std::optional<long long> hyper_min;     // min C^2 over hyperelliptic families, if any apply
    long long nonhyper_min{};
    long long overall_min{};
    std::vector<Achiever> achievers;        // all systems attaining overall_min
};

// Minimum self-intersection of an ample system of dimension r on n >= 10
// general points, from the closed-form family analysis, together with the
// achieving systems (validated computationally before being reported).
MinC2Report min_c2(int n, long long r);

// The family |2b+4; 2b, 2^m, 1^k|; requires b >= 1, 0 <= m <= 4, and
// 9 - m <= k <= 10b - 3m + 14.
LinearSystem family_2b4(long long b, long long m, long long k);

// Self-intersection threshold below which the genus-gamma double-cover
// analysis applies: 3*gamma + 5, plus 1 when gamma == 1.
long long ce_bound(long long gamma);

// All ample systems on exactly n points (every multiplicity >= 1, sorted,
// reduced presentation) with dimension r, self-intersection <= c2max, and
// degree <= deg_max.  Sorted and duplicate-free.
std::vector<LinearSystem> enumerate_systems(int n, long long r, long long c2max,
                                            long long deg_max = 30);

struct GenusCatalog {
    long long g{};
    long long deg_max{};
    bool complete{};  // deg_max reaches the theoretical degree cap for this genus
    std::vector<LinearSystem> systems;  // trimmed presentations, sorted
};

// All ample reduced systems of sectional genus g with degree <= deg_max.
GenusCatalog enumerate_genus(long long g, long long deg_max);

struct GapReport {
    int n{};
    long long r{};
    long long overall_min{};
    long long target{};  // overall_min + 1
    bool attained{};
    std::vector<LinearSystem> witnesses;  // systems with C^2 == target
};

// Whether the value overall_min + 1 is realized by an ample system,
// decided by enumeration.
GapReport gap_analysis(int n, long long r, long long deg_max = 30);

} // namespace planesys
