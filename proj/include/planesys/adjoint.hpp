#pragma once

#include <optional>
#include <vector>

#include "planesys/linear_system.hpp"
#include "planesys/neg_curves.hpp"

namespace planesys {

struct AdjointChainEntry {
    long long t{};
    long long dim{};  // computed dimension at level t; -1 when empty
    std::optional<ZariskiDecomposition> zariski;  // for nonempty levels
};

struct AdjointProfile {
    long long g{};        // sectional genus of the input class
    long long m{};        // largest t >= 1 with nonempty level-t adjoint
    long long alpha{};    // dimension at level m
    long long g_prime{};  // genus of the level-1 adjoint class (may be negative)
    bool hyperelliptic{};
    // When the level-1 sections are composed with a pencil (dimension >= 2
    // but square-zero nef part), the curves are hyperelliptic and the
    // numerical genus of the adjoint class is not the curve genus; the
    // profile records the pencil class and flags the composition.
    bool composed_with_pencil{};
    std::optional<LinearSystem> pencil;  // set when hyperelliptic
    std::vector<AdjointChainEntry> chain;  // levels t = 0 .. m+1
};

// Iterated adjoint analysis of an effective class of genus >= 2: level-t
// dimensions, Zariski decompositions, the termination level m with its
// dimension alpha, and the hyperelliptic/pencil structure read off level 1.
// The nonempty levels are verified to form the interval [0, m]; the scan
// range is the proven degree bound for the chain, and failure to terminate
// within it throws.
AdjointProfile adjoint_profile(const LinearSystem& C);

// For a non-hyperelliptic ample class on n >= 10 points, the double-cover
// count gives 2*C^2 == 3*r + n - 10 + g', with r the dimension and g' the
// level-1 adjoint genus.  Returns the identity's truth value.
bool g_prime_identity_check(const LinearSystem& C);

} // namespace planesys
