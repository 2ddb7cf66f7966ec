#pragma once

#include <vector>

#include "planesys/linear_system.hpp"

namespace planesys {

// Quadratic plane transformation based at points i, j, k (0-based, distinct):
//   degree  -> 2d - m_i - m_j - m_k
//   m_i     -> d - m_j - m_k   (and cyclically for j, k)
// All other multiplicities unchanged.  An involution that preserves the
// intersection pairing, the genus, and the pairing with the canonical class.
// The input is zero-padded to at least three multiplicities if needed.
LinearSystem quadratic_transform(const LinearSystem& L, int i, int j, int k);

// One recorded step of the reduction: the permutation that sorted the
// multiplicities (new_m[slot] = old_m[perm[slot]]), then optionally a
// quadratic transformation at the first three slots.
struct ReduceStep {
    std::vector<int> perm;
    bool transformed{};
};

struct ReductionTrace {
    LinearSystem initial;             // zero-padded input
    LinearSystem final;               // reduced form, multiplicities sorted
    std::vector<ReduceStep> steps;
};

// Repeatedly sort multiplicities non-increasing and, while d < m1+m2+m3,
// apply the quadratic transformation at the three largest.  Negative
// multiplicities produced mid-reduction are kept (never clamped).  The
// final form satisfies d >= m1+m2+m3 with sorted multiplicities.
// Terminates because the degree strictly decreases at every transform;
// a hard iteration cap guards against defects.
ReductionTrace cremona_reduce(const LinearSystem& L);

// d >= m1+m2+m3 for the three largest multiplicities (zero-padded).
bool is_cremona_reduced(const LinearSystem& L);

// Map a companion class through the same sequence of steps (forward), or
// back from final coordinates to initial coordinates (pull_back).  The
// class must have the same padded length as the trace's working vector.
LinearSystem push_forward(const ReductionTrace& trace, const LinearSystem& X);
LinearSystem pull_back(const ReductionTrace& trace, const LinearSystem& X);

// Reduced form with zero multiplicities dropped and the rest sorted:
// the representation-independent canonical form of the equivalence class.
LinearSystem canonical_form(const LinearSystem& L);

// True iff the canonical forms coincide (comparing across different n).
bool cremona_equivalent(const LinearSystem& a, const LinearSystem& b);

// Dimension of the complete linear system under the standard
// non-speciality conjecture (SHGH) for general points: clamp negative
// multiplicities to zero (added exceptional components do not change h^0),
// reduce, re-clamp whenever a step exposes negatives; at a reduced
// non-negative form return -1 if the degree is negative, else
// max(virtual_dim, -1).
long long shgh_dim(const LinearSystem& L);

struct CohomologyTriple {
    long long h0{}, h1{}, h2{};
    long long dim() const { return h0 - 1; }
};

// h0 = shgh_dim(L) + 1; h2 = shgh_dim(K - L) + 1 (Serre duality);
// h1 from the Euler characteristic h0 - h1 + h2 = virtual_dim + 1.
// A negative h1 signals an internal inconsistency and throws.
CohomologyTriple cohomology(const LinearSystem& L);

} // namespace planesys
