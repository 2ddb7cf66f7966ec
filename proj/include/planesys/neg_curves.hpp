#pragma once

#include <utility>
#include <vector>

#include "planesys/linear_system.hpp"

namespace planesys {

// A class E with E^2 = -1, E.K = -1, degree >= 0, and expected dimension
// exactly zero: the classes of smooth rational curves contractible to a
// point (the exceptional configurations).
bool is_minus_one_class(const LinearSystem& L);

// All such classes on n points with degree <= d_max, one representative
// per multiplicity vector (length n, multiplicities sorted non-increasing),
// output sorted.  Computed as the breadth-first closure of the point
// classes and the pencil-of-lines classes under quadratic transformations
// at all index triples, pruning degree > d_max.
std::vector<LinearSystem> enumerate_minus_one_classes(int n, long long d_max);

// The same set computed independently: degree-d solutions of
//   sum(m) = 3d - 1,  sum(m^2) = d^2 + 1,  0 <= m_i <= d,
// together with the point classes.  Raw solution set (no effectivity
// filter); agrees with the closure for n <= 8, d_max <= 6, which is the
// audited range.
std::vector<LinearSystem> diophantine_minus_one_classes(int n, long long d_max);

// Number of distinct multiplicity orderings of a sorted length-n class:
// n! divided by the factorials of the value multiplicities.
unsigned long long permutation_count(const LinearSystem& sorted_class);

// Degree-d shapes (nonzero multiplicities only, sorted) of genuine
// contractible classes, for d >= 1; the Diophantine solutions that pass
// the dimension-zero test and whose reduction reaches a single point
// class (numeric coincidences that split off a curve are excluded).
// Cached and extended lazily by degree.
const std::vector<LinearSystem>& minus_one_shapes(long long degree);

// Non-negative pairing with every curve class.  Fast test via the
// reduction: the clamp-free reduced form must have non-negative degree
// and multiplicities, and L^2 must be non-negative.
bool is_nef(const LinearSystem& L);

// Audit version for L^2 > 0 (or L = 0): checks the pairing against every
// contractible class directly, using the Cauchy-Schwarz degree bound
// e^2 * L^2 <= sum(m^2) for a violator of degree e.
bool is_nef_bruteforce(const LinearSystem& L);

// Nef, L^2 > 0, and strictly positive pairing with every contractible
// class (point classes force every multiplicity >= 1).
bool is_ample(const LinearSystem& L);

struct ZariskiDecomposition {
    LinearSystem P;  // nef part, same length as the (padded) input
    std::vector<std::pair<long long, LinearSystem>> negative_part;  // (coefficient, class)
};

// Write an effective class D as P + sum(c_i * E_i) with P nef, the E_i
// contractible, mutually orthogonal, and orthogonal to P, preserving the
// computed dimension.  For D^2 > 0 the E_i are the concrete classes
// pairing negatively with D; otherwise they are read off the clamp-free
// reduced form and mapped back through the reduction steps.  All stated
// properties are verified before returning; failure throws.
ZariskiDecomposition zariski_decompose(const LinearSystem& D);

} // namespace planesys
