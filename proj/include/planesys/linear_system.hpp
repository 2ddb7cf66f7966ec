#pragma once

#include <optional>
#include <string>
#include <vector>

namespace planesys {

// A linear system |d; m_1,...,m_n| of plane curves of degree d with assigned
// base points of multiplicities m_i: the divisor class d*H - sum(m_i * E_i)
// on the plane blown up at n points.  Multiplicities may be zero or negative
// (negative entries encode added exceptional components).
//
// Values are immutable in spirit: every operation returns a new object.
struct LinearSystem {
    long long d{};              // degree (coefficient of H)
    std::vector<long long> m;   // multiplicities (coefficients subtracted)

    int n() const { return static_cast<int>(m.size()); }

    bool operator==(const LinearSystem&) const = default;
    // Lexicographic by (d, m); used for deterministic sorted output.
    auto operator<=>(const LinearSystem&) const = default;
};

// Canonical class on the blowup at n points: |-3; (-1)^n|, K^2 = 9 - n.
LinearSystem canonical_class(int n);

// Intersection pairing d1*d2 - sum(m1_i * m2_i); the shorter multiplicity
// vector is zero-padded.  Symmetric and bilinear.
long long pair(const LinearSystem& a, const LinearSystem& b);

// L^2 = d^2 - sum(m_i^2).
long long self_intersection(const LinearSystem& L);

// Arithmetic genus (d-1)(d-2)/2 - sum(m_i (m_i - 1)/2); defined for any
// integer entries (the lattice formula).
long long genus(const LinearSystem& L);

// L.K = -3d + sum(m_i).
long long k_pairing(const LinearSystem& L);

// Riemann-Roch expected dimension L^2 - g + 1 = L.(L-K)/2.
long long virtual_dim(const LinearSystem& L);

// |C + tK|: degree d - 3t, multiplicities m_i - t.  Requires t >= 0.
LinearSystem adjoint(const LinearSystem& L, long long t);

// Multiplicities sorted non-increasing, then trailing zeros removed.
// (After sorting, zeros sit between the positive and negative entries;
// "trailing" means the all-zero suffix when no negatives are present.)
LinearSystem normalize(const LinearSystem& L);

// Sorted non-increasing with ALL zero multiplicities removed; the
// representation-independent key for comparing classes across different n.
LinearSystem strip_zeros_sorted(const LinearSystem& L);

// Parse a literal like "6;2^8,1^3" (degree, then multiplicities with
// optional run-length exponents; negative entries written like -1).
// Accepts "4;" for an empty multiplicity list and tolerates surrounding
// whitespace and |...| delimiters.  Throws std::invalid_argument on
// malformed input.
LinearSystem parse_literal(const std::string& text);

// Print in the literal grammar with run-length exponents, normalizing
// first, so parse(print(L)) == normalize(L).
std::string to_literal(const LinearSystem& L);

// Print without normalizing (entries in stored order); used for traces.
std::string to_literal_raw(const LinearSystem& L);

} // namespace planesys
