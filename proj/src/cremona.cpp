#include "planesys/cremona.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "planesys/checked.hpp"

namespace planesys {

namespace {

constexpr long long kMaxReduceIterations = 1'000'000;

LinearSystem padded_to_three(const LinearSystem& L) {
    LinearSystem out = L;
    while (out.m.size() < 3) out.m.push_back(0);
    return out;
}

// Indices of the three largest multiplicities of an already-sorted vector
// are simply 0, 1, 2; this helper gives the stable sorting permutation for
// an arbitrary vector: perm[slot] = index in the old vector.
std::vector<int> sorting_permutation(const std::vector<long long>& m) {
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return m[a] > m[b]; });
    return perm;
}

std::vector<long long> apply_permutation(const std::vector<long long>& m,
                                         const std::vector<int>& perm) {
    std::vector<long long> out(m.size());
    for (std::size_t s = 0; s < perm.size(); ++s) out[s] = m[perm[s]];
    return out;
}

std::vector<long long> apply_inverse_permutation(const std::vector<long long>& m,
                                                 const std::vector<int>& perm) {
    std::vector<long long> out(m.size());
    for (std::size_t s = 0; s < perm.size(); ++s) out[perm[s]] = m[s];
    return out;
}

} // namespace

LinearSystem quadratic_transform(const LinearSystem& L, int i, int j, int k) {
    if (i == j || j == k || i == k)
        throw std::invalid_argument("quadratic_transform: indices must be distinct");
    LinearSystem out = padded_to_three(L);
    const int n = out.n();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw std::invalid_argument("quadratic_transform: index out of range");
    const long long d = out.d;
    const long long mi = out.m[i], mj = out.m[j], mk = out.m[k];
    out.d = checked_sub(checked_mul(2, d), checked_add(mi, checked_add(mj, mk)));
    out.m[i] = checked_sub(d, checked_add(mj, mk));
    out.m[j] = checked_sub(d, checked_add(mi, mk));
    out.m[k] = checked_sub(d, checked_add(mi, mj));
    return out;
}

ReductionTrace cremona_reduce(const LinearSystem& L) {
    ReductionTrace trace;
    trace.initial = padded_to_three(L);
    LinearSystem cur = trace.initial;
    for (long long iter = 0; iter < kMaxReduceIterations; ++iter) {
        ReduceStep step;
        step.perm = sorting_permutation(cur.m);
        cur.m = apply_permutation(cur.m, step.perm);
        const long long top3 = cur.m[0] + cur.m[1] + cur.m[2];
        if (cur.d >= top3) {
            step.transformed = false;
            trace.steps.push_back(std::move(step));
            trace.final = cur;
            return trace;
        }
        step.transformed = true;
        trace.steps.push_back(std::move(step));
        cur = quadratic_transform(cur, 0, 1, 2);
    }
    throw std::runtime_error("cremona_reduce: iteration cap exceeded");
}

bool is_cremona_reduced(const LinearSystem& L) {
    LinearSystem p = padded_to_three(L);
    std::vector<long long> m = p.m;
    std::partial_sort(m.begin(), m.begin() + 3, m.end(), std::greater<>());
    return p.d >= m[0] + m[1] + m[2];
}

LinearSystem push_forward(const ReductionTrace& trace, const LinearSystem& X) {
    if (X.m.size() != trace.initial.m.size())
        throw std::invalid_argument("push_forward: companion class has wrong length");
    LinearSystem cur = X;
    for (const ReduceStep& step : trace.steps) {
        cur.m = apply_permutation(cur.m, step.perm);
        if (step.transformed) cur = quadratic_transform(cur, 0, 1, 2);
    }
    return cur;
}

LinearSystem pull_back(const ReductionTrace& trace, const LinearSystem& X) {
    if (X.m.size() != trace.initial.m.size())
        throw std::invalid_argument("pull_back: companion class has wrong length");
    LinearSystem cur = X;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (it->transformed) cur = quadratic_transform(cur, 0, 1, 2);
        cur.m = apply_inverse_permutation(cur.m, it->perm);
    }
    return cur;
}

LinearSystem canonical_form(const LinearSystem& L) {
    return strip_zeros_sorted(cremona_reduce(L).final);
}

bool cremona_equivalent(const LinearSystem& a, const LinearSystem& b) {
    return canonical_form(a) == canonical_form(b);
}

long long shgh_dim(const LinearSystem& L) {
    LinearSystem cur = padded_to_three(L);
    for (long long iter = 0; iter < kMaxReduceIterations; ++iter) {
        for (long long& v : cur.m)
            if (v < 0) v = 0;
        if (cur.d < 0) return -1;
        std::sort(cur.m.begin(), cur.m.end(), std::greater<>());
        if (cur.d >= cur.m[0] + cur.m[1] + cur.m[2])
            return std::max(virtual_dim(cur), -1LL);
        cur = quadratic_transform(cur, 0, 1, 2);
    }
    throw std::runtime_error("shgh_dim: iteration cap exceeded");
}

CohomologyTriple cohomology(const LinearSystem& L) {
    const int n = L.n();
    const LinearSystem K = canonical_class(n);
    LinearSystem KmL;
    KmL.d = checked_sub(K.d, L.d);
    KmL.m.resize(n);
    for (int i = 0; i < n; ++i) KmL.m[i] = checked_sub(K.m[i], L.m[i]);

    CohomologyTriple h;
    h.h0 = shgh_dim(L) + 1;
    h.h2 = shgh_dim(KmL) + 1;
    const long long chi = checked_add(virtual_dim(L), 1);
    h.h1 = checked_sub(checked_add(h.h0, h.h2), chi);
    if (h.h1 < 0)
        throw std::logic_error("cohomology: negative h1 from dimension computations");
    return h;
}

} // namespace planesys
