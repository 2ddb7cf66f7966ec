#include "planesys/neg_curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "planesys/checked.hpp"
#include "planesys/cremona.hpp"

namespace planesys {

namespace {

// Partitions m1 >= ... >= mk >= 1 with sum S, square-sum Q, parts <= cap,
// at most max_parts parts (-1 = unlimited), emitted via callback.
void partition_dfs(long long S, long long Q, long long cap, long long max_parts,
                   std::vector<long long>& cur,
                   const std::function<void(const std::vector<long long>&)>& emit) {
    if (S == 0) {
        if (Q == 0) emit(cur);
        return;
    }
    if (S < 0 || Q < S) return;       // parts >= 1 force Q >= S
    if (cap <= 0 || Q > cap * S) return;  // parts <= cap force Q <= cap*S
    if (max_parts == 0) return;
    long long hi = std::min(cap, S);
    while (hi >= 1 && hi * hi > Q) --hi;
    for (long long v = hi; v >= 1; --v) {
        cur.push_back(v);
        partition_dfs(S - v, Q - v * v, v,
                      max_parts < 0 ? -1 : max_parts - 1, cur, emit);
        cur.pop_back();
    }
}

std::vector<LinearSystem> compute_shapes(long long d) {
    std::vector<LinearSystem> out;
    if (d < 1) return out;
    std::vector<long long> cur;
    // A numeric solution can still split off a curve (e.g. degree 6 with
    // multiplicities 4,3,2,1^8 is an elliptic cubic plus a disjoint point
    // class, yet has dimension 0); requiring the reduction to reach a
    // single point class keeps exactly the contractible ones.
    const LinearSystem point_class{0, {-1}};
    partition_dfs(3 * d - 1, d * d + 1, d, -1, cur,
                  [&](const std::vector<long long>& parts) {
                      LinearSystem cand{d, parts};
                      if (is_minus_one_class(cand) &&
                          canonical_form(cand) == point_class)
                          out.push_back(std::move(cand));
                  });
    std::sort(out.begin(), out.end());
    return out;
}

long long square_sum(const LinearSystem& L) {
    long long q = 0;
    for (long long v : L.m) q = checked_add(q, checked_mul(v, v));
    return q;
}

// Largest e >= 0 with e^2 * s <= q (s > 0).
long long degree_bound(long long q, long long s) {
    long long e = 0;
    while (checked_mul(checked_mul(e + 1, e + 1), s) <= q) ++e;
    return e;
}

bool is_zero_class(const LinearSystem& L) {
    return L.d == 0 && std::all_of(L.m.begin(), L.m.end(),
                                   [](long long v) { return v == 0; });
}

// All concrete placements E of `shape` on the points of D with
// pair(D, E) < 0, appended to `found` together with coefficient -pair.
void collect_shape_violators(const LinearSystem& D, const LinearSystem& shape,
                             std::vector<std::pair<long long, LinearSystem>>& found) {
    const int n = D.n();
    const int k = shape.n();
    if (k > n) return;
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return D.m[a] > D.m[b]; });
    std::vector<long long> sm(n);
    for (int i = 0; i < n; ++i) sm[i] = D.m[ord[i]];
    const long long target = checked_mul(shape.d, D.d);  // violation: dot > target

    std::vector<char> used(n, 0);
    std::vector<int> pos_of_part(k, -1);
    std::function<void(int, int, long long)> dfs =
        [&](int idx, int run_start, long long dot) {
            if (idx == k) {
                if (dot > target) {
                    LinearSystem E{shape.d, std::vector<long long>(n, 0)};
                    for (int t = 0; t < k; ++t) E.m[ord[pos_of_part[t]]] = shape.m[t];
                    found.emplace_back(dot - target, std::move(E));
                }
                return;
            }
            long long ub = dot;
            for (int pos = 0, pi = idx; pos < n && pi < k; ++pos)
                if (!used[pos]) ub += shape.m[pi++] * sm[pos];
            if (ub <= target) return;
            const int start = (idx > 0 && shape.m[idx] == shape.m[idx - 1]) ? run_start : 0;
            for (int pos = start; pos < n; ++pos) {
                if (used[pos]) continue;
                used[pos] = 1;
                pos_of_part[idx] = pos;
                dfs(idx + 1, pos + 1, dot + shape.m[idx] * sm[pos]);
                used[pos] = 0;
            }
        };
    dfs(0, 0, 0);
}

void verify_decomposition(const LinearSystem& D, const ZariskiDecomposition& z) {
    LinearSystem sum = z.P;
    for (const auto& [c, E] : z.negative_part) {
        if (c < 1)
            throw std::logic_error("zariski_decompose: non-positive coefficient");
        if (!is_minus_one_class(E))
            throw std::logic_error("zariski_decompose: component is not contractible");
        if (pair(z.P, E) != 0)
            throw std::logic_error("zariski_decompose: nef part meets a component");
        sum.d = checked_add(sum.d, checked_mul(c, E.d));
        for (int i = 0; i < sum.n(); ++i)
            sum.m[i] = checked_add(sum.m[i], checked_mul(c, E.m[i]));
    }
    for (std::size_t a = 0; a < z.negative_part.size(); ++a)
        for (std::size_t b = a + 1; b < z.negative_part.size(); ++b)
            if (pair(z.negative_part[a].second, z.negative_part[b].second) != 0)
                throw std::logic_error("zariski_decompose: components meet each other");
    if (sum != D)
        throw std::logic_error("zariski_decompose: parts do not reconstitute the class");
    if (!is_nef(z.P))
        throw std::logic_error("zariski_decompose: nef part fails the nef test");
    if (shgh_dim(z.P) != shgh_dim(D))
        throw std::logic_error("zariski_decompose: dimension not preserved");
}

} // namespace

bool is_minus_one_class(const LinearSystem& L) {
    return L.d >= 0 && self_intersection(L) == -1 && k_pairing(L) == -1 &&
           shgh_dim(L) == 0;
}

const std::vector<LinearSystem>& minus_one_shapes(long long degree) {
    static std::map<long long, std::vector<LinearSystem>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end()) it = cache.emplace(degree, compute_shapes(degree)).first;
    return it->second;
}

std::vector<LinearSystem> enumerate_minus_one_classes(int n, long long d_max) {
    if (n < 1)
        throw std::invalid_argument("enumerate_minus_one_classes: need n >= 1");
    std::set<LinearSystem> seen;
    std::vector<LinearSystem> queue;
    const auto push = [&](LinearSystem L) {
        std::sort(L.m.begin(), L.m.end(), std::greater<>());
        if (L.d < 0 || L.d > d_max) return;
        if (seen.insert(L).second) queue.push_back(L);
    };
    if (d_max >= 0) {
        LinearSystem E{0, std::vector<long long>(n, 0)};
        E.m[n - 1] = -1;
        push(E);
    }
    if (n >= 2 && d_max >= 1) {
        LinearSystem line{1, std::vector<long long>(n, 0)};
        line.m[0] = line.m[1] = 1;
        push(line);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (n < 3) break;
        const LinearSystem cur = queue[head];
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    push(quadratic_transform(cur, i, j, k));
    }
    return {seen.begin(), seen.end()};
}

std::vector<LinearSystem> diophantine_minus_one_classes(int n, long long d_max) {
    if (n < 1)
        throw std::invalid_argument("diophantine_minus_one_classes: need n >= 1");
    std::set<LinearSystem> out;
    if (d_max >= 0) {
        LinearSystem E{0, std::vector<long long>(n, 0)};
        E.m[n - 1] = -1;
        out.insert(E);
    }
    for (long long d = 1; d <= d_max; ++d) {
        std::vector<long long> cur;
        partition_dfs(3 * d - 1, d * d + 1, d, n, cur,
                      [&](const std::vector<long long>& parts) {
                          LinearSystem L{d, parts};
                          L.m.resize(n, 0);
                          out.insert(std::move(L));
                      });
    }
    return {out.begin(), out.end()};
}

unsigned long long permutation_count(const LinearSystem& sorted_class) {
    std::map<long long, long long> counts;
    for (long long v : sorted_class.m) ++counts[v];
    unsigned long long result = 1;
    long long remaining = sorted_class.n();
    for (const auto& [value, cnt] : counts) {
        (void)value;
        unsigned long long binom = 1;
        for (long long t = 1; t <= cnt; ++t) {
            unsigned long long next = 0;
            if (__builtin_mul_overflow(
                    binom, static_cast<unsigned long long>(remaining - cnt + t), &next))
                throw std::overflow_error("permutation_count: overflow");
            binom = next / static_cast<unsigned long long>(t);
        }
        unsigned long long res = 0;
        if (__builtin_mul_overflow(result, binom, &res))
            throw std::overflow_error("permutation_count: overflow");
        result = res;
        remaining -= cnt;
    }
    return result;
}

bool is_nef(const LinearSystem& L) {
    if (self_intersection(L) < 0) return false;
    const LinearSystem F = cremona_reduce(L).final;
    if (F.d < 0) return false;
    for (long long v : F.m)
        if (v < 0) return false;
    return true;
}

bool is_nef_bruteforce(const LinearSystem& L) {
    const long long s = self_intersection(L);
    const bool zero = is_zero_class(L);
    if (s <= 0 && !zero)
        throw std::domain_error("is_nef_bruteforce: requires L^2 > 0 or L = 0");
    if (zero) return true;
    if (L.d < 0) return false;
    for (long long v : L.m)
        if (v < 0) return false;
    const long long bound = degree_bound(square_sum(L), s);
    std::vector<long long> sm(L.m.begin(), L.m.end());
    std::sort(sm.begin(), sm.end(), std::greater<>());
    const int n = L.n();
    for (long long e = 1; e <= bound; ++e)
        for (const LinearSystem& shape : minus_one_shapes(e)) {
            if (shape.n() > n) continue;
            long long dot = 0;
            for (int i = 0; i < shape.n(); ++i) dot += sm[i] * shape.m[i];
            if (L.d * e - dot < 0) return false;
        }
    return true;
}

bool is_ample(const LinearSystem& L) {
    const long long s = self_intersection(L);
    if (s <= 0 || L.d < 1) return false;
    for (long long v : L.m)
        if (v < 1) return false;
    if (!is_nef(L)) return false;
    const long long bound = degree_bound(square_sum(L), s);
    std::vector<long long> sm(L.m.begin(), L.m.end());
    std::sort(sm.begin(), sm.end(), std::greater<>());
    const int n = L.n();
    for (long long e = 1; e <= bound; ++e)
        for (const LinearSystem& shape : minus_one_shapes(e)) {
            if (shape.n() > n) continue;
            long long dot = 0;
            for (int i = 0; i < shape.n(); ++i) dot += sm[i] * shape.m[i];
            if (L.d * e - dot < 1) return false;
        }
    return true;
}

ZariskiDecomposition zariski_decompose(const LinearSystem& D_in) {
    if (shgh_dim(D_in) < 0)
        throw std::domain_error("zariski_decompose: class is not effective");
    LinearSystem D = D_in;
    while (D.m.size() < 3) D.m.push_back(0);
    const int n = D.n();

    ZariskiDecomposition z;
    if (self_intersection(D) > 0) {
        for (int i = 0; i < n; ++i) {
            if (D.m[i] >= 0) continue;
            LinearSystem E{0, std::vector<long long>(n, 0)};
            E.m[i] = -1;
            z.negative_part.emplace_back(-D.m[i], std::move(E));
        }
        const long long bound = degree_bound(square_sum(D), self_intersection(D));
        for (long long e = 1; e <= bound; ++e)
            for (const LinearSystem& shape : minus_one_shapes(e))
                collect_shape_violators(D, shape, z.negative_part);
    } else {
        const ReductionTrace trace = cremona_reduce(D);
        for (int slot = 0; slot < n; ++slot) {
            if (trace.final.m[slot] >= 0) continue;
            LinearSystem Ef{0, std::vector<long long>(n, 0)};
            Ef.m[slot] = -1;
            z.negative_part.emplace_back(-trace.final.m[slot],
                                         pull_back(trace, Ef));
        }
    }

    z.P = D;
    for (const auto& [c, E] : z.negative_part) {
        z.P.d = checked_sub(z.P.d, checked_mul(c, E.d));
        for (int i = 0; i < n; ++i)
            z.P.m[i] = checked_sub(z.P.m[i], checked_mul(c, E.m[i]));
    }
    verify_decomposition(D, z);
    return z;
}

} // namespace planesys
