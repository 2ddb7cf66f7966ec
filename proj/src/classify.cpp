#include "planesys/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "planesys/cremona.hpp"
#include "planesys/neg_curves.hpp"

namespace planesys {

namespace {

LinearSystem build_runs(long long d,
                        std::initializer_list<std::pair<long long, long long>> runs) {
    LinearSystem L{d, {}};
    for (const auto& [value, count] : runs)
        for (long long t = 0; t < count; ++t) L.m.push_back(value);
    return L;
}

long long ceil_phi(long long g) {
    const double base = static_cast<double>(g) + 11.0;
    const double root = std::sqrt(base * base + 4.0 * static_cast<double>(g - 1));
    long long c = static_cast<long long>(std::ceil(base + root));
    while (static_cast<double>(c) < base + root) ++c;
    return c;
}

// Exactly `parts` values v1 >= ... >= v_parts >= 1, each <= cap, with the
// given sum and square-sum, and the first three values summing to at most
// top3_cap.  Values are emitted in descending order.
void exact_partition_dfs(long long S, long long Q, long long parts, long long cap,
                         long long top3_cap, long long top3_partial, int depth,
                         std::vector<long long>& cur,
                         const std::function<void(const std::vector<long long>&)>& emit) {
    if (parts == 0) {
        if (S == 0 && Q == 0) emit(cur);
        return;
    }
    if (S < parts || Q < S) return;
    if (cap < 1 || S > parts * cap) return;
    if (Q * parts < S * S) return;  // Cauchy-Schwarz
    if (Q > cap * S) return;
    long long hi = std::min(cap, S - (parts - 1));
    while (hi >= 1 && hi * hi > Q - (parts - 1)) --hi;
    const long long lo = (S + parts - 1) / parts;  // largest remaining part
    for (long long v = hi; v >= lo; --v) {
        if (depth < 3 && top3_partial + v > top3_cap) continue;
        cur.push_back(v);
        exact_partition_dfs(S - v, Q - v * v, parts - 1, v, top3_cap,
                            depth < 3 ? top3_partial + v : top3_partial,
                            depth + 1, cur, emit);
        cur.pop_back();
    }
}

// Partitions of W = sum v(v-1) into parts v >= 2 (descending, parts <= cap),
// pruned by the running sum of v(v+1) against load_cap (no system with
// sum m(m+1) > d(d+3) has sections, and appending ones only adds load).
void weight_partition_dfs(long long W, long long cap, long long load,
                          long long load_cap, std::vector<long long>& cur,
                          const std::function<void(const std::vector<long long>&)>& emit) {
    if (W == 0) {
        emit(cur);
        return;
    }
    if (cap < 2) return;
    // Each unit of v(v-1) costs at least (cap+1)/(cap-1) units of v(v+1).
    if (load * (cap - 1) + W * (cap + 1) > load_cap * (cap - 1)) return;
    long long hi = cap;
    while (hi >= 2 && hi * (hi - 1) > W) --hi;
    for (long long v = hi; v >= 2; --v) {
        cur.push_back(v);
        weight_partition_dfs(W - v * (v - 1), v, load + v * (v + 1), load_cap,
                             cur, emit);
        cur.pop_back();
    }
}

} // namespace

NormalFormMatch classify_mm(const LinearSystem& C) {
    const AdjointProfile p = adjoint_profile(C);
    const LinearSystem N = normalize(C);
    for (long long v : N.m)
        if (v < 1)
            throw std::domain_error(
                "classify_mm: requires positive multiplicities after trimming");
    const long long d = N.d;
    const auto b = [&](int i) -> long long {
        return i <= N.n() ? N.m[i - 1] : 0;
    };
    const long long m = p.m, alpha = p.alpha;

    std::vector<NormalFormMatch> matches;
    if (alpha == 0 && d == 3 * m && b(1) <= m)
        matches.push_back({1, m, alpha, 0});
    if (alpha == 0 && m >= 2) {
        const long long e = d - 3 * m;
        if (e > 0 && e < m && b(1) == m + e && b(2) == m + e && b(3) <= m - e)
            matches.push_back({2, m, alpha, e});
    }
    if (alpha >= 1 && d == 3 * m + alpha && b(1) == m + alpha && b(2) <= m)
        matches.push_back({3, m, alpha, 0});
    if (alpha >= 1 && m >= 2) {
        const long long e = d - 3 * m - alpha;
        if (e > 0 && e < m && b(1) == m + alpha + e && b(2) == m + e && b(3) <= m - e)
            matches.push_back({4, m, alpha, e});
    }
    if ((alpha == 2 || alpha == 5) && d == 3 * m + alpha / 2 && b(1) <= m)
        matches.push_back({5, m, alpha, 0});
    if (alpha >= 4 && alpha % 2 == 0 && d == 3 * m + alpha / 2 &&
        b(1) == m - 1 + alpha / 2 && b(2) <= m)
        matches.push_back({6, m, alpha, 0});
    if (alpha >= 3 && alpha % 2 == 1) {
        const long long e = d - 3 * m - (alpha + 1) / 2;
        if (e >= 0 && e < m && b(1) == m + (alpha - 1) / 2 + e &&
            b(2) == m + e + 1 && b(3) <= m - e)
            matches.push_back({7, m, alpha, e});
    }
    if (matches.empty())
        throw std::logic_error("classify_mm: no normal-form family matches");
    if (matches.size() > 1)
        throw std::logic_error("classify_mm: several normal-form families match");
    return matches[0];
}

LinearSystem family_2b4(long long b, long long m, long long k) {
    if (b < 1 || m < 0 || m > 4 || k < 9 - m || k > 10 * b - 3 * m + 14)
        throw std::domain_error("family_2b4: parameters out of range");
    LinearSystem L{2 * b + 4, {}};
    L.m.push_back(2 * b);
    L.m.insert(L.m.end(), static_cast<std::size_t>(m), 2);
    L.m.insert(L.m.end(), static_cast<std::size_t>(k), 1);
    return L;
}

long long ce_bound(long long gamma) {
    if (gamma < 0)
        throw std::domain_error("ce_bound: requires gamma >= 0");
    return 3 * gamma + 5 + (gamma == 1 ? 1 : 0);
}

MinC2Report min_c2(int n, long long r) {
    if (n < 10)
        throw std::domain_error("min_c2: classified range starts at n = 10");
    if (r < 0)
        throw std::domain_error("min_c2: requires r >= 0");
    MinC2Report rep;
    rep.n = n;
    rep.r = r;
    const long long s = n + r;
    rep.h = s / 2;
    rep.parity = static_cast<int>(s % 2);
    rep.b_param = (rep.h - 7 + 4) / 5;  // ceil((h-7)/5), h >= 5 here

    struct Cand {
        LinearSystem sys;
        const char* tag;
    };
    std::vector<Cand> cands;
    std::optional<long long> hyper;
    const auto hyper_value = [&](long long v) {
        hyper = hyper ? std::min(*hyper, v) : v;
    };

    // hyperelliptic families
    if (s == 11 && n >= 8 && n <= 11) {
        hyper_value(12 - n);
        cands.push_back({build_runs(6, {{2, 8}, {1, n - 8}}), "6;2^8,1^(n-8)"});
    }
    if (s % 3 == 0 && s / 3 - 2 >= 2) {
        const long long g = s / 3 - 2;
        hyper_value((n + 4 * r) / 3 - 3);
        cands.push_back({build_runs(g + 2, {{g, 1}, {1, n - 1}}), "g+2;g,1^(n-1)"});
    }
    if (n == 10 && r == 0) {
        hyper_value(1);
        cands.push_back({build_runs(9, {{3, 8}, {2, 2}}), "9;3^8,2^2"});
    }

    // non-hyperelliptic track
    long long nonhyp = 0;
    if (s == 10) {
        nonhyp = 2;
        cands.push_back({build_runs(15, {{5, 7}, {4, 3}}), "15;5^7,4^3"});
        cands.push_back({build_runs(18, {{6, 8}, {5, 1}, {3, 1}}), "18;6^8,5,3"});
    } else if (s == 11) {
        if (r == 0) {
            nonhyp = 2;
            cands.push_back({build_runs(9, {{3, 7}, {2, 4}}), "9;3^7,2^4"});
        } else {
            nonhyp = 3;
            cands.push_back({build_runs(10, {{4, 1}, {3, 9}}), "10;4,3^9"});
            cands.push_back({build_runs(12, {{4, 8}, {3, 1}, {2, 1}}), "12;4^8,3,2"});
        }
    } else if (rep.parity == 0) {
        if (s == 12) {
            nonhyp = r + 2;
            {
                const long long k = (30 - s) / 2, l = n - 1 - k;
                if (k >= 0 && l >= 0)
                    cands.push_back({build_runs(7, {{3, 1}, {2, k}, {1, l}}), "7;3,2^k,1^l"});
            }
            {
                const long long k = (14 - s) / 2, l = n - 8 - k;
                if (k >= 0 && l >= 0)
                    cands.push_back({build_runs(9, {{3, 8}, {2, k}, {1, l}}), "9;3^8,2^k,1^l"});
            }
        } else {
            nonhyp = rep.h + r - 5;
            if (rep.h == 10)
                cands.push_back({build_runs(5, {{1, n}}), "5;1^n"});
            if (rep.h % 2 == 1 && rep.h >= 7) {
                const long long t = (rep.h - 5) / 2;
                cands.push_back({build_runs(t + 3, {{t, 1}, {1, n - 1}}), "t+3;t,1^(n-1)"});
            }
            if (rep.h % 2 == 0 && rep.h >= 8) {
                const long long t = (rep.h - 4) / 2;
                cands.push_back({build_runs(t + 3, {{t, 1}, {2, 1}, {1, n - 2}}),
                                 "t+3;t,2,1^(n-2)"});
            }
        }
    } else {
        if (s >= 13 && s <= 27) {
            nonhyp = rep.h + r - 4;
            const long long l = (27 - s) / 2;
            if (n - l >= 0)
                cands.push_back({build_runs(6, {{2, l}, {1, n - l}}), "6;2^l,1^k"});
            if (s == 25 && n >= 2)
                cands.push_back({build_runs(7, {{3, 2}, {1, n - 2}}), "7;3^2,1^(n-2)"});
        } else {  // odd s >= 29
            nonhyp = rep.h + rep.b_param + r - 5;
            const long long b = rep.b_param;
            const long long mm = 5 * b - (rep.h - 7);
            const long long k = n - mm - 1;
            if (mm >= 0 && mm <= 4 && k >= 9 - mm && k <= 10 * b - 3 * mm + 14)
                cands.push_back({family_2b4(b, mm, k), "2b+4;2b,2^m,1^k"});
            if (s <= 35) {
                const long long l = (35 - s) / 2;
                if (n - l >= 0)
                    cands.push_back({build_runs(7, {{2, l}, {1, n - l}}), "7;2^l,1^k"});
            }
            if (s == 37 || s == 39) {
                const long long l = (39 - s) / 2;
                if (l >= 0 && n - 1 - l >= 0)
                    cands.push_back({build_runs(8, {{3, 1}, {2, l}, {1, n - 1 - l}}),
                                     "8;3,2^l,1^k"});
            }
        }
    }

    if (hyper && *hyper > nonhyp)
        throw std::logic_error("min_c2: hyperelliptic floor exceeds the general floor");
    rep.hyper_min = hyper;
    rep.nonhyper_min = nonhyp;
    rep.overall_min = hyper ? std::min(*hyper, nonhyp) : nonhyp;

    std::set<std::string> seen;
    for (const Cand& c : cands) {
        const LinearSystem& L = c.sys;
        if (L.n() != n) continue;
        if (!std::all_of(L.m.begin(), L.m.end(), [](long long v) { return v >= 1; }))
            continue;
        if (self_intersection(L) != rep.overall_min) continue;
        if (shgh_dim(L) != r)
            throw std::logic_error("min_c2: achiever dimension mismatch");
        if (!is_ample(L))
            throw std::logic_error("min_c2: achiever fails the ample test");
        if (seen.insert(to_literal(L)).second) rep.achievers.push_back({L, c.tag});
    }
    if (rep.achievers.empty())
        throw std::logic_error("min_c2: no validated achiever at the computed minimum");
    return rep;
}

std::vector<LinearSystem> enumerate_systems(int n, long long r, long long c2max,
                                            long long deg_max) {
    if (n < 1)
        throw std::domain_error("enumerate_systems: requires n >= 1");
    if (r < 0)
        throw std::domain_error("enumerate_systems: requires r >= 0");
    std::vector<LinearSystem> out;
    for (long long s = std::max(1LL, r + 1); s <= c2max; ++s) {
        for (long long a = 1; a <= deg_max; ++a) {
            const long long S = 3 * a + s - 2 * r;
            const long long Q = a * a - s;
            if (S < n || Q < n) continue;
            std::vector<long long> cur;
            exact_partition_dfs(
                S, Q, n, a, a, 0, 0, cur,
                [&](const std::vector<long long>& parts) {
                    LinearSystem L{a, parts};
                    if (!is_ample(L)) return;
                    if (genus(L) != s - r + 1 || shgh_dim(L) != r ||
                        self_intersection(L) != s)
                        throw std::logic_error(
                            "enumerate_systems: internal invariant failure");
                    out.push_back(std::move(L));
                });
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GenusCatalog enumerate_genus(long long g, long long deg_max) {
    if (g < 2)
        throw std::domain_error("enumerate_genus: requires genus >= 2");
    if (deg_max < 1)
        throw std::domain_error("enumerate_genus: requires deg_max >= 1");
    GenusCatalog cat;
    cat.g = g;
    cat.deg_max = deg_max;
    const long long M = ceil_phi(g);
    cat.complete = deg_max >= 13 * M + (M + 2) * (g - 1);

    std::set<LinearSystem> found;
    for (long long a = 3; a <= deg_max; ++a) {
        const long long W = (a - 1) * (a - 2) - 2 * g;
        if (W < 0) continue;
        const long long load_cap = a * (a + 3);
        std::vector<long long> cur;
        weight_partition_dfs(
            W, a - 2, 0, load_cap, cur,
            [&](const std::vector<long long>& big) {
                LinearSystem base{a, big};
                const long long vd = virtual_dim(base);
                for (long long k = 0; k <= vd; ++k) {
                    LinearSystem L = base;
                    L.m.insert(L.m.end(), static_cast<std::size_t>(k), 1);
                    if (!is_cremona_reduced(L)) break;
                    if (genus(L) != g || shgh_dim(L) != vd - k)
                        throw std::logic_error(
                            "enumerate_genus: internal invariant failure");
                    if (!is_ample(L)) continue;
                    found.insert(std::move(L));
                }
            });
    }
    cat.systems.assign(found.begin(), found.end());
    return cat;
}

GapReport gap_analysis(int n, long long r, long long deg_max) {
    if (n < 10 || r < 2)
        throw std::domain_error("gap_analysis: requires n >= 10 and r >= 2");
    const MinC2Report rep = min_c2(n, r);
    GapReport gr;
    gr.n = n;
    gr.r = r;
    gr.overall_min = rep.overall_min;
    gr.target = rep.overall_min + 1;
    for (const LinearSystem& L : enumerate_systems(n, r, gr.target, deg_max))
        if (self_intersection(L) == gr.target) gr.witnesses.push_back(L);
    gr.attained = !gr.witnesses.empty();
    return gr;
}

} // namespace planesys
