// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// Time budgets and expected values are pinned as constants next to each check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planesys/adjoint.hpp"
#include "planesys/classify.hpp"
#include "planesys/cremona.hpp"
#include "planesys/linear_system.hpp"
#include "planesys/neg_curves.hpp"
#include "planesys/oracle.hpp"
#include "planesys/tables.hpp"

using namespace planesys;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok{};
    double seconds{};
    std::string detail;  // shown on failure (or as a NOTE when ok)
};

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<TableRow> all_table_rows() {
    std::vector<TableRow> rows = minimal_c2_rows();
    const std::vector<TableRow>& extra = c2_le5_rows();
    rows.insert(rows.end(), extra.begin(), extra.end());
    return rows;
}

// Criterion 1: the two frozen classification tables are reproduced exactly by
// exhaustive enumeration (degree cap 30), within 60 seconds.
Outcome criterion1() {
    constexpr double kBudget = 60.0;
    auto t0 = Clock::now();
    TableVerification v = verify_tables(30);
    Outcome o;
    o.seconds = elapsed(t0);
    o.ok = v.minimal_ok && v.catalog_ok && o.seconds < kBudget;
    if (!v.mismatches.empty()) o.detail = v.mismatches.front();
    if (o.seconds >= kBudget) o.detail += " over time budget";
    return o;
}

// Criterion 2: on the grid 10 <= n <= 24, 0 <= r <= 10, the closed-form
// minimum matches exhaustive enumeration: no system below it, and the systems
// attaining it are exactly the formula's achievers.  Within 600 seconds.
Outcome criterion2() {
    constexpr double kBudget = 600.0;
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;
    for (int n = 10; n <= 24 && o.ok; ++n) {
        for (long long r = 0; r <= 10 && o.ok; ++r) {
            MinC2Report rep = min_c2(n, r);
            std::vector<LinearSystem> E = enumerate_systems(n, r, rep.overall_min);
            std::set<std::string> got, want;
            for (const LinearSystem& L : E) {
                long long c2 = self_intersection(L);
                if (c2 < rep.overall_min) {
                    o.ok = false;
                    o.detail = "below-minimum system " + to_literal(L);
                }
                if (c2 == rep.overall_min) got.insert(to_literal(L));
            }
            for (const Achiever& a : rep.achievers) want.insert(to_literal(a.system));
            if (got != want) {
                o.ok = false;
                o.detail = "achiever mismatch at n=" + std::to_string(n) +
                           " r=" + std::to_string(r);
            }
        }
    }
    o.seconds = elapsed(t0);
    if (o.seconds >= kBudget) { o.ok = false; o.detail += " over time budget"; }
    return o;
}

// Criterion 3: the finite-field interpolation oracle agrees with the
// reduction-based dimension on a 500-system seeded corpus plus every table
// system of degree at most 15.  Zero mismatches, within 120 seconds.
Outcome criterion3() {
    constexpr double kBudget = 120.0;
    constexpr int kCorpus = 500;
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;
    std::mt19937_64 rng(2026);
    for (int i = 0; i < kCorpus && o.ok; ++i) {
        LinearSystem L;
        L.d = 1 + (long long)(rng() % 10);
        int n = 1 + (int)(rng() % 10);
        for (int j = 0; j < n; ++j) L.m.push_back((long long)(rng() % 5));
        if (oracle_dim(L) != shgh_dim(L)) {
            o.ok = false;
            o.detail = "corpus mismatch at " + to_literal_raw(L);
        }
    }
    for (const TableRow& row : all_table_rows()) {
        LinearSystem L = parse_literal(row.literal);
        if (L.d > 15) continue;
        if (oracle_dim(L) != shgh_dim(L)) {
            o.ok = false;
            o.detail = std::string("table mismatch at ") + row.literal;
        }
    }
    o.seconds = elapsed(t0);
    if (o.seconds >= kBudget) { o.ok = false; o.detail += " over time budget"; }
    return o;
}

// Criterion 4: orbit enumeration of exceptional classes agrees with the
// direct arithmetic scan for n <= 8, degree cap 6, including the weighted
// counts 27 (n=6, d<=3) and 240 (n=8, d<=6).  Within 30 seconds.
Outcome criterion4() {
    constexpr double kBudget = 30.0;
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;
    for (int n = 1; n <= 8 && o.ok; ++n) {
        for (long long dmax = 0; dmax <= 6 && o.ok; ++dmax) {
            if (enumerate_minus_one_classes(n, dmax) !=
                diophantine_minus_one_classes(n, dmax)) {
                o.ok = false;
                o.detail = "enumeration disagreement at n=" + std::to_string(n) +
                           " dmax=" + std::to_string(dmax);
            }
        }
    }
    unsigned long long w6 = 0, w8 = 0;
    for (const LinearSystem& c : enumerate_minus_one_classes(6, 3))
        w6 += permutation_count(c);
    for (const LinearSystem& c : enumerate_minus_one_classes(8, 6))
        w8 += permutation_count(c);
    if (w6 != 27) { o.ok = false; o.detail = "weighted count n=6 is " + std::to_string(w6); }
    if (w8 != 240) { o.ok = false; o.detail = "weighted count n=8 is " + std::to_string(w8); }
    o.seconds = elapsed(t0);
    if (o.seconds >= kBudget) { o.ok = false; o.detail += " over time budget"; }
    return o;
}

// Criterion 5: property suites.
//  (a) 10^4 random systems (mixed-sign multiplicities): every quadratic
//      transform preserves self-intersection, genus, canonical pairing, and
//      the computed dimension, and is an involution.
//  (b) 10^3 random systems with positive self-intersection: the fast nef test
//      agrees with the shape-scan audit.
//  (c) every adjoint-chain level of every table row carries a verified
//      positive-part decomposition preserving the dimension.
//  (d) 10^4 random systems satisfy the adjunction identity.
Outcome criterion5() {
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;
    std::mt19937_64 rng(424242);

    for (int i = 0; i < 10000 && o.ok; ++i) {
        int n = 3 + (int)(rng() % 10);
        LinearSystem L;
        L.d = (long long)(rng() % 13);
        for (int j = 0; j < n; ++j) L.m.push_back((long long)(rng() % 10) - 3);
        int a = (int)(rng() % n), b, c;
        do { b = (int)(rng() % n); } while (b == a);
        do { c = (int)(rng() % n); } while (c == a || c == b);
        LinearSystem T = quadratic_transform(L, a, b, c);
        bool good = self_intersection(T) == self_intersection(L) &&
                    genus(T) == genus(L) && k_pairing(T) == k_pairing(L) &&
                    quadratic_transform(T, a, b, c) == L &&
                    shgh_dim(T) == shgh_dim(L);
        if (!good) { o.ok = false; o.detail = "transform property at " + to_literal_raw(L); }
    }

    int compared = 0;
    while (compared < 1000 && o.ok) {
        int n = 1 + (int)(rng() % 10);
        LinearSystem L;
        L.d = (long long)(rng() % 9);
        for (int j = 0; j < n; ++j) L.m.push_back((long long)(rng() % 5) - 1);
        if (self_intersection(L) <= 0) continue;
        ++compared;
        if (is_nef(L) != is_nef_bruteforce(L)) {
            o.ok = false;
            o.detail = "nef disagreement at " + to_literal_raw(L);
        }
    }

    for (const TableRow& row : all_table_rows()) {
        if (!o.ok) break;
        LinearSystem C = parse_literal(row.literal);
        AdjointProfile p = adjoint_profile(C);
        for (const AdjointChainEntry& entry : p.chain) {
            if (entry.dim < 0) continue;
            if (!entry.zariski.has_value()) {
                o.ok = false;
                o.detail = std::string("missing decomposition in chain of ") + row.literal;
                break;
            }
            const ZariskiDecomposition& z = *entry.zariski;
            LinearSystem level = adjoint(C, entry.t);
            LinearSystem sum = z.P;
            bool good = is_nef(z.P) && shgh_dim(z.P) == shgh_dim(level);
            for (const auto& [coef, E] : z.negative_part) {
                good = good && coef >= 1 && is_minus_one_class(E) && pair(z.P, E) == 0;
                sum.d += coef * E.d;
                for (int j = 0; j < sum.n(); ++j) sum.m[j] += coef * E.m[j];
            }
            good = good && sum == level;
            if (!good) {
                o.ok = false;
                o.detail = std::string("decomposition property in chain of ") + row.literal;
                break;
            }
        }
    }

    for (int i = 0; i < 10000 && o.ok; ++i) {
        int n = (int)(rng() % 13);
        LinearSystem L;
        L.d = (long long)(rng() % 20) - 4;
        for (int j = 0; j < n; ++j) L.m.push_back((long long)(rng() % 13) - 4);
        if (genus(L) != (self_intersection(L) + k_pairing(L)) / 2 + 1) {
            o.ok = false;
            o.detail = "adjunction identity at " + to_literal_raw(L);
        }
    }

    o.seconds = elapsed(t0);
    return o;
}

// Criterion 6: classification coherence.
//  (a) the second-genus identity holds on every non-hyperelliptic table row;
//  (b) g = C^2 - r + 1 on every table row;
//  (c) the double-heavy family has the stated n, r, g, C^2, and second genus
//      for every member with b <= 5;
//  (d) grid cells with n+r in {32, 34} have no system at one above the
//      minimum (the spectrum gap);
//  (e) for odd n+r = 2h+1 with 8 <= h <= 13 and 2 <= r <= 4 the value
//      h + ceil((h-7)/5) + r - 4 is attained;
//  (f) six spot cells attain one above the minimum, with pinned witnesses.
Outcome criterion6() {
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;

    for (const TableRow& row : all_table_rows()) {
        LinearSystem L = parse_literal(row.literal);
        if (!row.hyperelliptic && !g_prime_identity_check(L)) {
            o.ok = false;
            o.detail = std::string("second-genus identity fails at ") + row.literal;
        }
        if (genus(L) != row.c2 - row.r + 1) {
            o.ok = false;
            o.detail = std::string("genus identity fails at ") + row.literal;
        }
    }

    for (long long b = 1; b <= 5 && o.ok; ++b)
        for (long long m = 0; m <= 4 && o.ok; ++m)
            for (long long k = 9 - m; k <= 10 * b - 3 * m + 14 && o.ok; ++k) {
                LinearSystem F = family_2b4(b, m, k);
                bool good = F.n() == m + k + 1 &&
                            shgh_dim(F) == 10 * b - 3 * m - k + 14 &&
                            genus(F) == 6 * b - m + 3 &&
                            self_intersection(F) == 16 * b - 4 * m - k + 16 &&
                            adjoint_profile(F).g_prime == 2 * b - 1;
                if (!good) {
                    o.ok = false;
                    o.detail = "family member b=" + std::to_string(b) +
                               " m=" + std::to_string(m) + " k=" + std::to_string(k);
                }
            }

    const std::pair<int, long long> gap_cells[] = {{22, 10}, {24, 8}, {24, 10}};
    for (const auto& [n, r] : gap_cells) {
        if (!o.ok) break;
        GapReport g = gap_analysis(n, r);
        if (g.attained) {
            o.ok = false;
            o.detail = "unexpected system above the minimum at n=" +
                       std::to_string(n) + " r=" + std::to_string(r);
        }
    }

    for (long long h = 8; h <= 13 && o.ok; ++h)
        for (long long r = 2; r <= 4 && o.ok; ++r) {
            int n = (int)(2 * h + 1 - r);
            long long b = (h - 7 + 4) / 5;
            long long target = h + b + r - 4;
            bool hit = false;
            for (const LinearSystem& L : enumerate_systems(n, r, target))
                if (self_intersection(L) == target) hit = true;
            if (!hit) {
                o.ok = false;
                o.detail = "odd-total value not attained at h=" + std::to_string(h) +
                           " r=" + std::to_string(r);
            }
        }

    struct SpotCell { int n; long long r; const char* witness; };
    const SpotCell spot_cells[] = {
        {10, 3, "9;3^7,2^3"}, {11, 2, "7;2^11"},      {12, 3, "6;2^6,1^6"},
        {13, 2, "6;2^6,1^7"}, {10, 5, "6;2^6,1^4"},   {11, 4, "6;2^6,1^5"},
    };
    for (const SpotCell& c : spot_cells) {
        if (!o.ok) break;
        GapReport g = gap_analysis(c.n, c.r);
        bool found = false;
        for (const LinearSystem& w : g.witnesses)
            if (to_literal(w) == to_literal(parse_literal(c.witness))) found = true;
        if (!g.attained || !found) {
            o.ok = false;
            o.detail = "spot cell n=" + std::to_string(c.n) +
                       " r=" + std::to_string(c.r) + " missing witness " + c.witness;
        }
    }
    if (o.ok)
        o.detail = "NOTE: the six spot cells (10,3) (11,2) (12,3) (13,2) (10,5) "
                   "(11,4) each attain self-intersection one above the minimum; "
                   "expectations pin the enumerated outcome with verified witnesses.";

    o.seconds = elapsed(t0);
    return o;
}

// Criterion 7: the genus-two catalog (degree cap 12) contains exactly the 17
// known systems; the 14 with r >= 1 are pinned literally; the genus-2 and
// genus-3 catalogs are unchanged when the degree cap grows from 30 to 40.
Outcome criterion7() {
    auto t0 = Clock::now();
    Outcome o;
    o.ok = true;

    GenusCatalog cat = enumerate_genus(2, 12);
    std::set<std::string> got_all, got_pos, want_pos;
    for (const LinearSystem& L : cat.systems) {
        got_all.insert(to_literal(L));
        if (shgh_dim(L) >= 1) got_pos.insert(to_literal(L));
    }
    for (int k = 0; k <= 10; ++k) {
        LinearSystem L = parse_literal("4;2");
        for (int i = 0; i < k; ++i) L.m.push_back(1);
        want_pos.insert(to_literal(L));
    }
    for (int k = 0; k <= 2; ++k) {
        LinearSystem L = parse_literal("6;2^8");
        for (int i = 0; i < k; ++i) L.m.push_back(1);
        want_pos.insert(to_literal(L));
    }
    if (want_pos.size() != 14 || got_pos != want_pos) {
        o.ok = false;
        o.detail = "positive-dimension genus-2 catalog mismatch";
    }
    if (got_all.size() != 17 || got_all.count("9;3^8,2^2") != 1) {
        o.ok = false;
        o.detail = "genus-2 catalog size/content mismatch";
    }

    if (o.ok) {
        GenusCatalog g2a = enumerate_genus(2, 30), g2b = enumerate_genus(2, 40);
        GenusCatalog g3a = enumerate_genus(3, 30), g3b = enumerate_genus(3, 40);
        if (g2a.systems != g2b.systems || g3a.systems != g3b.systems) {
            o.ok = false;
            o.detail = "catalog changed between degree caps 30 and 40";
        }
    }

    o.seconds = elapsed(t0);
    return o;
}

} // namespace

int main() {
    struct Entry { const char* name; Outcome (*run)(); };
    const Entry entries[] = {
        {"frozen-tables-reproduced", criterion1},
        {"minimal-c2-grid-vs-enumeration", criterion2},
        {"interpolation-oracle-agreement", criterion3},
        {"exceptional-class-enumeration", criterion4},
        {"lattice-property-suites", criterion5},
        {"classification-coherence", criterion6},
        {"genus-catalog-stability", criterion7},
    };
    int failures = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        Outcome o = e.run();
        std::printf("%s criterion-%d %s (%.2fs)\n", o.ok ? "PASS" : "FAIL",
                    index, e.name, o.seconds);
        if (!o.ok) {
            ++failures;
            if (!o.detail.empty()) std::printf("     %s\n", o.detail.c_str());
        } else if (!o.detail.empty()) {
            std::printf("     %s\n", o.detail.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
    return failures == 0 ? 0 : 1;
}
