#include "planesys/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "planesys/adjoint.hpp"
#include "planesys/classify.hpp"
#include "planesys/cremona.hpp"

namespace planesys {

const std::vector<TableRow>& minimal_c2_rows() {
    static const std::vector<TableRow> rows = {
        {"9;3^8,2^2", 10, 0, 1, 2, 2, true},
        {"6;2^8,1^3", 11, 0, 1, 2, 1, true},
        {"4;2,1^11", 12, 0, 1, 2, 0, true},
        {"6;2^8,1^2", 10, 1, 2, 2, 1, true},
        {"4;2,1^10", 11, 1, 2, 2, 0, true},
        {"6;2^7,1^6", 13, 0, 2, 3, 1, false},
        {"4;1^14", 14, 0, 2, 3, 0, false},
        {"5;3,1^14", 15, 0, 2, 3, kGPrimeDash, true},
        {"4;2,1^9", 10, 2, 3, 2, 0, true},
        {"6;2^7,1^5", 12, 1, 3, 3, 1, false},
        {"4;1^13", 13, 1, 3, 3, 0, false},
        {"5;3,1^13", 14, 1, 3, 3, kGPrimeDash, true},
        {"5;2^2,1^14", 16, 0, 3, 4, 0, false},
        {"6;4,1^17", 18, 0, 3, 4, kGPrimeDash, true},
        {"6;2^7,1^4", 11, 2, 4, 3, 1, false},
        {"4;1^12", 12, 2, 4, 3, 0, false},
        {"5;3,1^12", 13, 2, 4, 3, kGPrimeDash, true},
        {"5;2^2,1^13", 15, 1, 4, 4, 0, false},
        {"6;2^5,1^12", 17, 0, 4, 5, 1, false},
        {"6;4,1^16", 17, 1, 4, 4, kGPrimeDash, true},
        {"7;5,1^20", 21, 0, 4, 5, kGPrimeDash, true},
        {"6;2^7,1^3", 10, 3, 5, 3, 1, false},
        {"4;1^11", 11, 3, 5, 3, 0, false},
        {"5;3,1^11", 12, 3, 5, 3, kGPrimeDash, true},
        {"5;2^2,1^12", 14, 2, 5, 4, 0, false},
        {"6;2^5,1^11", 16, 1, 5, 5, 1, false},
        {"6;4,1^15", 16, 2, 5, 4, kGPrimeDash, true},
        {"6;2^4,1^15", 19, 0, 5, 6, 1, false},
        {"5;1^20", 20, 0, 5, 6, 0, false},
        {"6;3,2,1^18", 20, 0, 5, 6, 0, false},
        {"7;5,1^19", 20, 1, 5, 5, kGPrimeDash, true},
        {"8;6,1^23", 24, 0, 5, 6, kGPrimeDash, true},
    };
    return rows;
}

const std::vector<TableRow>& c2_le5_rows() {
    static const std::vector<TableRow> rows = {
        {"4;2,1^9", 10, 2, 3, 2, 0, true},
        {"7;3,2^9", 10, 2, 4, 3, 2, false},
        {"9;3^8,2,1", 10, 2, 4, 3, 2, false},
        {"6;2^7,1^3", 10, 3, 5, 3, 1, false},
        {"12;4^7,3^3", 10, 2, 5, 4, 4, false},
        {"15;5^8,4,2", 10, 2, 5, 4, 4, false},
        {"6;2^7,1^4", 11, 2, 4, 3, 1, false},
        {"4;1^11", 11, 3, 5, 3, 0, false},
        {"7;2^11", 11, 2, 5, 4, 3, false},
        {"9;3^7,2^3,1", 11, 2, 5, 4, 3, false},
        {"12;4^8,3,1^2", 11, 2, 5, 4, 3, false},
        {"4;1^12", 12, 2, 4, 3, 0, false},
        {"5;3,1^11", 12, 3, 5, 3, kGPrimeDash, true},
        {"7;3,2^8,1^3", 12, 2, 5, 4, 2, false},
        {"9;3^8,1^4", 12, 2, 5, 4, 2, false},
        {"5;3,1^12", 13, 2, 4, 3, kGPrimeDash, true},
        {"6;2^6,1^7", 13, 2, 5, 4, 1, false},
        {"5;2^2,1^12", 14, 2, 5, 4, 0, false},
        {"6;4,1^15", 16, 2, 5, 4, kGPrimeDash, true},
    };
    return rows;
}

namespace {

std::string make_key(const std::string& literal, int n, long long r, long long c2,
                     long long g, long long g_prime, bool hyper) {
    std::ostringstream os;
    os << literal << "|n=" << n << "|r=" << r << "|c2=" << c2 << "|g=" << g
       << "|g'=";
    if (g_prime == kGPrimeDash)
        os << "-";
    else
        os << g_prime;
    os << "|" << (hyper ? "hyperelliptic" : "non-hyperelliptic");
    return os.str();
}

std::string analyzed_key(const LinearSystem& L, long long r) {
    const AdjointProfile p = adjoint_profile(L);
    const long long gp = p.composed_with_pencil ? kGPrimeDash : p.g_prime;
    return make_key(to_literal(L), L.n(), r, self_intersection(L), genus(L), gp,
                    p.hyperelliptic);
}

void compare_sets(const std::set<std::string>& expected,
                  const std::set<std::string>& computed, const char* label,
                  bool& ok, std::vector<std::string>& mismatches) {
    ok = (expected == computed);
    if (ok) return;
    for (const std::string& k : expected)
        if (!computed.count(k))
            mismatches.push_back(std::string(label) + ": missing " + k);
    for (const std::string& k : computed)
        if (!expected.count(k))
            mismatches.push_back(std::string(label) + ": unexpected " + k);
}

} // namespace

TableVerification verify_tables(long long deg_max) {
    TableVerification v;
    std::set<std::string> got_minimal, got_catalog;
    for (int n = 10; n <= 30; ++n) {
        for (long long r = 0; r <= 8; ++r) {
            ++v.cells_scanned;
            const std::vector<LinearSystem> E = enumerate_systems(n, r, 5, deg_max);
            if (E.empty()) continue;
            long long mn = self_intersection(E.front());
            for (const LinearSystem& L : E)
                mn = std::min(mn, self_intersection(L));
            for (const LinearSystem& L : E) {
                const std::string key = analyzed_key(L, r);
                if (self_intersection(L) == mn) got_minimal.insert(key);
                if (r >= 2) got_catalog.insert(key);
            }
        }
    }

    std::set<std::string> want_minimal, want_catalog;
    for (const TableRow& row : minimal_c2_rows())
        want_minimal.insert(make_key(to_literal(parse_literal(row.literal)), row.n,
                                     row.r, row.c2, row.g, row.g_prime,
                                     row.hyperelliptic));
    for (const TableRow& row : c2_le5_rows())
        want_catalog.insert(make_key(to_literal(parse_literal(row.literal)), row.n,
                                     row.r, row.c2, row.g, row.g_prime,
                                     row.hyperelliptic));

    compare_sets(want_minimal, got_minimal, "minimal-c2-table", v.minimal_ok,
                 v.mismatches);
    compare_sets(want_catalog, got_catalog, "c2-le-5-catalog", v.catalog_ok,
                 v.mismatches);
    return v;
}

} // namespace planesys
