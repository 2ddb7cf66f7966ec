#include "planesys/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planesys {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }  // p < 2^31, no overflow

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Pascal's triangle mod p, rows 0..n.
std::vector<std::vector<u64>> binomial_table(int n, u64 p) {
    std::vector<std::vector<u64>> C(n + 1);
    for (int i = 0; i <= n; ++i) {
        C[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) C[i][j] = (C[i - 1][j - 1] + C[i - 1][j]) % p;
    }
    return C;
}

long long rank_mod_p(std::vector<std::vector<u64>>& rows, int cols, u64 p) {
    long long rank = 0;
    int col = 0;
    for (std::size_t pivot_row = 0; pivot_row < rows.size() && col < cols; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const u64 inv = invmod(rows[pivot_row][col], p);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            const u64 factor = mulmod(rows[r][col], inv, p);
            for (int c = col; c < cols; ++c) {
                const u64 sub = mulmod(factor, rows[pivot_row][c], p);
                rows[r][c] = (rows[r][c] + p - sub) % p;
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace

long long oracle_dim(const LinearSystem& L, const OracleConfig& cfg) {
    if (L.d < 0)
        throw std::domain_error("oracle_dim: degree must be non-negative");
    if (cfg.trials < 1)
        throw std::invalid_argument("oracle_dim: at least one trial required");
    const u64 p = static_cast<u64>(cfg.prime);
    if (cfg.prime < 5)
        throw std::invalid_argument("oracle_dim: prime too small");

    const int d = static_cast<int>(L.d);
    const int n = L.n();
    std::vector<long long> mult(L.m.begin(), L.m.end());
    for (long long& b : mult) b = std::max(b, 0LL);

    const long long cols_ll = static_cast<long long>(d + 1) * (d + 2) / 2;
    long long rows_ll = 0;
    for (long long b : mult) rows_ll += b * (b + 1) / 2;
    if (cols_ll > 5000 || rows_ll > 20000)
        throw std::domain_error("oracle_dim: condition matrix exceeds configured size cap");
    const int cols = static_cast<int>(cols_ll);

    const int max_b = mult.empty() ? 0 : static_cast<int>(*std::max_element(mult.begin(), mult.end()));
    const auto C = binomial_table(std::max(d, max_b) + 1, p);

    long long best = -2;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::mt19937_64 rng(cfg.seed + 1000003ULL * static_cast<u64>(trial));
        std::set<std::pair<u64, u64>> seen;
        std::vector<std::pair<u64, u64>> pts;
        while (static_cast<int>(pts.size()) < n) {
            const u64 x = rng() % p;
            const u64 y = rng() % p;
            if (seen.insert({x, y}).second) pts.push_back({x, y});
        }

        std::vector<std::vector<u64>> rows;
        rows.reserve(static_cast<std::size_t>(rows_ll));
        for (int pt = 0; pt < n; ++pt) {
            const int b = static_cast<int>(mult[pt]);
            if (b == 0) continue;
            std::vector<u64> xp(d + 1, 1), yp(d + 1, 1);
            for (int e = 1; e <= d; ++e) {
                xp[e] = mulmod(xp[e - 1], pts[pt].first, p);
                yp[e] = mulmod(yp[e - 1], pts[pt].second, p);
            }
            for (int alpha = 0; alpha < b; ++alpha) {
                for (int beta = 0; alpha + beta < b; ++beta) {
                    std::vector<u64> row(cols, 0);
                    int idx = 0;
                    for (int i = 0; i <= d; ++i) {
                        for (int j = 0; j <= d - i; ++j, ++idx) {
                            if (i < alpha || j < beta) continue;
                            u64 v = mulmod(C[i][alpha], C[j][beta], p);
                            v = mulmod(v, xp[i - alpha], p);
                            v = mulmod(v, yp[j - beta], p);
                            row[idx] = v;
                        }
                    }
                    rows.push_back(std::move(row));
                }
            }
        }

        const long long rank = rows.empty() ? 0 : rank_mod_p(rows, cols, p);
        const long long dim = cols - 1 - rank;
        best = (best == -2) ? dim : std::min(best, dim);
    }
    return best;
}

} // namespace planesys
