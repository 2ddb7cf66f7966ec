#include "planesys/adjoint.hpp"

#include <cmath>
#include <stdexcept>

#include "planesys/checked.hpp"
#include "planesys/cremona.hpp"

namespace planesys {

namespace {

// Upper bound for the number of nonempty adjoint levels of a genus-g class:
// ceil(g + 11 + sqrt((g+11)^2 + 4(g-1))) plus slack.
long long chain_scan_cap(long long g) {
    const double base = static_cast<double>(g) + 11.0;
    const double root = std::sqrt(base * base + 4.0 * static_cast<double>(g - 1));
    long long cap = static_cast<long long>(std::ceil(base + root));
    while (static_cast<double>(cap) < base + root) ++cap;
    return cap + 2;
}

} // namespace

AdjointProfile adjoint_profile(const LinearSystem& C) {
    if (shgh_dim(C) < 0)
        throw std::domain_error("adjoint_profile: class is not effective");
    AdjointProfile p;
    p.g = genus(C);
    if (p.g < 2)
        throw std::domain_error("adjoint_profile: requires genus >= 2");

    const long long cap = chain_scan_cap(p.g);
    std::vector<long long> dims(cap + 1, -1);
    for (long long t = 0; t <= cap; ++t) dims[t] = shgh_dim(adjoint(C, t));

    long long m = 0;
    for (long long t = 1; t <= cap; ++t)
        if (dims[t] >= 0) m = t;
    if (m == 0)
        throw std::domain_error("adjoint_profile: level-1 adjoint is empty");
    if (m == cap || dims[cap] >= 0)
        throw std::logic_error("adjoint_profile: chain did not terminate within the bound");
    for (long long t = 1; t <= m; ++t)
        if (dims[t] < 0)
            throw std::logic_error("adjoint_profile: nonempty levels are not an interval");

    p.m = m;
    p.alpha = dims[m];
    p.g_prime = genus(adjoint(C, 1));

    for (long long t = 0; t <= m + 1; ++t) {
        AdjointChainEntry entry;
        entry.t = t;
        entry.dim = dims[t];
        if (dims[t] >= 0) entry.zariski = zariski_decompose(adjoint(C, t));
        p.chain.push_back(std::move(entry));
    }

    const long long dim1 = dims[1];
    const ZariskiDecomposition& z1 = *p.chain[1].zariski;
    if (dim1 == 1) {
        p.hyperelliptic = true;
        p.composed_with_pencil = false;
        p.pencil = z1.P;
    } else if (dim1 >= 2 && self_intersection(z1.P) == 0) {
        p.hyperelliptic = true;
        p.composed_with_pencil = true;
        LinearSystem F = z1.P;
        if (F.d % dim1 != 0)
            throw std::logic_error("adjoint_profile: pencil multiple does not divide degree");
        F.d /= dim1;
        for (long long& v : F.m) {
            if (v % dim1 != 0)
                throw std::logic_error("adjoint_profile: pencil multiple does not divide multiplicities");
            v /= dim1;
        }
        if (self_intersection(F) != 0)
            throw std::logic_error("adjoint_profile: extracted pencil is not square-zero");
        p.pencil = std::move(F);
    } else {
        p.hyperelliptic = false;
        p.composed_with_pencil = false;
    }
    return p;
}

bool g_prime_identity_check(const LinearSystem& C) {
    const int n = C.n();
    if (n < 10)
        throw std::domain_error("g_prime_identity_check: requires n >= 10");
    const AdjointProfile p = adjoint_profile(C);
    if (p.hyperelliptic)
        throw std::domain_error("g_prime_identity_check: requires a non-hyperelliptic class");
    const long long r = shgh_dim(C);
    const long long c2 = self_intersection(C);
    return 2 * c2 == 3 * r + n - 10 + p.g_prime;
}

} // namespace planesys
