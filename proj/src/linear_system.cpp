#include "planesys/linear_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "planesys/checked.hpp"

namespace planesys {

LinearSystem canonical_class(int n) {
    return LinearSystem{-3, std::vector<long long>(static_cast<size_t>(n), -1)};
}

long long pair(const LinearSystem& a, const LinearSystem& b) {
    long long acc = checked_mul(a.d, b.d);
    const size_t k = std::min(a.m.size(), b.m.size());
    for (size_t i = 0; i < k; ++i)
        acc = checked_sub(acc, checked_mul(a.m[i], b.m[i]));
    return acc;
}

long long self_intersection(const LinearSystem& L) { return pair(L, L); }

long long genus(const LinearSystem& L) {
    // (d-1)(d-2) and m(m-1) are products of consecutive integers, so the
    // halves are exact.
    long long acc = checked_mul(checked_sub(L.d, 1), checked_sub(L.d, 2)) / 2;
    for (long long mi : L.m)
        acc = checked_sub(acc, checked_mul(mi, checked_sub(mi, 1)) / 2);
    return acc;
}

long long k_pairing(const LinearSystem& L) {
    long long s = 0;
    for (long long mi : L.m) s = checked_add(s, mi);
    return checked_add(checked_mul(-3, L.d), s);
}

long long virtual_dim(const LinearSystem& L) {
    return checked_add(checked_sub(self_intersection(L), genus(L)), 1);
}

LinearSystem adjoint(const LinearSystem& L, long long t) {
    if (t < 0) throw std::invalid_argument("adjoint level must be non-negative");
    LinearSystem out = L;
    out.d = checked_sub(out.d, checked_mul(3, t));
    for (long long& mi : out.m) mi = checked_sub(mi, t);
    return out;
}

LinearSystem normalize(const LinearSystem& L) {
    LinearSystem out = L;
    std::sort(out.m.begin(), out.m.end(), std::greater<long long>());
    while (!out.m.empty() && out.m.back() == 0) out.m.pop_back();
    return out;
}

LinearSystem strip_zeros_sorted(const LinearSystem& L) {
    LinearSystem out;
    out.d = L.d;
    out.m.reserve(L.m.size());
    for (long long mi : L.m)
        if (mi != 0) out.m.push_back(mi);
    std::sort(out.m.begin(), out.m.end(), std::greater<long long>());
    return out;
}

namespace {

// Parses an optionally signed decimal integer starting at pos; advances pos.
long long parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0)
        throw std::invalid_argument("expected integer at position " +
                                    std::to_string(start) + " in literal");
    return std::stoll(s.substr(start, pos - start));
}

} // namespace

LinearSystem parse_literal(const std::string& text) {
    // Strip whitespace and optional |...| delimiters.
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '|') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty literal");

    size_t pos = 0;
    LinearSystem out;
    out.d = parse_int(s, pos);
    if (pos >= s.size() || s[pos] != ';')
        throw std::invalid_argument("literal must contain ';' after the degree");
    ++pos;
    if (pos == s.size()) return out; // "d;" — no assigned points

    while (true) {
        long long value = parse_int(s, pos);
        long long count = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            count = parse_int(s, pos);
            if (count < 1) throw std::invalid_argument("exponent must be >= 1");
            if (count > 1000000) throw std::invalid_argument("exponent too large");
        }
        for (long long i = 0; i < count; ++i) out.m.push_back(value);
        if (pos == s.size()) break;
        if (s[pos] != ',')
            throw std::invalid_argument("expected ',' at position " + std::to_string(pos));
        ++pos;
    }
    return out;
}

namespace {

std::string render(const LinearSystem& L) {
    std::ostringstream os;
    os << L.d << ';';
    size_t i = 0;
    bool first = true;
    while (i < L.m.size()) {
        size_t j = i;
        while (j < L.m.size() && L.m[j] == L.m[i]) ++j;
        if (!first) os << ',';
        os << L.m[i];
        if (j - i > 1) os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

} // namespace

std::string to_literal(const LinearSystem& L) { return render(normalize(L)); }

std::string to_literal_raw(const LinearSystem& L) { return render(L); }

} // namespace planesys
