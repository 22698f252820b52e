#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace hypertoric {

// Exact arbitrary-precision integer. All public linear algebra is exact;
// no floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;

using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline int sign(const Int& a) { return a.sign(); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

// Content (gcd of entries); 0 for the zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

// Divide by the content and make the first nonzero entry positive.
// Returns false when v is zero.
inline bool normalize_primitive(IntVec& v) {
    Int g = content(v);
    if (g == 0) return false;
    int lead = 0;
    for (const Int& x : v)
        if (x != 0) { lead = x.sign(); break; }
    if (lead < 0) g = -g;
    if (g != 1)
        for (Int& x : v) x /= g;
    return true;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t p = n + 1;
    while (!is_prime_u64(p)) ++p;
    return p;
}

} // namespace hypertoric
