#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

// All counting and matrix arithmetic is exact: hook-length products and
// class sizes overflow 64 bits well before the n we care about.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// a!! = a(a-2)(a-4)... down to 2 or 1.
inline Int double_factorial(int a) {
    Int f = 1;
    for (int i = a; i >= 2; i -= 2) f *= i;
    return f;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Splits D = s^2 * d with d squarefree (sign of D carried by d).
/// Trial division; |D| stays tiny here (products of a few odd cycle lengths).
inline void squarefree_decompose(std::int64_t D, std::int64_t& s, std::int64_t& d) {
    if (D == 0) { s = 0; d = 1; return; }
    std::int64_t a = D < 0 ? -D : D;
    s = 1;
    d = 1;
    for (std::int64_t p = 2; p * p <= a; ++p) {
        while (a % (p * p) == 0) { a /= p * p; s *= p; }
        if (a % p == 0) { a /= p; d *= p; }
    }
    d *= a;
    if (D < 0) d = -d;
}

inline std::string rat_string(const Rat& r) {
    return r.str();  // "p/q" or "p"
}

inline Rat rat_from_string(const std::string& s) {
    return Rat(s);
}

/// Thrown when an input is outside a routine's supported range (memory or
/// runtime gate), as opposed to a malformed argument.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ekr
