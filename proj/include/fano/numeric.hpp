#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "fano/errors.hpp"

namespace fano {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar: always lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Boost's (num, den) constructor rejects negative denominators, so normalize here.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline bool sc_is_zero(const Rational& x) { return x.is_zero(); }
inline Rational sc_scale(const Rational& x, long long k) { return x * k; }

// floor(a / b) and ceil(a / b) for b > 0, correct for negative a.
inline long long floor_div(long long a, long long b) {
    if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
    return floor_div(a + b - 1, b);
}

// binomial(n, k) in 64-bit arithmetic; exact at every intermediate step.
inline long long binomial_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long res = 1;
    for (long long i = 1; i <= k; ++i) res = res * (n - k + i) / i;
    return res;
}

inline BigInt big_pow(BigInt base, unsigned exp) {
    BigInt res = 1;
    while (exp) {
        if (exp & 1u) res *= base;
        base *= base;
        exp >>= 1u;
    }
    return res;
}

// Gaussian binomial [a choose b]_q: the number of b-dimensional linear subspaces
// of an a-dimensional space over F_q.  Exact division of the full products.
inline BigInt gaussian_binomial(int a, int b, const BigInt& q) {
    if (b < 0 || b > a) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < b; ++i) {
        num *= big_pow(q, static_cast<unsigned>(a - i)) - 1;
        den *= big_pow(q, static_cast<unsigned>(i + 1)) - 1;
    }
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw internal_error("gaussian_binomial: division not exact");
    return quot;
}

}  // namespace fano
