#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fano/numeric.hpp"

namespace fano {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t res = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1ull) res = mulmod_u64(res, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1ull;
    }
    return res;
}

}  // namespace detail

// Deterministic Miller-Rabin; the witness set covers all 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1ull) == 0) {
        d >>= 1ull;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Largest modulus we accept; keeps a+b and a*b comfortably inside 64/128 bits.
inline constexpr std::uint64_t kMaxPrimeModulus = 1ull << 62;

// Element of F_p for a machine-word prime p.  A default-constructed element is a
// "detached" zero with no modulus; it absorbs into any attached operand, which
// lets generic code use T() as the additive identity without threading a field
// context everywhere.
class Fp {
public:
    Fp() = default;

    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        v_ = value % p;
    }

    static Fp from_int(long long value, std::uint64_t p) {
        check_modulus(p);
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool attached() const { return p_ != 0; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        if (!a.attached()) return b;
        if (!b.attached()) return a;
        std::uint64_t p = common(a, b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }

    friend Fp operator-(const Fp& a) {
        if (!a.attached() || a.v_ == 0) return a;
        return raw(a.p_ - a.v_, a.p_);
    }

    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

    friend Fp operator*(const Fp& a, const Fp& b) {
        if (!a.attached() || !b.attached()) return Fp();
        std::uint64_t p = common(a, b);
        return raw(detail::mulmod_u64(a.v_, b.v_, p), p);
    }

    friend Fp operator/(const Fp& a, const Fp& b) {
        if (!b.attached() || b.v_ == 0) throw std::domain_error("Fp: division by zero");
        if (!a.attached()) return Fp();
        std::uint64_t p = common(a, b);
        return raw(detail::mulmod_u64(a.v_, detail::powmod_u64(b.v_, p - 2, p), p), p);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const { return raw(1 % p_, p_) / *this; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (!a.attached() || !b.attached()) return a.v_ == 0 && b.v_ == 0;
        common(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static void check_modulus(std::uint64_t p) {
        if (p < 2 || p >= kMaxPrimeModulus) throw std::domain_error("Fp: modulus out of range");
    }
    static std::uint64_t common(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli in one expression");
        return a.p_;
    }
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool sc_is_zero(const Fp& x) { return x.is_zero(); }
inline Fp sc_scale(const Fp& x, long long k) {
    if (!x.attached()) return x;
    return x * Fp::from_int(k, x.modulus());
}

// Field context: validates primality once, then makes elements.
class FpCtx {
public:
    explicit FpCtx(std::uint64_t p) : p_(p) {
        if (p >= kMaxPrimeModulus || !is_prime_u64(p))
            throw std::domain_error("FpCtx: modulus " + std::to_string(p) + " is not a supported prime");
    }

    std::uint64_t modulus() const { return p_; }
    Fp operator()(long long v) const { return Fp::from_int(v, p_); }

    Fp from_rational(const Rational& q) const {
        const BigInt pb(p_);
        BigInt num = numerator(q) % pb;
        BigInt den = denominator(q) % pb;
        if (den == 0) throw std::domain_error("FpCtx: denominator divisible by p");
        if (num < 0) num += pb;
        Fp n(static_cast<std::uint64_t>(num), p_);
        Fp d(static_cast<std::uint64_t>(den), p_);
        return n / d;
    }

private:
    std::uint64_t p_;
};

// User-facing field choice: the rationals or a prime field.
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    static FieldSpec Q() { return FieldSpec{true, 0}; }
    static FieldSpec prime(std::uint64_t p) {
        FpCtx check(p);  // validates
        return FieldSpec{false, check.modulus()};
    }

    // Accepts "Q" (or "q") or a decimal prime.
    static FieldSpec parse(const std::string& text) {
        if (text == "Q" || text == "q") return Q();
        std::uint64_t value = 0;
        if (text.empty()) throw std::domain_error("field spec: empty");
        for (char c : text) {
            if (c < '0' || c > '9') throw std::domain_error("field spec: expected 'Q' or a decimal prime, got '" + text + "'");
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value >= kMaxPrimeModulus) throw std::domain_error("field spec: prime too large");
        }
        return prime(value);
    }

    std::string str() const { return rational ? "Q" : std::to_string(p); }
};

// Default search field for randomized constructions: the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultSearchPrime = 2147483647ull;

}  // namespace fano
