#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fano/numeric.hpp"

namespace fano {

// dim S_d(E_r) = binom(d+r, r), the number of degree-d monomials in r+1
// variables.  Defined for d >= -r (zero when -r <= d < 0), which is exactly the
// range the dimension formulas below need.
inline long long graded_dim(int r, long long d) {
    if (r < 0) throw std::domain_error("graded_dim: r must be >= 0");
    if (d < -static_cast<long long>(r)) throw std::domain_error("graded_dim: d below -r");
    if (d < 0) return 0;
    BigInt res = 1;
    for (long long i = 1; i <= r; ++i) res = res * (d + i) / i;
    if (res > (1ll << 62)) throw std::domain_error("graded_dim: result exceeds 64-bit range");
    return static_cast<long long>(res);
}

// Exponent vector of a monomial; total degree is tracked implicitly.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int x : e_)
            if (x < 0) throw std::domain_error("Monomial: negative exponent");
    }

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i, int power = 1) {
        std::vector<int> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
        std::vector<int> e(a.e_);
        for (int i = 0; i < b.nvars(); ++i) e[i] += b.e_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& m) const {
        if (nvars() != m.nvars()) return false;
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    // Requires divides(m).
    Monomial quotient_into(const Monomial& m) const {
        std::vector<int> e(m.e_);
        for (int i = 0; i < nvars(); ++i) e[i] -= e_[i];
        return Monomial(std::move(e));
    }

    // Basis order: by total degree, then graded-lex with t0 > t1 > ... (so t0^d
    // comes first within a degree).  Used as the canonical map ordering.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e_ > b.e_;  // lexicographically larger exponent vector = earlier
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<int> e_;
};

namespace detail {
inline void gen_basis(int nvars, int degree, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (static_cast<int>(cur.size()) == nvars - 1) {
        cur.push_back(degree);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = degree; x >= 0; --x) {
        cur.push_back(x);
        gen_basis(nvars, degree - x, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All degree-d monomials in `nvars` variables, in basis order.
inline std::vector<Monomial> monomial_basis(int nvars, int degree) {
    if (nvars < 1) throw std::domain_error("monomial_basis: nvars must be >= 1");
    if (degree < 0) throw std::domain_error("monomial_basis: negative degree");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(graded_dim(nvars - 1, degree)));
    std::vector<int> cur;
    detail::gen_basis(nvars, degree, cur, out);
    return out;
}

// Position of m in monomial_basis(m.nvars(), m.degree()); combinatorial rank,
// no table needed.
inline long long monomial_index(const Monomial& m) {
    long long idx = 0;
    int d = m.degree();
    int k = m.nvars();
    for (int i = 0; i + 1 < k; ++i) {
        // monomials whose exponent at position i is larger come first
        for (int j = m[i] + 1; j <= d; ++j) idx += graded_dim(k - i - 2, d - j);
        d -= m[i];
    }
    return idx;
}

}  // namespace fano
