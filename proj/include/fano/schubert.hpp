#pragma once

#include <algorithm>
#include <map>

#include "fano/bounds.hpp"
#include "fano/errors.hpp"
#include "fano/monomial.hpp"

namespace fano {

// Polynomial in the Chern roots u_0..u_r with big-integer coefficients and a
// per-variable exponent cap: monomials whose exponent somewhere exceeds the
// cap are dropped on sight.  Capping at n realizes the Chow-ring truncation
// operationally, because integration only ever reads exponents <= n.
class SymPoly {
public:
    using Exps = std::vector<int>;

    SymPoly(int nroots, int cap) : nroots_(nroots), cap_(cap) {
        if (nroots < 1) throw std::domain_error("SymPoly: need at least one root");
        if (cap < 0) throw std::domain_error("SymPoly: negative cap");
    }

    static SymPoly one(int nroots, int cap) {
        SymPoly p(nroots, cap);
        p.terms_[Exps(static_cast<std::size_t>(nroots), 0)] = 1;
        return p;
    }

    int nroots() const { return nroots_; }
    int cap() const { return cap_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Exps, BigInt>& terms() const { return terms_; }

    void add(const Exps& e, const BigInt& c) {
        if (static_cast<int>(e.size()) != nroots_)
            throw std::invalid_argument("SymPoly: exponent arity mismatch");
        if (c == 0) return;
        for (int x : e) {
            if (x < 0) throw std::invalid_argument("SymPoly: negative exponent");
            if (x > cap_) return;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // multiply in place by the linear form sum_i coeffs[i] * u_i
    void mul_linear(const std::vector<long long>& coeffs) {
        if (static_cast<int>(coeffs.size()) != nroots_)
            throw std::invalid_argument("SymPoly: linear factor arity mismatch");
        std::map<Exps, BigInt> next;
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < nroots_; ++i) {
                if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
                if (e[static_cast<std::size_t>(i)] + 1 > cap_) continue;
                Exps f = e;
                ++f[static_cast<std::size_t>(i)];
                BigInt add = c * coeffs[static_cast<std::size_t>(i)];
                auto it = next.find(f);
                if (it == next.end()) {
                    next.emplace(std::move(f), std::move(add));
                } else {
                    it->second += add;
                    if (it->second == 0) next.erase(it);
                }
            }
        }
        terms_ = std::move(next);
    }

    // multiply in place by the monomial u_0 u_1 ... u_r
    void mul_all_roots() {
        std::map<Exps, BigInt> next;
        for (const auto& [e, c] : terms_) {
            Exps f = e;
            bool keep = true;
            for (int& x : f)
                if (++x > cap_) {
                    keep = false;
                    break;
                }
            if (keep) next.emplace(std::move(f), c);
        }
        terms_ = std::move(next);
    }

    void scale(const BigInt& s) {
        if (s == 0) {
            terms_.clear();
            return;
        }
        for (auto& [e, c] : terms_) c *= s;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.nroots_ == b.nroots_ && a.terms_ == b.terms_;
    }

private:
    int nroots_;
    int cap_;
    std::map<Exps, BigInt> terms_;
};

namespace detail {
inline int perm_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}
}  // namespace detail

// Top Chern class of the d-th symmetric power of the dual tautological bundle:
// the product of the dim S_d linear forms d_0 u_0 + ... + d_r u_r over all
// exponent vectors of total degree d, expanded incrementally in their
// deterministic basis order with cap pruning after every factor.
inline SymPoly chern_top_poly(int r, int d, int cap) {
    if (r < 0 || d < 1) throw std::domain_error("chern_top_poly: need r >= 0 and d >= 1");
    SymPoly p = SymPoly::one(r + 1, cap);
    for (const Monomial& m : monomial_basis(r + 1, d)) {
        std::vector<long long> coeffs(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) coeffs[static_cast<std::size_t>(i)] = m[i];
        p.mul_linear(coeffs);
    }
    return p;
}

inline SymPoly chern_top_poly(int r, int d) {
    return chern_top_poly(r, d, static_cast<int>(graded_dim(r, d)));
}

// Same product with the r+1 extreme factors d*u_i left out.
inline SymPoly chern_quotient_poly(int r, int d, int cap) {
    if (r < 0 || d < 1) throw std::domain_error("chern_quotient_poly: need r >= 0 and d >= 1");
    SymPoly p = SymPoly::one(r + 1, cap);
    for (const Monomial& m : monomial_basis(r + 1, d)) {
        int mx = 0;
        for (int i = 0; i <= r; ++i) mx = std::max(mx, m[i]);
        if (mx == d) continue;
        std::vector<long long> coeffs(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) coeffs[static_cast<std::size_t>(i)] = m[i];
        p.mul_linear(coeffs);
    }
    return p;
}

inline SymPoly chern_quotient_poly(int r, int d) {
    return chern_quotient_poly(r, d, static_cast<int>(graded_dim(r, d)));
}

// Integral over G(r+1, n+1): the coefficient of u_0^n u_1^{n-1} ... u_r^{n-r}
// in P times the Vandermonde product(u_i - u_j), evaluated by expanding the
// Vandermonde into signed permutations of the exponent offset (r, r-1, .., 0).
inline BigInt integrate(const SymPoly& P, int r, long long n) {
    if (P.nroots() != r + 1) throw std::domain_error("integrate: root count is not r + 1");
    if (n < r) throw std::domain_error("integrate: need n >= r");
    if (P.cap() < n) throw std::domain_error("integrate: cap below n loses coefficients");
    const long long dim = (static_cast<long long>(r) + 1) * (n - r);
    for (const auto& [e, c] : P.terms()) {
        long long total = 0;
        for (int x : e) total += x;
        if (total != dim)
            throw std::domain_error("integrate: polynomial degree differs from (r+1)(n-r)");
    }

    std::vector<int> sigma(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) sigma[static_cast<std::size_t>(i)] = i;
    BigInt total = 0;
    do {
        std::vector<int> e(static_cast<std::size_t>(r) + 1);
        bool ok = true;
        for (int i = 0; i <= r; ++i) {
            long long v = (n - i) - (r - sigma[static_cast<std::size_t>(i)]);
            if (v < 0 || v > P.cap()) {
                ok = false;
                break;
            }
            e[static_cast<std::size_t>(i)] = static_cast<int>(v);
        }
        if (ok) total += detail::perm_sign(sigma) * P.coeff(e);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

struct SpaceCount {
    BigInt count;
    BigInt quotient;  // count / d^{r+1}
};

// Number of r-planes on a general degree-d hypersurface in P^n when the
// expected Fano dimension is zero; computed twice (full product and the
// factored form d^{r+1} * u_0..u_r * quotient product) and checked for the
// divisibility the factorization forces.
inline SpaceCount count_linear_spaces(int r, long long n, int d) {
    if (fano_expected_dim(n, r, d, 1) != 0)
        throw std::domain_error("count_linear_spaces: expected dimension f_1(n,r,d) is not zero");
    const int cap = static_cast<int>(n);
    BigInt primary = integrate(chern_top_poly(r, d, cap), r, n);

    SymPoly factored = chern_quotient_poly(r, d, cap - 1 >= 0 ? cap - 1 : 0);
    // re-cap at n before appending the u_0..u_r factor
    SymPoly widened(r + 1, cap);
    for (const auto& [e, c] : factored.terms()) widened.add(e, c);
    widened.mul_all_roots();
    widened.scale(big_pow(d, r + 1));
    BigInt dual = integrate(widened, r, n);
    if (primary != dual)
        throw internal_error("count_linear_spaces: factorized integration path disagrees");

    const BigInt dpow = big_pow(d, r + 1);
    if (primary % dpow != 0)
        throw internal_error("count_linear_spaces: count not divisible by d^{r+1}");
    return SpaceCount{primary, primary / dpow};
}

// Plucker degree of the (f_1-dimensional) Fano scheme of r-planes on a general
// degree-d hypersurface: integral of the top Chern class times sigma_1^{f_1}.
inline BigInt fano_degree(int r, long long n, int d) {
    const long long f1 = fano_expected_dim(n, r, d, 1);
    if (f1 < 0) throw std::domain_error("fano_degree: expected dimension is negative");
    const int cap = static_cast<int>(n);
    SymPoly p = chern_top_poly(r, d, cap);
    std::vector<long long> ones(static_cast<std::size_t>(r) + 1, 1);
    for (long long i = 0; i < f1; ++i) p.mul_linear(ones);
    return integrate(p, r, n);
}

}  // namespace fano
