#pragma once

#include <optional>
#include <vector>

#include "fano/errors.hpp"
#include "fano/monomial.hpp"
#include "fano/numeric.hpp"

namespace fano {

namespace detail {
inline void check_rde(int r, int d, int e) {
    if (r < 0) throw std::domain_error("r must be >= 0");
    if (d < 1) throw std::domain_error("d must be >= 1");
    if (e < 1) throw std::domain_error("e must be >= 1");
}
}  // namespace detail

// Dimension of the linear span of the e-uple embedding of P^r.
inline long long veronese_span_dim(int r, int e) {
    if (r < 0 || e < 1) throw std::domain_error("veronese_span_dim: need r >= 0, e >= 1");
    return graded_dim(r, e) - 1;
}

// Dimension of the family of e-uple Veronese r-folds inside P^n.
inline long long veronese_family_dim(long long n, int r, int e) {
    if (r < 0 || e < 1) throw std::domain_error("veronese_family_dim: need r >= 0, e >= 1");
    long long rp1 = r + 1;
    return (n + 1) * graded_dim(r, e) - rp1 * rp1;
}

// Expected dimension of the locus of e-uple Veronese r-folds lying on a
// degree-d hypersurface in P^n.  For e = 1 this is (n - r)(r + 1) - dim S_d.
inline long long fano_expected_dim(long long n, int r, int d, int e) {
    detail::check_rde(r, d, e);
    return veronese_family_dim(n, r, e) - graded_dim(r, static_cast<long long>(d) * e);
}

// Least n at which the expected dimension is nonnegative (and the span fits).
inline long long expected_dim_threshold(int r, int d, int e) {
    detail::check_rde(r, d, e);
    long long p = graded_dim(r, e);
    long long rp1 = r + 1;
    long long need = -1 + ceil_div(rp1 * rp1 + graded_dim(r, static_cast<long long>(d) * e), p);
    return std::max(p - 1, need);
}

// e = 1 specialization in its classical shape r + ceil(dim S_d / (r+1)).
inline long long waldron_threshold(int r, int d) {
    detail::check_rde(r, d, 1);
    return r + ceil_div(graded_dim(r, d), r + 1);
}

// Least number of hypersurface coefficients beyond the span conditions at which
// the expected dimension count allows excess; ties to the threshold above by
// M_e = N_e - dim S_e + 1 whenever positive.
inline long long excess_threshold(int r, int d, int e) {
    detail::check_rde(r, d, e);
    long long p = graded_dim(r, e);
    long long rp1 = r + 1;
    return std::max<long long>(0, ceil_div(rp1 * rp1 + graded_dim(r, static_cast<long long>(d) * e) - p * p, p));
}

// Sufficient ambient dimension for the e-generating-system construction (e >= 2).
inline long long nenashev_threshold(int r, int d, int e) {
    detail::check_rde(r, d, e);
    long long p = graded_dim(r, e);
    return -1 + 2 * p + ceil_div(graded_dim(r, static_cast<long long>(d) * e), p);
}

// Exact nonemptiness threshold for the universal Fano locus, split by degree:
// hyperplanes and quadrics are special, higher degrees use the construction
// thresholds.
inline long long nonempty_threshold(int r, int d, int e) {
    detail::check_rde(r, d, e);
    if (d == 1) return 1 + veronese_span_dim(r, e);
    if (d == 2) return e == 1 ? 1 + 2ll * r : veronese_span_dim(r, e);
    return e == 1 ? waldron_threshold(r, d) : nenashev_threshold(r, d, e);
}

// Dimension of the space of degree-d forms on P^n vanishing on a fixed e-uple
// Veronese r-fold (the fiber of the incidence projection to the family side).
inline long long rho_fiber_dim(long long n, int r, int d, int e) {
    detail::check_rde(r, d, e);
    if (n < veronese_span_dim(r, e))
        throw std::domain_error("rho_fiber_dim: ambient space cannot contain the Veronese span");
    return graded_dim(static_cast<int>(n), d) - graded_dim(r, static_cast<long long>(d) * e);
}

// Coefficients b_{r,l} of the expansion  dim S_{t-1}(E_r) = sum_l b_{r,l}/l! * t^l,
// solved exactly over the rationals and re-verified by evaluation.
inline std::vector<Rational> flag_coeffs(int r) {
    if (r < 1) throw std::domain_error("flag_coeffs: r must be >= 1");
    // numerator polynomial prod_{i=0}^{r-1} (t + i), coefficients of t^0..t^r
    std::vector<BigInt> num(static_cast<std::size_t>(r) + 1, 0);
    num[0] = 1;
    for (int i = 0; i < r; ++i) {
        for (int k = i + 1; k >= 1; --k) num[k] = num[k - 1] + num[k] * i;
        num[0] *= i;
    }
    BigInt r_fact = 1;
    for (int i = 2; i <= r; ++i) r_fact *= i;
    if (num[0] != 0) throw internal_error("flag_coeffs: nonzero constant term");

    std::vector<Rational> b;
    BigInt l_fact = 1;
    for (int l = 1; l <= r; ++l) {
        l_fact *= l;
        b.push_back(make_rational(num[static_cast<std::size_t>(l)] * l_fact, r_fact));
    }

    // verification: the expansion must reproduce dim S_{t-1} at t = 1..r+1
    for (long long t = 1; t <= r + 1; ++t) {
        Rational sum = 0;
        BigInt lf = 1, tp = 1;
        for (int l = 1; l <= r; ++l) {
            lf *= l;
            tp *= t;
            sum += b[static_cast<std::size_t>(l - 1)] * make_rational(tp, lf);
        }
        if (sum != Rational(graded_dim(r, t - 1)))
            throw internal_error("flag_coeffs: expansion fails evaluation check");
    }
    return b;
}

inline long long flag_threshold(int r, int d) {
    detail::check_rde(r, d, 1);
    return r + graded_dim(r, d - 1);
}

// Excess dimension e_r of the fiber of the flag tower over a linear space on a
// degree-d hypersurface, computed two independent ways: the closed form
// n - r - dim S_{d-1}, and the tangent-pairing sum over the flag coefficients.
// Disagreement is a broken invariant, never a user error.
inline long long flag_excess_dim(long long n, int r, int d) {
    detail::check_rde(r, d, 1);
    long long closed = n - r - graded_dim(r, d - 1);

    std::vector<Rational> b = flag_coeffs(r);
    Rational sum(-(r + 1));
    BigInt lf = 1, dp = 1;
    for (int l = 1; l <= r; ++l) {
        lf *= l;
        dp *= d;
        sum += b[static_cast<std::size_t>(l - 1)] * make_rational(BigInt(n + 1) - dp, lf);
    }
    if (sum != Rational(closed))
        throw internal_error("flag_excess_dim: pairing route disagrees with closed form");
    return closed;
}

// Fiber geometry of the flag tower at (n, r, d): emptiness below the threshold,
// connectedness strictly above it, disconnected boundary at equality for d > 1.
struct FlagFiberReport {
    long long excess = 0;
    bool empty = false;
    bool connected = false;
    bool boundary_disconnected = false;
};

inline FlagFiberReport flag_fiber_report(long long n, int r, int d) {
    FlagFiberReport rep;
    rep.excess = flag_excess_dim(n, r, d);
    long long threshold = flag_threshold(r, d);
    rep.empty = n < threshold;
    rep.connected = n >= 1 + threshold;
    rep.boundary_disconnected = (n == threshold && d > 1);
    return rep;
}

// All numeric thresholds for one (r, d, e), plus the n-dependent dimensions
// when an ambient dimension is supplied.
struct BoundsReport {
    int r = 1, e = 1, d = 1;
    std::optional<long long> n;
    long long p_r_e = 0;
    long long n_e_r = 0;
    std::optional<long long> f_e_nr;
    std::optional<long long> f_e_nrd;
    long long N_e = 0;
    long long M_e = 0;
    std::optional<long long> N_tilde;       // e >= 2 only
    std::optional<long long> N_1_waldron;   // e == 1 only
    long long threshold_nonempty = 0;
    std::optional<long long> n1_prime_min;  // e == 1, d >= 2: connectedness bracket
    std::optional<long long> n1_prime_max;
    std::optional<long long> rho_fiber;     // requires n >= n_e_r
    long long flag_thresh = 0;
    std::optional<long long> flag_fiber_dim;
    std::optional<FlagFiberReport> flag;
};

inline BoundsReport compute_bounds(int r, int d, int e, std::optional<long long> n) {
    detail::check_rde(r, d, e);
    if (r < 1) throw std::domain_error("compute_bounds: r must be >= 1");
    BoundsReport rep;
    rep.r = r;
    rep.e = e;
    rep.d = d;
    rep.n = n;
    rep.p_r_e = graded_dim(r, e);
    rep.n_e_r = veronese_span_dim(r, e);
    rep.N_e = expected_dim_threshold(r, d, e);
    rep.M_e = excess_threshold(r, d, e);
    if (e >= 2) rep.N_tilde = nenashev_threshold(r, d, e);
    if (e == 1) {
        rep.N_1_waldron = waldron_threshold(r, d);
        if (d == 2) {
            rep.n1_prime_min = 2ll * r + 2;
            rep.n1_prime_max = 2ll * r + 2;
        } else if (d >= 3) {
            long long N1 = waldron_threshold(r, d);
            if (fano_expected_dim(N1, r, d, 1) == 0) {
                // finite Fano scheme at the threshold: its length is divisible
                // by d^{r+1} > 1, so connectedness starts exactly one step later
                rep.n1_prime_min = 1 + N1;
                rep.n1_prime_max = 1 + N1;
            } else {
                rep.n1_prime_min = N1;
                rep.n1_prime_max = 1 + N1;
            }
        }
    }
    rep.threshold_nonempty = nonempty_threshold(r, d, e);
    rep.flag_thresh = flag_threshold(r, d);
    if (n) {
        rep.f_e_nr = veronese_family_dim(*n, r, e);
        rep.f_e_nrd = fano_expected_dim(*n, r, d, e);
        if (*n >= rep.n_e_r) rep.rho_fiber = rho_fiber_dim(*n, r, d, e);
        rep.flag_fiber_dim = flag_excess_dim(*n, r, d);
        rep.flag = flag_fiber_report(*n, r, d);
    }
    return rep;
}

}  // namespace fano
