#pragma once

#include <sstream>

#include "fano/bounds.hpp"
#include "fano/errors.hpp"
#include "fano/linear_system.hpp"
#include "fano/rng.hpp"

namespace fano {

// Coefficients over Q are drawn from this integer box.
inline constexpr long long kCoefficientBoxRadius = 7;
inline constexpr int kDefaultMaxAttempts = 32;

// Ask for m forms of degree b in r+1 variables whose multiplication map against
// S_c is surjective onto S_{b+c}.
struct GeneratorRequest {
    int r = 1;
    int b = 1;
    int m = 1;
    int c = 1;
    FieldSpec field = FieldSpec::prime(kDefaultSearchPrime);
    std::uint64_t seed = 0;
    int max_attempts = kDefaultMaxAttempts;

    void validate() const {
        if (r < 1) throw std::domain_error("generator request: r must be >= 1");
        if (b < 1) throw std::domain_error("generator request: b must be >= 1");
        if (m < 1) throw std::domain_error("generator request: m must be >= 1");
        if (c < 1) throw std::domain_error("generator request: c must be >= 1");
        if (max_attempts < 1) throw std::domain_error("generator request: max_attempts must be >= 1");
    }
};

// Density range of the classical theorem on generic forms: for c = 1, m forms
// of degree b generically 1-generate from m >= ceil(dim S_{b+1} / (r+1)).
inline bool hochster_laksov_range(int r, int b, int m) {
    return m >= ceil_div(graded_dim(r, b + 1), r + 1);
}

// Range of the generalization used for c >= 2 (b a multiple of c):
// m >= dim S_c + ceil(dim S_{b+c} / dim S_c).
inline bool nenashev_range(int r, int b, int c, int m) {
    if (b % c != 0) return false;
    long long p = graded_dim(r, c);
    return m >= p + ceil_div(graded_dim(r, b + c), p);
}

inline bool guaranteed_range(const GeneratorRequest& req) {
    if (req.c == 1) return hochster_laksov_range(req.r, req.b, req.m);
    return nenashev_range(req.r, req.b, req.c, req.m);
}

template <typename T>
struct GeneratorResult {
    LinearSystem<T> system;
    int attempts_used = 0;
};

namespace detail {

template <typename T, typename Draw>
GeneratorResult<T> find_generating_impl(const GeneratorRequest& req, Draw&& draw) {
    req.validate();
    const int nvars = req.r + 1;
    const auto basis = monomial_basis(nvars, req.b);
    const long long dim_c = graded_dim(req.r, req.c);
    const long long dim_out = graded_dim(req.r, req.b + req.c);

    auto fail = [&](int attempts, const std::string& reason) -> search_failure {
        bool in_range = guaranteed_range(req);
        std::ostringstream os;
        os << "generating-system search failed after " << attempts << " attempt(s): " << reason
           << " (request " << (in_range ? "inside" : "outside") << " the guaranteed density range)";
        return search_failure(os.str(), attempts, in_range);
    };

    if (static_cast<long long>(req.m) * dim_c < dim_out)
        throw fail(0, "m*dim S_c < dim S_{b+c}, surjectivity is impossible");

    for (int attempt = 0; attempt < req.max_attempts; ++attempt) {
        SeededRng rng(req.seed, static_cast<std::uint64_t>(attempt));
        LinearSystem<T> sys(nvars, req.b);
        for (int i = 0; i < req.m; ++i) {
            GradedForm<T> f(nvars, req.b);
            for (const auto& mono : basis) f.add_term(mono, draw(rng));
            sys.add(std::move(f));
        }
        if (is_c_generating(sys, req.c)) return GeneratorResult<T>{std::move(sys), attempt + 1};
    }
    throw fail(req.max_attempts, "no sampled system verified");
}

}  // namespace detail

inline GeneratorResult<Rational> find_generating_system_q(const GeneratorRequest& req) {
    return detail::find_generating_impl<Rational>(req, [](SeededRng& rng) {
        return Rational(rng.in_box(-kCoefficientBoxRadius, kCoefficientBoxRadius));
    });
}

inline GeneratorResult<Fp> find_generating_system_fp(const GeneratorRequest& req) {
    if (req.field.rational) throw std::domain_error("find_generating_system_fp: request names Q");
    FpCtx F(req.field.p);
    return detail::find_generating_impl<Fp>(req, [F](SeededRng& rng) {
        return Fp(rng.below(F.modulus()), F.modulus());
    });
}

}  // namespace fano
