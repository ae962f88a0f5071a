#pragma once

#include <optional>

#include "fano/linear_system.hpp"
#include "fano/veronese.hpp"

namespace fano {

// Partials of an ambient form with respect to the span coordinates, restricted
// to the Veronese.  Requires the form to vanish on the linear span (every term
// must carry a y); the members have degree (d-1)e on P^r.
template <typename T>
LinearSystem<T> partials_pullback(const AmbientForm<T>& G) {
    const VeroneseFrame& fr = G.frame;
    const int k = fr.x_count();
    for (const auto& [m, c] : G.poly.terms()) {
        bool has_y = false;
        for (int v = k; v <= fr.n; ++v)
            if (m[v] > 0) {
                has_y = true;
                break;
            }
        if (!has_y)
            throw std::domain_error("partials_pullback: form does not vanish on the span");
    }
    if (G.degree() < 1) throw std::domain_error("partials_pullback: zero form");
    LinearSystem<T> sys(fr.r + 1, (G.degree() - 1) * fr.e);
    for (int i = 0; i < fr.y_count(); ++i)
        sys.add(veronese_pullback(fr, derivative(G.poly, k + i)));
    return sys;
}

// The same partials restricted to the span {y = 0}, written in the span's own
// x-coordinates; degree d - 1 forms in dim S_e variables.
template <typename T>
LinearSystem<T> span_partials(const AmbientForm<T>& G) {
    const VeroneseFrame& fr = G.frame;
    const int k = fr.x_count();
    if (G.degree() < 1) throw std::domain_error("span_partials: zero form");
    LinearSystem<T> sys(k, G.degree() - 1);
    for (int i = 0; i < fr.y_count(); ++i) {
        GradedForm<T> dG = derivative(G.poly, k + i);
        GradedForm<T> restricted(k, dG.degree());
        for (const auto& [m, c] : dG.terms()) {
            bool has_y = false;
            for (int v = k; v <= fr.n; ++v)
                if (m[v] > 0) {
                    has_y = true;
                    break;
                }
            if (has_y) continue;
            std::vector<int> exps(static_cast<std::size_t>(k), 0);
            for (int v = 0; v < k; ++v) exps[static_cast<std::size_t>(v)] = m[v];
            restricted.add_term(Monomial(std::move(exps)), c);
        }
        sys.add(std::move(restricted));
    }
    return sys;
}

struct RankTraceEntry {
    int c = 0;
    long long rank = 0;
    long long target = 0;
};

// Smoothness evidence for the Fano/Veronese point cut out by G: whether the
// restricted partials e-generate (the point is unobstructed of the expected
// tangent dimension), and the least degrees at which they generate along the
// Veronese image and along its span.
struct Certificate {
    int r = 0, e = 0, n = 0, d = 0;
    bool e_generating = false;
    std::optional<int> image_smooth_c;  // least c <= c_max with surjective mult map
    std::optional<int> span_smooth_c;
    int c_max = 0;
    int span_c_max = 0;
    std::vector<RankTraceEntry> ranks;       // image scan trace
    std::vector<RankTraceEntry> span_ranks;  // span scan trace
};

namespace detail {
template <typename T>
std::optional<int> generation_scan(const LinearSystem<T>& sys, int c_max,
                                   std::vector<RankTraceEntry>& trace) {
    for (int c = 1; c <= c_max; ++c) {
        Matrix<T> M = multiplication_map(sys, c);
        long long target = graded_dim(sys.nvars - 1, sys.degree + c);
        long long got = rank(M);
        trace.push_back({c, got, target});
        if (got == target) return c;
    }
    return std::nullopt;
}
}  // namespace detail

// Macaulay-style stopping degree for an ideal generated in degree b over
// nvars variables: if generation has not happened by c = nvars*(b-1)+1 it
// never will for a base-point-free system, so the scan is conclusive.
inline int generation_scan_bound(int nvars, int b) {
    if (b < 1) throw std::domain_error("generation_scan_bound: degree must be >= 1");
    return nvars * (b - 1) + 1;
}

template <typename T>
Certificate certify_smooth_point(const AmbientForm<T>& G) {
    if (G.degree() < 2) throw std::domain_error("certify_smooth_point: degree must be >= 2");
    const VeroneseFrame& fr = G.frame;
    Certificate cert;
    cert.r = fr.r;
    cert.e = fr.e;
    cert.n = fr.n;
    cert.d = G.degree();

    LinearSystem<T> image_sys = partials_pullback(G);
    cert.e_generating = is_c_generating(image_sys, fr.e);
    cert.c_max = generation_scan_bound(fr.r + 1, image_sys.degree);
    cert.image_smooth_c = detail::generation_scan(image_sys, cert.c_max, cert.ranks);

    LinearSystem<T> span_sys = span_partials(G);
    if (span_sys.degree >= 1) {
        cert.span_c_max = generation_scan_bound(fr.x_count(), span_sys.degree);
        cert.span_smooth_c = detail::generation_scan(span_sys, cert.span_c_max, cert.span_ranks);
    } else {
        // degree-1 hypersurface partials are constants; surjectivity is rank >= 1
        cert.span_c_max = 0;
    }
    return cert;
}

// Dimension of the tangent space to the Fano scheme of r-planes at the plane
// {y = 0} inside {G = 0}: corank of (A_1..A_m) -> sum A_i * dG/dy_i as a map
// into degree d, i.e. m(r+1) minus the rank of the degree-1 multiplication map.
template <typename T>
long long tangent_dim_linear(const AmbientForm<T>& G) {
    if (G.frame.e != 1)
        throw std::domain_error("tangent_dim_linear: only defined for linear spaces (e = 1)");
    LinearSystem<T> sys = partials_pullback(G);
    Matrix<T> M = multiplication_map(sys, 1);
    return static_cast<long long>(G.frame.y_count()) * (G.frame.r + 1) - rank(M);
}

}  // namespace fano
