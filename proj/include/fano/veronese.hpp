#pragma once

#include "fano/bounds.hpp"
#include "fano/form.hpp"

namespace fano {

// Coordinate frame for the standard e-uple Veronese r-fold in P^n: the first
// dim S_e ambient coordinates x are indexed by the degree-e monomial basis
// (the embedding sends x_w to t^w), the remaining y coordinates cut out the
// linear span.
struct VeroneseFrame {
    int r = 1;
    int e = 1;
    int n = 1;

    VeroneseFrame() = default;
    VeroneseFrame(int r_, int e_, int n_) : r(r_), e(e_), n(n_) {
        if (r < 1 || e < 1) throw std::domain_error("VeroneseFrame: need r >= 1 and e >= 1");
        if (n < veronese_span_dim(r, e))
            throw std::domain_error("VeroneseFrame: ambient dimension below the span dimension");
    }

    int x_count() const { return static_cast<int>(graded_dim(r, e)); }
    int y_count() const { return n + 1 - x_count(); }
    std::vector<Monomial> x_exponents() const { return monomial_basis(r + 1, e); }
    VarScheme scheme() const { return VarScheme::ambient(x_count(), y_count()); }

    friend bool operator==(const VeroneseFrame& a, const VeroneseFrame& b) {
        return a.r == b.r && a.e == b.e && a.n == b.n;
    }
};

// Restriction along the Veronese embedding: substitute x_w -> t^w and y -> 0.
// A degree-k ambient form restricts to a degree k*e form on P^r.
template <typename T>
GradedForm<T> veronese_pullback(const VeroneseFrame& frame, const GradedForm<T>& f) {
    if (f.nvars() != frame.n + 1)
        throw std::invalid_argument("veronese_pullback: form not in the frame's ambient ring");
    const std::vector<Monomial> xs = frame.x_exponents();
    const int k = frame.x_count();
    GradedForm<T> out(frame.r + 1, f.degree() * frame.e);
    for (const auto& [m, c] : f.terms()) {
        bool has_y = false;
        for (int v = k; v <= frame.n; ++v)
            if (m[v] > 0) {
                has_y = true;
                break;
            }
        if (has_y) continue;
        std::vector<int> exps(static_cast<std::size_t>(frame.r) + 1, 0);
        for (int v = 0; v < k; ++v)
            for (int i = 0; i <= frame.r; ++i) exps[static_cast<std::size_t>(i)] += m[v] * xs[static_cast<std::size_t>(v)][i];
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

// Hypersurface form together with the frame it is written in.
template <typename T>
struct AmbientForm {
    VeroneseFrame frame;
    GradedForm<T> poly;

    AmbientForm() = default;
    AmbientForm(VeroneseFrame fr, GradedForm<T> p) : frame(fr), poly(std::move(p)) {
        if (poly.nvars() != frame.n + 1)
            throw std::invalid_argument("AmbientForm: polynomial not in the frame's ambient ring");
    }

    int degree() const { return poly.degree(); }
};

}  // namespace fano
