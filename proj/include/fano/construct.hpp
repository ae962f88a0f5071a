#pragma once

#include <algorithm>

#include "fano/generators.hpp"
#include "fano/veronese.hpp"

namespace fano {

// Field policies: the only pieces of construction logic that differ between Q
// and F_p are element creation, coefficient sampling, and the char-2 guard.
struct RationalFieldOps {
    using Scalar = Rational;
    FieldSpec spec() const { return FieldSpec::Q(); }
    Rational from_int(long long v) const { return Rational(v); }
    Rational draw(SeededRng& rng) const {
        return Rational(rng.in_box(-kCoefficientBoxRadius, kCoefficientBoxRadius));
    }
    GeneratorResult<Rational> find(const GeneratorRequest& req) const {
        return find_generating_system_q(req);
    }
    bool char_two() const { return false; }
};

struct PrimeFieldOps {
    FpCtx F;
    explicit PrimeFieldOps(std::uint64_t p) : F(p) {}
    using Scalar = Fp;
    FieldSpec spec() const { return FieldSpec::prime(F.modulus()); }
    Fp from_int(long long v) const { return F(v); }
    Fp draw(SeededRng& rng) const { return Fp(rng.below(F.modulus()), F.modulus()); }
    GeneratorResult<Fp> find(GeneratorRequest req) const {
        req.field = FieldSpec::prime(F.modulus());
        return find_generating_system_fp(req);
    }
    bool char_two() const { return F.modulus() == 2; }
};

// Express a degree-(k*e) monomial in t as a product of `parts` monomials from
// the degree-e basis.  Depth-first over the basis in its canonical order with
// nondecreasing indices: the first branch is the greedy largest-first choice,
// and the rest of the traversal is the exhaustive fallback.
namespace detail {
inline bool decompose_dfs(std::vector<int>& rem, int parts_left, std::size_t start,
                          const std::vector<Monomial>& delta, std::vector<std::size_t>& out) {
    if (parts_left == 0)
        return std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
    for (std::size_t idx = start; idx < delta.size(); ++idx) {
        const Monomial& u = delta[idx];
        bool fits = true;
        for (int i = 0; i < u.nvars(); ++i)
            if (u[i] > rem[static_cast<std::size_t>(i)]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for (int i = 0; i < u.nvars(); ++i) rem[static_cast<std::size_t>(i)] -= u[i];
        out.push_back(idx);
        if (decompose_dfs(rem, parts_left - 1, idx, delta, out)) return true;
        out.pop_back();
        for (int i = 0; i < u.nvars(); ++i) rem[static_cast<std::size_t>(i)] += u[i];
    }
    return false;
}
}  // namespace detail

inline std::vector<std::size_t> decompose_monomial(const Monomial& w, int e, int parts,
                                                   const std::vector<Monomial>& delta) {
    if (w.degree() != e * parts)
        throw std::domain_error("decompose_monomial: degree is not parts * e");
    std::vector<int> rem = w.exponents();
    std::vector<std::size_t> out;
    if (!detail::decompose_dfs(rem, parts, 0, delta, out))
        throw internal_error("decompose_monomial: no factorization found");
    // re-expansion check: the chosen factors must multiply back to w
    std::vector<int> sum(static_cast<std::size_t>(w.nvars()), 0);
    for (std::size_t idx : out)
        for (int i = 0; i < w.nvars(); ++i) sum[static_cast<std::size_t>(i)] += delta[idx][i];
    if (sum != w.exponents()) throw internal_error("decompose_monomial: re-expansion mismatch");
    return out;
}

// Lift a degree-(k*e) form on P^r to a degree-k form in the x-coordinates of
// the frame, monomial by monomial; pulling the result back recovers the input.
template <typename T>
GradedForm<T> lift_through_veronese(const VeroneseFrame& frame, const GradedForm<T>& g) {
    if (g.nvars() != frame.r + 1)
        throw std::invalid_argument("lift_through_veronese: form not on P^r");
    if (g.degree() % frame.e != 0)
        throw std::domain_error("lift_through_veronese: degree not divisible by e");
    const int parts = g.degree() / frame.e;
    const std::vector<Monomial> delta = frame.x_exponents();
    const int k = frame.x_count();
    GradedForm<T> out(k, parts);
    for (const auto& [w, c] : g.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(k), 0);
        for (std::size_t idx : decompose_monomial(w, frame.e, parts, delta))
            exps[idx] += 1;
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

// Ambient form sum_i y_i * H_i from per-y forms H_i in the x-coordinates.
template <typename T>
AmbientForm<T> assemble_span_form(const VeroneseFrame& frame, const std::vector<GradedForm<T>>& lifts) {
    if (static_cast<int>(lifts.size()) != frame.y_count())
        throw std::invalid_argument("assemble_span_form: need one lift per y-coordinate");
    const int k = frame.x_count();
    const int nv = frame.n + 1;
    int d = 0;
    for (const auto& h : lifts)
        if (!h.is_zero()) d = h.degree() + 1;
    GradedForm<T> G(nv, d);
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        for (const auto& [m, c] : lifts[i].terms()) {
            std::vector<int> exps(static_cast<std::size_t>(nv), 0);
            for (int v = 0; v < k; ++v) exps[static_cast<std::size_t>(v)] = m[v];
            exps[static_cast<std::size_t>(k) + i] += 1;
            G.add_term(Monomial(std::move(exps)), c);
        }
    }
    AmbientForm<T> out(frame, std::move(G));
    if (!veronese_pullback(out.frame, out.poly).is_zero())
        throw internal_error("assemble_span_form: output does not vanish on the Veronese");
    return out;
}

// Degree-d hypersurface through the e = 1 frame whose restricted partials are
// a verified 1-generating system; smooth along the plane {y = 0}.
template <typename Ops>
AmbientForm<typename Ops::Scalar> waldron_form(const Ops& ops, int r, int d, int n,
                                               std::uint64_t seed,
                                               int max_attempts = kDefaultMaxAttempts) {
    if (d < 3) throw std::domain_error("waldron_form: requires d >= 3");
    if (n < waldron_threshold(r, d))
        throw std::domain_error("waldron_form: n below the existence threshold N_1(r,d)");
    VeroneseFrame frame(r, 1, n);
    GeneratorRequest req;
    req.r = r;
    req.b = d - 1;
    req.m = frame.y_count();
    req.c = 1;
    req.field = ops.spec();
    req.seed = seed;
    req.max_attempts = max_attempts;
    auto found = ops.find(req);
    std::vector<GradedForm<typename Ops::Scalar>> lifts;
    for (const auto& g : found.system.members) lifts.push_back(lift_through_veronese(frame, g));
    return assemble_span_form(frame, lifts);
}

// Degree-d hypersurface through the e-uple frame (e >= 2) built from an
// e-generating system of degree (d-1)e, lifted monomial-by-monomial.
template <typename Ops>
AmbientForm<typename Ops::Scalar> nenashev_form(const Ops& ops, int r, int e, int d, int n,
                                                std::uint64_t seed,
                                                int max_attempts = kDefaultMaxAttempts) {
    if (e < 2) throw std::domain_error("nenashev_form: requires e >= 2");
    if (d < 3) throw std::domain_error("nenashev_form: requires d >= 3");
    if (n < nenashev_threshold(r, d, e))
        throw std::domain_error("nenashev_form: n below the existence threshold");
    VeroneseFrame frame(r, e, n);
    GeneratorRequest req;
    req.r = r;
    req.b = (d - 1) * e;
    req.m = frame.y_count();
    req.c = e;
    req.field = ops.spec();
    req.seed = seed;
    req.max_attempts = max_attempts;
    auto found = ops.find(req);
    std::vector<GradedForm<typename Ops::Scalar>> lifts;
    for (std::size_t i = 0; i < found.system.members.size(); ++i) {
        auto h = lift_through_veronese(frame, found.system.members[i]);
        // re-expansion check at the form level, not just per monomial
        GradedForm<typename Ops::Scalar> ambient_h(frame.n + 1, h.degree());
        for (const auto& [m, c] : h.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(frame.n) + 1, 0);
            for (int v = 0; v < frame.x_count(); ++v) exps[static_cast<std::size_t>(v)] = m[v];
            ambient_h.add_term(Monomial(std::move(exps)), c);
        }
        if (veronese_pullback(frame, ambient_h) != found.system.members[i])
            throw internal_error("nenashev_form: lift fails re-expansion");
        lifts.push_back(std::move(h));
    }
    return assemble_span_form(frame, lifts);
}

// Member of the pencil G_{a,b} = sum_i (a*y_{i-1} + b*y_i) G_i over one shared
// 1-generating system G_1..G_m with m = n - r - 1.
template <typename Ops>
AmbientForm<typename Ops::Scalar> pencil_form(const Ops& ops, int r, int d, int n, long long a,
                                              long long b, std::uint64_t seed,
                                              int max_attempts = kDefaultMaxAttempts) {
    using T = typename Ops::Scalar;
    if (d < 2) throw std::domain_error("pencil_form: requires d >= 2");
    if (n < 1 + nonempty_threshold(r, d, 1))
        throw std::domain_error("pencil_form: n below 1 + the nonemptiness threshold");
    const int m = n - r - 1;
    if (m < 1) throw std::domain_error("pencil_form: needs n - r - 1 >= 1");
    T fa = ops.from_int(a), fb = ops.from_int(b);
    if (sc_is_zero(fa) && sc_is_zero(fb))
        throw std::domain_error("pencil_form: (a, b) must be nonzero in the field");

    VeroneseFrame frame(r, 1, n);  // y_count = m + 1
    GeneratorRequest req;
    req.r = r;
    req.b = d - 1;
    req.m = m;
    req.c = 1;
    req.field = ops.spec();
    req.seed = seed;
    req.max_attempts = max_attempts;
    auto found = ops.find(req);

    // coefficient of y_j is a*G_{j+1} + b*G_j (out-of-range members are zero)
    std::vector<GradedForm<T>> lifts;
    for (int j = 0; j <= m; ++j) {
        GradedForm<T> h(frame.x_count(), d - 1);
        if (j + 1 <= m) h = h + fa * lift_through_veronese(frame, found.system.members[static_cast<std::size_t>(j)]);
        if (j >= 1) h = h + fb * lift_through_veronese(frame, found.system.members[static_cast<std::size_t>(j - 1)]);
        lifts.push_back(std::move(h));
    }
    return assemble_span_form(frame, lifts);
}

// Symmetric matrix of a quadratic form, doubled to stay integral: B[v][v] is
// twice the coefficient of v^2 and B[v][w] the coefficient of v*w.  Away from
// characteristic 2, det(B) != 0 exactly when the quadric is smooth.
template <typename T>
Matrix<T> gram_matrix(const GradedForm<T>& q) {
    if (q.degree() != 2) throw std::domain_error("gram_matrix: form must be quadratic");
    const int nv = q.nvars();
    Matrix<T> B(nv, nv);
    for (const auto& [m, c] : q.terms()) {
        int v = -1, w = -1;
        for (int i = 0; i < nv; ++i) {
            if (m[i] == 2) v = w = i;
            if (m[i] == 1) (v < 0 ? v : w) = i;
        }
        if (v == w) {
            B.at(v, v) = c + c;
        } else {
            B.at(v, w) = c;
            B.at(w, v) = c;
        }
    }
    return B;
}

// Spanning set of the degree-2 piece of the frame's ideal: binomial relations
// x_p x_q - x_{p0} x_{q0} among Veronese coordinates with equal exponent sums,
// plus everything in the ideal of the span.
template <typename Ops>
std::vector<GradedForm<typename Ops::Scalar>> quadric_ideal_spanning_set(const Ops& ops,
                                                                         const VeroneseFrame& frame) {
    using T = typename Ops::Scalar;
    const T one = ops.from_int(1), minus_one = ops.from_int(-1);
    const int nv = frame.n + 1;
    const int k = frame.x_count();
    const auto xs = frame.x_exponents();
    std::vector<GradedForm<T>> out;
    std::map<std::vector<int>, std::pair<int, int>> reference;
    for (int p = 0; p < k; ++p)
        for (int q = p; q < k; ++q) {
            std::vector<int> sum(static_cast<std::size_t>(frame.r) + 1, 0);
            for (int i = 0; i <= frame.r; ++i)
                sum[static_cast<std::size_t>(i)] =
                    xs[static_cast<std::size_t>(p)][i] + xs[static_cast<std::size_t>(q)][i];
            auto [it, inserted] = reference.emplace(sum, std::make_pair(p, q));
            if (inserted) continue;
            GradedForm<T> f(nv, 2);
            f.add_term(Monomial::var(nv, p) * Monomial::var(nv, q), one);
            f.add_term(Monomial::var(nv, it->second.first) * Monomial::var(nv, it->second.second),
                       minus_one);
            out.push_back(std::move(f));
        }
    for (int i = k; i < nv; ++i)
        for (int j = i; j < nv; ++j) {
            GradedForm<T> f(nv, 2);
            f.add_term(Monomial::var(nv, i) * Monomial::var(nv, j), one);
            out.push_back(std::move(f));
        }
    for (int i = k; i < nv; ++i)
        for (int v = 0; v < k; ++v) {
            GradedForm<T> f(nv, 2);
            f.add_term(Monomial::var(nv, i) * Monomial::var(nv, v), one);
            out.push_back(std::move(f));
        }
    return out;
}

// Smooth quadric hypersurface containing the Veronese: seeded random
// combinations of the ideal's spanning quadrics, accepted on nonzero Gram
// determinant.
template <typename Ops>
AmbientForm<typename Ops::Scalar> quadric_through_veronese(const Ops& ops, int r, int e, int n,
                                                           std::uint64_t seed,
                                                           int max_attempts = kDefaultMaxAttempts) {
    using T = typename Ops::Scalar;
    if (ops.char_two()) throw std::domain_error("quadric_through_veronese: characteristic 2 excluded");
    const long long threshold = e == 1 ? 2ll * r + 1 : veronese_span_dim(r, e);
    if (n < threshold)
        throw std::domain_error("quadric_through_veronese: n below the smooth-quadric threshold");
    VeroneseFrame frame(r, e, n);
    const auto spanning = quadric_ideal_spanning_set(ops, frame);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        SeededRng rng(seed, static_cast<std::uint64_t>(attempt));
        GradedForm<T> q(frame.n + 1, 2);
        for (const auto& f : spanning) q = q + ops.draw(rng) * f;
        if (q.is_zero()) continue;
        if (!sc_is_zero(det(gram_matrix(q)))) {
            AmbientForm<T> out(frame, std::move(q));
            if (!veronese_pullback(out.frame, out.poly).is_zero())
                throw internal_error("quadric_through_veronese: pullback is nonzero");
            return out;
        }
    }
    throw search_failure("quadric_through_veronese: no smooth combination found after " +
                             std::to_string(max_attempts) + " attempt(s)",
                         max_attempts, true);
}

}  // namespace fano
