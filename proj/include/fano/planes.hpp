#pragma once

#include <functional>
#include <utility>

#include "fano/form.hpp"
#include "fano/matrix.hpp"

namespace fano {

// Canonical r-plane in P^n(F_q): the unique reduced-row-echelon basis of its
// row space, with the pivot columns recorded.
struct PlaneRep {
    std::uint64_t q = 0;
    int n = 0;
    int r = 0;
    Matrix<Fp> matrix;        // (r+1) x (n+1)
    std::vector<int> pivots;  // strictly increasing
};

// Visit every r-plane of P^n(F_q) exactly once: pivot-column sets in colex
// order, free entries cycling in odometer order (last position fastest).
inline void enumerate_planes(int n, int r, std::uint64_t q,
                             const std::function<void(const PlaneRep&)>& visit) {
    if (r < 0 || r > n) throw std::domain_error("enumerate_planes: need 0 <= r <= n");
    FpCtx F(q);
    const int k = r + 1, cols = n + 1;

    // first subset in colex order is {0, 1, .., r}
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;

    auto next_colex = [&]() {
        // advance the smallest movable element; reset the ones below it
        for (int i = 0; i < k; ++i) {
            int limit = i + 1 < k ? pivots[static_cast<std::size_t>(i) + 1] : cols;
            if (pivots[static_cast<std::size_t>(i)] + 1 < limit) {
                ++pivots[static_cast<std::size_t>(i)];
                for (int j = 0; j < i; ++j) pivots[static_cast<std::size_t>(j)] = j;
                return true;
            }
        }
        return false;
    };

    do {
        // free positions: to the right of each row's pivot, skipping pivot columns
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < cols; ++c) {
                bool is_pivot = false;
                for (int p : pivots)
                    if (p == c) is_pivot = true;
                if (!is_pivot) free_pos.emplace_back(i, c);
            }
        }

        PlaneRep rep;
        rep.q = q;
        rep.n = n;
        rep.r = r;
        rep.pivots = pivots;
        rep.matrix = Matrix<Fp>(k, cols);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < cols; ++c) rep.matrix.at(i, c) = F(0);
        for (int i = 0; i < k; ++i) rep.matrix.at(i, pivots[static_cast<std::size_t>(i)]) = F(1);

        std::vector<std::uint64_t> odo(free_pos.size(), 0);
        while (true) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rep.matrix.at(free_pos[t].first, free_pos[t].second) = Fp(odo[t], q);
            visit(rep);
            bool advanced = false;
            for (std::size_t t = free_pos.size(); t-- > 0;) {
                if (++odo[t] < q) {
                    advanced = true;
                    break;
                }
                odo[t] = 0;
            }
            if (!advanced) break;
        }
    } while (next_colex());
}

inline BigInt plane_count(int n, int r, std::uint64_t q) {
    return gaussian_binomial(n + 1, r + 1, q);
}

// Containment of a plane (given by any full-rank spanning matrix) in the
// hypersurface {G = 0}: pull G back along (s_0..s_r) -> s M and test for
// coefficient-wise vanishing, which is containment over every extension.
template <typename T>
bool plane_contained(const GradedForm<T>& G, const Matrix<T>& M) {
    if (G.nvars() != M.cols())
        throw std::invalid_argument("plane_contained: variable/column mismatch");
    std::vector<GradedForm<T>> images;
    images.reserve(static_cast<std::size_t>(M.cols()));
    for (int c = 0; c < M.cols(); ++c) {
        GradedForm<T> img(M.rows(), 1);
        for (int i = 0; i < M.rows(); ++i) img.add_term(Monomial::var(M.rows(), i), M.at(i, c));
        images.push_back(std::move(img));
    }
    return substitute_linear(G, images).is_zero();
}

inline bool plane_contained(const GradedForm<Fp>& G, const PlaneRep& plane) {
    return plane_contained(G, plane.matrix);
}

// Number of r-planes of P^n(F_q) inside {G = 0}, by exhaustive enumeration.
inline long long count_fano_points(const GradedForm<Fp>& G, int r, std::uint64_t q) {
    long long count = 0;
    enumerate_planes(G.nvars() - 1, r, q, [&](const PlaneRep& p) {
        if (plane_contained(G, p)) ++count;
    });
    return count;
}

// Projective dimension of the intersection of two planes (-1 when disjoint).
inline int meet_dim(const PlaneRep& a, const PlaneRep& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("meet_dim: mismatched ambients");
    Matrix<Fp> stacked(a.r + 1 + b.r + 1, a.n + 1);
    for (int i = 0; i <= a.r; ++i)
        for (int c = 0; c <= a.n; ++c) stacked.at(i, c) = a.matrix.at(i, c);
    for (int i = 0; i <= b.r; ++i)
        for (int c = 0; c <= a.n; ++c) stacked.at(a.r + 1 + i, c) = b.matrix.at(i, c);
    return (a.r + 1) + (b.r + 1) - rank(stacked) - 1;
}

// The split quadric t_0 t_{r+1} + t_1 t_{r+2} + ... + t_r t_{2r+1} on P^{2r+1}.
inline GradedForm<Fp> standard_split_quadric(int r, const FpCtx& F) {
    const int nv = 2 * r + 2;
    GradedForm<Fp> Q(nv, 2);
    for (int i = 0; i <= r; ++i)
        Q.add_term(Monomial::var(nv, i) * Monomial::var(nv, r + 1 + i), F(1));
    return Q;
}

// Two-family structure of the r-planes on the standard split quadric.
// Classifier: a plane lies in the family of the coordinate plane
// Pi = {t_{r+1} = .. = t_{2r+1} = 0} iff dim(plane meet Pi) == r (mod 2).
struct QuadricFamilies {
    std::pair<long long, long long> family_sizes;  // (family of Pi, other)
    bool cross_intersection_ok = false;  // r = 1: same-family disjoint, cross meet in a point
    bool pairwise_consistent = false;    // classifier agrees with pairwise parities
    bool lambda_same_family = false;     // the opposite coordinate plane
    bool gamma_same_family = false;      // the shifted plane span(e_1..e_{r+1})
};

inline QuadricFamilies quadric_families(int r, std::uint64_t q) {
    if (r < 1) throw std::domain_error("quadric_families: need r >= 1");
    if (q % 2 == 0) throw std::domain_error("quadric_families: even q degenerates the quadric");
    FpCtx F(q);
    const int n = 2 * r + 1;
    GradedForm<Fp> Q = standard_split_quadric(r, F);

    std::vector<PlaneRep> on_quadric;
    enumerate_planes(n, r, q, [&](const PlaneRep& p) {
        if (plane_contained(Q, p)) on_quadric.push_back(p);
    });

    auto coordinate_plane = [&](const std::vector<int>& basis_cols) {
        PlaneRep rep;
        rep.q = q;
        rep.n = n;
        rep.r = r;
        rep.pivots = basis_cols;
        rep.matrix = Matrix<Fp>(r + 1, n + 1);
        for (int i = 0; i <= r; ++i)
            for (int c = 0; c <= n; ++c) rep.matrix.at(i, c) = F(0);
        for (int i = 0; i <= r; ++i) rep.matrix.at(i, basis_cols[static_cast<std::size_t>(i)]) = F(1);
        return rep;
    };
    std::vector<int> pi_cols, lambda_cols, gamma_cols;
    for (int i = 0; i <= r; ++i) {
        pi_cols.push_back(i);
        lambda_cols.push_back(r + 1 + i);
        gamma_cols.push_back(i + 1);
    }
    PlaneRep pi = coordinate_plane(pi_cols);
    PlaneRep lambda = coordinate_plane(lambda_cols);
    PlaneRep gamma = coordinate_plane(gamma_cols);

    auto same_family = [&](const PlaneRep& p) {
        int parity = meet_dim(p, pi) % 2;           // in {-1, 0, 1}
        if (parity < 0) parity += 2;
        return parity == r % 2;
    };

    QuadricFamilies out;
    std::vector<bool> mine;
    mine.reserve(on_quadric.size());
    long long same = 0;
    for (const auto& p : on_quadric) {
        bool s = same_family(p);
        mine.push_back(s);
        if (s) ++same;
    }
    out.family_sizes = {same, static_cast<long long>(on_quadric.size()) - same};
    out.lambda_same_family = same_family(lambda);
    out.gamma_same_family = same_family(gamma);

    out.pairwise_consistent = true;
    out.cross_intersection_ok = true;
    for (std::size_t i = 0; i < on_quadric.size(); ++i)
        for (std::size_t j = i + 1; j < on_quadric.size(); ++j) {
            int md = meet_dim(on_quadric[i], on_quadric[j]);
            int parity = md % 2 < 0 ? md % 2 + 2 : md % 2;
            bool parity_same = parity == r % 2;
            if (parity_same != (mine[i] == mine[j])) out.pairwise_consistent = false;
            if (r == 1) {
                if (mine[i] == mine[j] && md != -1) out.cross_intersection_ok = false;
                if (mine[i] != mine[j] && md != 0) out.cross_intersection_ok = false;
            }
        }
    return out;
}

}  // namespace fano
