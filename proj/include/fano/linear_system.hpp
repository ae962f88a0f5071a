#pragma once

#include <vector>

#include "fano/form.hpp"
#include "fano/matrix.hpp"

namespace fano {

// Ordered list of forms of one degree in one ring; zero members are allowed
// (they contribute zero columns to every multiplication map).
template <typename T>
struct LinearSystem {
    int nvars = 1;
    int degree = 0;
    std::vector<GradedForm<T>> members;

    LinearSystem() = default;
    LinearSystem(int nvars_, int degree_) : nvars(nvars_), degree(degree_) {
        if (nvars < 1) throw std::domain_error("LinearSystem: nvars must be >= 1");
        if (degree < 0) throw std::domain_error("LinearSystem: negative degree");
    }

    void add(GradedForm<T> f) {
        if (f.nvars() != nvars || (!f.is_zero() && f.degree() != degree))
            throw std::invalid_argument("LinearSystem: member from a different graded piece");
        if (f.degree() != degree) f = GradedForm<T>(nvars, degree);  // re-grade a zero form
        members.push_back(std::move(f));
    }
};

// Matrix of the multiplication map  W (x) S_c -> S_{b+c},  (F_i, mu) |-> mu*F_i.
// Rows follow the degree-(b+c) monomial basis; columns are member-major, inner
// index the degree-c basis.  Entry((lambda), (i, mu)) = coeff of lambda/mu in F_i.
template <typename T>
Matrix<T> multiplication_map(const LinearSystem<T>& sys, int c) {
    if (c < 0) throw std::domain_error("multiplication_map: c must be >= 0");
    const int nv = sys.nvars;
    const long long dim_c = graded_dim(nv - 1, c);
    const long long dim_out = graded_dim(nv - 1, sys.degree + c);
    Matrix<T> M(static_cast<int>(dim_out), static_cast<int>(sys.members.size() * dim_c));
    const std::vector<Monomial> basis_c = monomial_basis(nv, c);
    for (std::size_t i = 0; i < sys.members.size(); ++i) {
        for (const auto& [w, a] : sys.members[i].terms()) {
            for (long long k = 0; k < dim_c; ++k) {
                long long row = monomial_index(w * basis_c[static_cast<std::size_t>(k)]);
                M.at(static_cast<int>(row), static_cast<int>(i * dim_c + k)) = a;
            }
        }
    }
    return M;
}

// A system W in degree b is c-generating when W (x) S_c surjects onto S_{b+c}.
template <typename T>
bool is_c_generating(const LinearSystem<T>& sys, int c) {
    if (c < 1) throw std::domain_error("is_c_generating: c must be >= 1");
    const long long target = graded_dim(sys.nvars - 1, sys.degree + c);
    return rank(multiplication_map(sys, c)) == target;
}

}  // namespace fano
