#pragma once

#include <vector>

#include "fano/errors.hpp"
#include "fano/numeric.hpp"
#include "fano/prime_field.hpp"

namespace fano {

// Dense matrix over one scalar type.  Mixing scalar kinds in a single matrix is
// a compile-time type error by construction.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::domain_error("Matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// Rank over F_p by ordinary Gaussian elimination (destructive, by value).
inline int rank(Matrix<Fp> M) {
    int rank_so_far = 0;
    for (int col = 0; col < M.cols() && rank_so_far < M.rows(); ++col) {
        int pivot = -1;
        for (int i = rank_so_far; i < M.rows(); ++i) {
            if (!M.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        M.swap_rows(rank_so_far, pivot);
        Fp inv = M.at(rank_so_far, col).inverse();
        for (int i = rank_so_far + 1; i < M.rows(); ++i) {
            if (M.at(i, col).is_zero()) continue;
            Fp factor = M.at(i, col) * inv;
            for (int j = col; j < M.cols(); ++j) M.at(i, j) -= factor * M.at(rank_so_far, j);
        }
        ++rank_so_far;
    }
    return rank_so_far;
}

// Fraction-free (Bareiss) elimination over the integers: every intermediate
// entry is a minor of the input, and every division is exact.
inline int rank_bareiss(Matrix<BigInt> M) {
    BigInt prev = 1;
    int rank_so_far = 0;
    for (int col = 0; col < M.cols() && rank_so_far < M.rows(); ++col) {
        int pivot = -1;
        for (int i = rank_so_far; i < M.rows(); ++i) {
            if (M.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        M.swap_rows(rank_so_far, pivot);
        const BigInt& p = M.at(rank_so_far, col);
        for (int i = rank_so_far + 1; i < M.rows(); ++i) {
            for (int j = col + 1; j < M.cols(); ++j) {
                BigInt num = p * M.at(i, j) - M.at(i, col) * M.at(rank_so_far, j);
                BigInt quot, rem;
                boost::multiprecision::divide_qr(num, prev, quot, rem);
                if (rem != 0) throw internal_error("rank_bareiss: non-exact division");
                M.at(i, j) = quot;
            }
            M.at(i, col) = 0;
        }
        prev = p;
        ++rank_so_far;
    }
    return rank_so_far;
}

namespace detail {
// Clear denominators row by row; row scaling does not change the rank.
inline Matrix<BigInt> integerize_rows(const Matrix<Rational>& M) {
    Matrix<BigInt> Z(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < M.cols(); ++j) l = lcm(l, denominator(M.at(i, j)));
        for (int j = 0; j < M.cols(); ++j) {
            const Rational& q = M.at(i, j);
            Z.at(i, j) = numerator(q) * (l / denominator(q));
        }
    }
    return Z;
}
}  // namespace detail

inline int rank(const Matrix<Rational>& M) { return rank_bareiss(detail::integerize_rows(M)); }
inline int rank(const Matrix<BigInt>& M) { return rank_bareiss(M); }

// Determinant over F_p (square matrices).
inline Fp det(Matrix<Fp> M) {
    if (M.rows() != M.cols()) throw std::domain_error("det: matrix not square");
    if (M.rows() == 0) throw std::domain_error("det: empty matrix");
    bool negate = false;
    Fp result;
    for (int col = 0; col < M.cols(); ++col) {
        int pivot = -1;
        for (int i = col; i < M.rows(); ++i) {
            if (!M.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Fp();  // singular
        if (pivot != col) {
            M.swap_rows(col, pivot);
            negate = !negate;
        }
        Fp inv = M.at(col, col).inverse();
        for (int i = col + 1; i < M.rows(); ++i) {
            if (M.at(i, col).is_zero()) continue;
            Fp factor = M.at(i, col) * inv;
            for (int j = col; j < M.cols(); ++j) M.at(i, j) -= factor * M.at(col, j);
        }
        result = col == 0 ? M.at(0, 0) : result * M.at(col, col);
    }
    return negate ? -result : result;
}

// Determinant via Bareiss: the final pivot is the determinant exactly.
inline BigInt det_bareiss(Matrix<BigInt> M) {
    if (M.rows() != M.cols()) throw std::domain_error("det: matrix not square");
    if (M.rows() == 0) throw std::domain_error("det: empty matrix");
    BigInt prev = 1;
    bool negate = false;
    for (int col = 0; col < M.cols(); ++col) {
        int pivot = -1;
        for (int i = col; i < M.rows(); ++i) {
            if (M.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            M.swap_rows(col, pivot);
            negate = !negate;
        }
        const BigInt& p = M.at(col, col);
        for (int i = col + 1; i < M.rows(); ++i) {
            for (int j = col + 1; j < M.cols(); ++j) {
                BigInt num = p * M.at(i, j) - M.at(i, col) * M.at(col, j);
                BigInt quot, rem;
                boost::multiprecision::divide_qr(num, prev, quot, rem);
                if (rem != 0) throw internal_error("det_bareiss: non-exact division");
                M.at(i, j) = quot;
            }
            M.at(i, col) = 0;
        }
        prev = p;
    }
    BigInt d = M.at(M.rows() - 1, M.cols() - 1);
    return negate ? BigInt(-d) : d;
}

inline Rational det(const Matrix<Rational>& M) {
    if (M.rows() != M.cols()) throw std::domain_error("det: matrix not square");
    if (M.rows() == 0) throw std::domain_error("det: empty matrix");
    Matrix<BigInt> Z(M.rows(), M.cols());
    BigInt scale = 1;
    for (int i = 0; i < M.rows(); ++i) {
        BigInt l = 1;
        for (int j = 0; j < M.cols(); ++j) l = lcm(l, denominator(M.at(i, j)));
        for (int j = 0; j < M.cols(); ++j) {
            const Rational& q = M.at(i, j);
            Z.at(i, j) = numerator(q) * (l / denominator(q));
        }
        scale *= l;
    }
    return make_rational(det_bareiss(std::move(Z)), scale);
}

}  // namespace fano
