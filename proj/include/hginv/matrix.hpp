#pragma once
/// Dense exact matrices and the linear algebra used throughout:
/// multiplication, inversion, fraction-free (Bareiss) elimination for
/// rank/kernel, and exact characteristic polynomials.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hginv/rational.hpp"

namespace hginv {

/// Row-major dense matrix over an exact scalar type (Int or Rat).
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
        return m;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) { return matmul(a, b); }

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <typename T>
bool is_zero(const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

/// Exact inverse by Gauss–Jordan elimination over the rationals.
inline RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m = a, inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rat p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Inverse of an integer matrix that is known to be unimodular; throws if the
/// inverse is not integral.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
    RatMatrix inv = inverse(a.template cast<Rat>());
    IntMatrix out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (!is_integral(inv(i, j)))
                throw std::domain_error("inverse_unimodular: non-integral inverse entry");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

namespace detail {

/// Fraction-free (Bareiss) row echelon form of an integer matrix, in place.
/// Returns the pivot columns.  Intermediate entries stay division-exact,
/// which keeps growth polynomial instead of exponential.
inline std::vector<std::size_t> bareiss_echelon(Matrix<Int>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Clear denominators row by row, preserving the row space / kernel.
inline Matrix<Int> to_integer_rows(const RatMatrix& a) {
    Matrix<Int> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < a.cols(); ++j) l = int_lcm(l, a(i, j).get_den());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Rat v = a(i, j) * Rat(l);
            m(i, j) = v.get_num();
        }
    }
    return m;
}

}  // namespace detail

/// Rank over the rationals via fraction-free elimination.
inline std::size_t rank(const RatMatrix& a) {
    Matrix<Int> m = detail::to_integer_rows(a);
    return detail::bareiss_echelon(m).size();
}

inline std::size_t rank(const IntMatrix& a) {
    Matrix<Int> m = a;
    return detail::bareiss_echelon(m).size();
}

/// Basis of the right null space { v : a·v = 0 } over the rationals, computed
/// by fraction-free elimination followed by exact back-substitution.  One
/// basis vector per free column; empty iff a has full column rank.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
    const std::size_t cols = a.cols();
    Matrix<Int> m = detail::to_integer_rows(a);
    std::vector<std::size_t> pivots = detail::bareiss_echelon(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        // Echelon rows are solved bottom-up: row i reads
        //   m(i, pivots[i])·v[pivots[i]] + sum_{j > pivots[i]} m(i, j)·v[j] = 0.
        for (std::size_t ii = pivots.size(); ii-- > 0;) {
            std::size_t pc = pivots[ii];
            if (pc > fc) continue;
            Rat s(0);
            for (std::size_t j = pc + 1; j <= fc; ++j)
                if (v[j] != 0) s += Rat(m(ii, j)) * v[j];
            v[pc] = -s / Rat(m(ii, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Monic characteristic polynomial det(T·I − m) by the Faddeev–LeVerrier
/// recurrence; exact over the rationals.  Coefficients indexed by degree.
inline std::vector<Rat> charpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = matmul(m, mk);
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        Rat ck = -tr / Rat(static_cast<unsigned long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

inline std::vector<Rat> charpoly(const IntMatrix& m) { return charpoly(m.template cast<Rat>()); }

}  // namespace hginv
