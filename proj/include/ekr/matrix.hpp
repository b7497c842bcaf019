#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/numeric.hpp"

namespace ekr {

/// Dense row-major matrix over an exact scalar (Int or Rat here).
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix diff shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    Matrix& scale(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    std::vector<T> mul_vec(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matvec shape mismatch");
        std::vector<T> out(static_cast<std::size_t>(rows_), T(0));
        for (int i = 0; i < rows_; ++i) {
            T acc(0);
            for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    }

    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
        return m;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

/// Fraction-free (Bareiss) row echelon; intermediate entries stay integral
/// minors, which keeps growth polynomial instead of exponential. Returns the
/// rank; the input is consumed.
inline int bareiss_rank(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

/// Determinant by fraction-free elimination.
inline Int bareiss_det(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// Exact Gauss-Jordan solve of a square system; empty result when the matrix
/// is singular.
inline std::optional<std::vector<Rat>> solve_square(RatMatrix a, std::vector<Rat> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_square shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
        }
        const Rat inv = Rat(1) / a(col, col);
        for (int j = col; j < n; ++j) a(col, j) *= inv;
        b[static_cast<std::size_t>(col)] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    return b;
}

/// Unique exact solution of a consistent full-column-rank system A x = b via
/// the normal equations, with the candidate verified against the original
/// system. Returns nullopt when A^T A is singular (rank-deficient A) or the
/// residual is nonzero (inconsistent b).
template <typename T>
inline std::optional<std::vector<Rat>> solve_full_column_rank(const Matrix<T>& a, const std::vector<T>& b) {
    const RatMatrix ar = a.template cast<Rat>();
    std::vector<Rat> br(b.begin(), b.end());
    const RatMatrix at = ar.transpose();
    const RatMatrix gram = at * ar;
    const std::vector<Rat> rhs = at.mul_vec(br);
    auto x = solve_square(gram, rhs);
    if (!x) return std::nullopt;
    const std::vector<Rat> check = ar.mul_vec(*x);
    for (std::size_t i = 0; i < br.size(); ++i)
        if (check[i] != br[i]) return std::nullopt;
    return x;
}

/// Outcome of the exact positive-semidefiniteness test. When it fails, the
/// witness points at the offending pivot (negative diagonal, or a zero
/// diagonal with a nonzero residual column).
struct PsdCertificate {
    bool psd = false;
    std::vector<Rat> pivots;     // the diagonal D of P A P^T = L D L^T
    int witness_row = -1;
    int witness_col = -1;
    std::string reason;
};

/// LDL^T with symmetric (diagonal) pivoting over the rationals, zero pivot
/// tolerance. A symmetric matrix is PSD iff the elimination only ever meets
/// nonnegative diagonals and every zero diagonal has a zero residual column.
inline PsdCertificate ldlt_psd_certificate(RatMatrix m) {
    PsdCertificate cert;
    if (!m.is_symmetric()) {
        cert.reason = "matrix is not symmetric";
        return cert;
    }
    const int n = m.rows();
    std::vector<int> live(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live[static_cast<std::size_t>(i)] = i;

    while (!live.empty()) {
        int best = -1;
        for (std::size_t k = 0; k < live.size(); ++k) {
            const int i = live[k];
            if (m(i, i) < 0) {
                cert.witness_row = i;
                cert.witness_col = i;
                cert.reason = "negative diagonal pivot";
                return cert;
            }
            if (m(i, i) > 0 && (best < 0 || m(i, i) > m(live[static_cast<std::size_t>(best)], live[static_cast<std::size_t>(best)])))
                best = static_cast<int>(k);
        }
        if (best < 0) {
            // All remaining diagonals are zero: PSD iff the residual block is zero.
            for (std::size_t k = 0; k < live.size(); ++k)
                for (std::size_t l = k + 1; l < live.size(); ++l)
                    if (m(live[k], live[l]) != 0) {
                        cert.witness_row = live[k];
                        cert.witness_col = live[l];
                        cert.reason = "zero pivot with nonzero residual column";
                        return cert;
                    }
            cert.psd = true;
            return cert;
        }
        const int p = live[static_cast<std::size_t>(best)];
        const Rat d = m(p, p);
        cert.pivots.push_back(d);
        live.erase(live.begin() + best);
        for (std::size_t k = 0; k < live.size(); ++k) {
            const int i = live[k];
            if (m(i, p) == 0) continue;
            const Rat f = m(i, p) / d;
            for (std::size_t l = k; l < live.size(); ++l) {
                const int j = live[l];
                m(i, j) -= f * m(p, j);
                if (i != j) m(j, i) = m(i, j);
            }
        }
    }
    cert.psd = true;
    return cert;
}

/// Text export: "rows cols" header, then one row of rational entries per line.
template <typename T>
inline void write_matrix_text(std::ostream& os, const Matrix<T>& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
}

}  // namespace ekr
