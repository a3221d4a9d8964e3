#ifndef SYLV_LINALG_HPP
#define SYLV_LINALG_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sylv/field.hpp"
#include "sylv/poly.hpp"

namespace sylv {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0L)) {}
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1L);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    /// Copy with one row and one column removed.
    Matrix without(std::size_t row, std::size_t col) const {
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == col) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Square matrix whose last column holds polynomials in x: a numeric block of
/// shape r x (r-1) next to r polynomial entries.
template <ExactField F>
class PolyColumnMatrix {
   public:
    PolyColumnMatrix(Matrix<F> block, std::vector<UniPoly<F>> column)
        : block_(std::move(block)), column_(std::move(column)) {
        if (block_.rows() != column_.size() || block_.cols() + 1 != block_.rows())
            throw std::invalid_argument("polynomial-column matrix must be r x (r-1) plus r polynomials");
    }

    std::size_t size() const { return column_.size(); }
    const Matrix<F>& block() const { return block_; }
    const std::vector<UniPoly<F>>& column() const { return column_; }

    /// The numeric matrix obtained by evaluating the polynomial column at t.
    Matrix<F> evaluated_at(const F& t) const {
        Matrix<F> out(size(), size());
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = 0; j + 1 < size(); ++j) out(i, j) = block_(i, j);
            out(i, size() - 1) = column_[i](t);
        }
        return out;
    }

   private:
    Matrix<F> block_;
    std::vector<UniPoly<F>> column_;
};

/// Exact determinant. Over the rationals rows are scaled to integers and
/// eliminated with Bareiss' fraction-free scheme; over a prime field plain
/// Gaussian elimination is used. The 0x0 determinant is 1. Throws
/// std::invalid_argument for non-square input.
template <ExactField F>
F det_exact(const Matrix<F>& m);

/// Determinant as a polynomial in x, by Laplace expansion along the
/// polynomial column.
template <ExactField F>
UniPoly<F> det_poly_last_col(const PolyColumnMatrix<F>& m);

/// l x |X| matrix whose row i holds the (l-1-i)-th powers of X.
template <ExactField F>
Matrix<F> vandermonde(std::span<const F> xs, std::size_t l);

/// Square Vandermonde determinant prod_{i<j}(x_i - x_j), by the product formula.
template <ExactField F>
F vandermonde_product(std::span<const F> xs) {
    F out(1L);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out *= xs[i] - xs[j];
    return out;
}

}  // namespace sylv

#endif  // SYLV_LINALG_HPP
