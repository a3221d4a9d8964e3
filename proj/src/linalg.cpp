#include "sylv/linalg.hpp"

#include <type_traits>

namespace sylv {

namespace {

Rational bareiss_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<BigInt> a(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

    // Clear denominators row by row; the determinant is divided back at the end.
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j).numerator() * (l / m(i, j).denominator());
        scale *= l;
    }

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return Rational(0L);
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

template <ExactField F>
F gauss_det(Matrix<F> m) {
    const std::size_t n = m.rows();
    F det(1L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && m(r, k).is_zero()) ++r;
        if (r == n) return F(0L);
        if (r != k) {
            m.swap_rows(r, k);
            det = -det;
        }
        det *= m(k, k);
        const F inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const F factor = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

}  // namespace

template <ExactField F>
F det_exact(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return F(1L);
    if constexpr (std::is_same_v<F, Rational>)
        return bareiss_det(m);
    else
        return gauss_det(m);
}

template <ExactField F>
UniPoly<F> det_poly_last_col(const PolyColumnMatrix<F>& m) {
    const std::size_t r = m.size();
    Matrix<F> full(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j + 1 < r; ++j) full(i, j) = m.block()(i, j);

    UniPoly<F> out;
    for (std::size_t i = 0; i < r; ++i) {
        const UniPoly<F>& entry = m.column()[i];
        if (entry.is_zero()) continue;
        const F cofactor = signed_scalar<F>(static_cast<long>(i + r - 1)) * det_exact(full.without(i, r - 1));
        out += entry * cofactor;
    }
    return out;
}

template <ExactField F>
Matrix<F> vandermonde(std::span<const F> xs, std::size_t l) {
    Matrix<F> out(l, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        F p(1L);
        for (std::size_t i = l; i-- > 0;) {
            out(i, j) = p;
            p *= xs[j];
        }
    }
    return out;
}

#define SYLV_INSTANTIATE_LINALG(F)                                  \
    template F det_exact(const Matrix<F>&);                         \
    template UniPoly<F> det_poly_last_col(const PolyColumnMatrix<F>&); \
    template Matrix<F> vandermonde(std::span<const F>, std::size_t);

SYLV_INSTANTIATE_LINALG(Rational)
SYLV_INSTANTIATE_LINALG(ModP)

}  // namespace sylv
