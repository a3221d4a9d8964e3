#ifndef SYLV_SCHUR_HPP
#define SYLV_SCHUR_HPP

#include <span>
#include <vector>

#include "sylv/field.hpp"
#include "sylv/linalg.hpp"
#include "sylv/poly.hpp"

namespace sylv {

/// Weakly decreasing tuple of non-negative integers.
class Partition {
   public:
    explicit Partition(std::vector<long> parts);

    /// (a^count_a ; b^count_b), e.g. ((n-k-1)^{m-k} ; 0^{k+1}).
    static Partition blocks(long a, std::size_t count_a, long b, std::size_t count_b);

    std::size_t length() const { return parts_.size(); }
    long operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<long>& parts() const { return parts_; }

   private:
    std::vector<long> parts_;
};

/// Schur polynomial s_lambda(X) evaluated through the bialternant
/// det(x_j^{lambda_i + l - 1 - i}) / det V(X). Requires |X| == length(lambda)
/// and pairwise-distinct X.
template <ExactField F>
F schur_eval(const Partition& lambda, std::span<const F> xs);

/// Numerator of the bialternant (the alternant a_{lambda + delta}(X)).
template <ExactField F>
Matrix<F> bialternant_matrix(const Partition& lambda, std::span<const F> xs);

/// (|R|+1)-square matrix over the columns R u {t}: the top rows hold
/// w(c) c^{j} for j = rows_top-1 .. 0 and the bottom rows c^{j} for
/// j = rows_bottom-1 .. 0.
template <ExactField F>
Matrix<F> weighted_vandermonde(std::span<const F> roots, const F& t, const UniPoly<F>& weight, std::size_t rows_top,
                               std::size_t rows_bottom);

/// F_k(f, g)(t) from its Schur-determinant form over A u {t}, with f the
/// monic polynomial of the roots A. Requires t not in A and
/// 0 <= k <= min(m-1, n-1) where n = deg g.
template <ExactField F>
F cofactor_f_schur_eval(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t);

/// G_k(f, g)(t) from its Schur-determinant form over B u {t}, with g the
/// monic polynomial of the roots B.
template <ExactField F>
F cofactor_g_schur_eval(const RootSet<F>& b, const UniPoly<F>& f, long k, const F& t);

template <ExactField F>
struct SchurPair {
    F cofactor;  // F_k(f, x^n)(t)
    F schur;     // (-1)^{m-k} s_lambda(A u {t})
};

/// Both sides of F_k(f, x^n) = (-1)^{m-k} s_lambda(A u {x}) at x = t, with
/// lambda = ((n-k-1)^{m-k} ; 0^{k+1}).
template <ExactField F>
SchurPair<F> schur_special_case(const RootSet<F>& a, long n, long k, const F& t);

template <ExactField F>
struct CauchyBinetSides {
    Matrix<F> weighted;  // g-weighted Vandermonde block matrix
    Matrix<F> band;      // banded g-coefficients stacked on [0 | Id]
    Matrix<F> product;   // band * V_{m+n-k}(A u {t})
};

template <ExactField F>
CauchyBinetSides<F> cauchy_binet_sides(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t);

/// Entrywise check of weighted == band * V_{m+n-k}(A u {t}).
template <ExactField F>
bool cauchy_binet_factorization_check(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t);

}  // namespace sylv

#endif  // SYLV_SCHUR_HPP
