#ifndef SYLV_SUBRES_HPP
#define SYLV_SUBRES_HPP

#include "sylv/field.hpp"
#include "sylv/linalg.hpp"
#include "sylv/poly.hpp"

namespace sylv {

template <ExactField F>
struct Cofactors {
    UniPoly<F> f;  // F_k, the coefficient of f
    UniPoly<F> g;  // G_k, the coefficient of g
    friend bool operator==(const Cofactors&, const Cofactors&) = default;
};

/// Whether Sres_d is defined for degrees m, n: 0 <= d <= min(m, n), and
/// d < m when m == n.
bool sres_admissible(long m, long n, long d);

/// Staircase block shared by the subresultant-type determinants: n-d rows
/// holding f-coefficients f_{m-j+i} followed by m-d rows holding g_{n-j+i},
/// over `cols` columns. Out-of-range coefficient indices read as zero.
template <ExactField F>
Matrix<F> coefficient_block(const UniPoly<F>& f, const UniPoly<F>& g, long d, std::size_t cols);

/// Subresultant Sres_d(f, g). Throws std::invalid_argument for inadmissible
/// d or a zero input polynomial.
template <ExactField F>
UniPoly<F> sres(const UniPoly<F>& f, const UniPoly<F>& g, long d);

/// Res(f, g) = Sres_0(f, g). Requires deg f >= 1 or deg g >= 1.
template <ExactField F>
F resultant(const UniPoly<F>& f, const UniPoly<F>& g);

/// Bezout cofactors (F_k, G_k) with Sres_k = F_k f + G_k g, from their
/// determinantal definition. Requires 0 <= k <= min(m-1, n-1).
template <ExactField F>
Cofactors<F> bezout_cofactors_det(const UniPoly<F>& f, const UniPoly<F>& g, long k);

/// The same cofactors as subset sums over the roots of f and g.
template <ExactField F>
Cofactors<F> cofactors_from_roots(const RootSet<F>& a, const RootSet<F>& b, long k);

/// The same cofactors as sums over (k+1)-subsets of A u {x} and B u {x}.
/// Individual terms are rational in x; they are accumulated over the common
/// denominator f (resp. g), which must then divide the sum exactly.
template <ExactField F>
Cofactors<F> cofactors_exchange_form(const RootSet<F>& a, const RootSet<F>& b, long k);

}  // namespace sylv

#endif  // SYLV_SUBRES_HPP
