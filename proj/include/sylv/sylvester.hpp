#ifndef SYLV_SYLVESTER_HPP
#define SYLV_SYLVESTER_HPP

#include <span>
#include <variant>
#include <vector>

#include "sylv/field.hpp"
#include "sylv/poly.hpp"

namespace sylv {

/// Marker for the polynomial variable x inside a tuple of scalars. Tuples
/// may contain at most one distinct marker.
struct Var {
    int id = 0;
    friend bool operator==(const Var&, const Var&) = default;
};

inline constexpr Var kX{};

template <ExactField F>
using Operand = std::variant<F, Var>;

template <ExactField F>
std::vector<Operand<F>> as_operands(std::span<const F> values) {
    return {values.begin(), values.end()};
}

/// R(Y, Z) = prod_{y in Y, z in Z} (y - z) as a polynomial in x; 1 when either
/// tuple is empty. Throws std::invalid_argument if two distinct markers
/// appear.
template <ExactField F>
UniPoly<F> rprod(std::span<const Operand<F>> ys, std::span<const Operand<F>> zs);

/// Scalar R(Y, Z).
template <ExactField F>
F rprod(std::span<const F> ys, std::span<const F> zs);

/// Sylvester's double sum Syl_{p,q}(A, B), a polynomial of degree <= p + q.
/// Requires 0 <= p <= |A| and 0 <= q <= |B|.
template <ExactField F>
UniPoly<F> syl_double(const RootSet<F>& a, const RootSet<F>& b, long p, long q);

/// Multivariate single sum MSyl_{0,d}(A, B) evaluated at a point of
/// |B| - d coordinates, from its subset-sum definition.
template <ExactField F>
F msyl_eval(const RootSet<F>& a, const RootSet<F>& b, long d, std::span<const F> point);

/// The same object through its determinantal form: a (m+n-2d)-square
/// determinant over det V(point). Requires d <= min(|B|-1, |A|) and
/// pairwise-distinct point coordinates.
template <ExactField F>
F msyl_det_eval(const RootSet<F>& a, const RootSet<F>& b, long d, std::span<const F> point);

template <ExactField F>
struct ExchangeSides {
    UniPoly<F> lhs;
    UniPoly<F> rhs;
};

/// Both sides of the exchange identity
///   sum_{A'} R(A\A', B) R(X, A') / R(A\A', A')
///     = sum_{B'} R(A, B\B') R(X, B') / R(B', B\B'),
/// subsets of size p. Requires p <= |A|, p <= |B| and |X| <= |A| - p.
template <ExactField F>
ExchangeSides<F> exchange_sides(const RootSet<F>& a, const RootSet<F>& b, long p, std::span<const Operand<F>> xs);

/// Left-hand side with the denominator oriented as R(A', A\A'); equals
/// (-1)^{p(m-p)} times the left side of exchange_sides.
template <ExactField F>
UniPoly<F> exchange_lhs_swapped(const RootSet<F>& a, const RootSet<F>& b, long p, std::span<const Operand<F>> xs);

}  // namespace sylv

#endif  // SYLV_SYLVESTER_HPP
