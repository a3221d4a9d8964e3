#ifndef SYLV_SYMINTERP_HPP
#define SYLV_SYMINTERP_HPP

#include <cstdint>
#include <map>
#include <span>

#include "sylv/field.hpp"
#include "sylv/linalg.hpp"
#include "sylv/poly.hpp"

namespace sylv {

/// dim S_(l,d) = C(l+d, d): symmetric polynomials in l variables of degree
/// at most d in each variable.
BigInt sym_dim(long l, long d);

/// A symmetric polynomial in |B| - d variables, written in the Lagrange
/// basis { R(X, B') : B' subset of B, |B'| = d }. Coefficients are keyed by
/// the bitmask of B' over the index range of B; every d-subset carries an
/// entry (absent entries are stored as zero).
template <ExactField F>
class SymPolyInBasis {
   public:
    SymPolyInBasis(RootSet<F> nodes, long d, std::map<std::uint64_t, F> coeffs);

    const RootSet<F>& nodes() const { return nodes_; }
    long degree_bound() const { return d_; }
    std::size_t variables() const { return nodes_.size() - static_cast<std::size_t>(d_); }
    const std::map<std::uint64_t, F>& coeffs() const { return coeffs_; }

    /// Basis element R(X, B') with the given coefficient set to 1.
    static SymPolyInBasis basis_element(RootSet<F> nodes, long d, std::uint64_t mask);

    friend bool operator==(const SymPolyInBasis&, const SymPolyInBasis&) = default;

   private:
    RootSet<F> nodes_;
    long d_;
    std::map<std::uint64_t, F> coeffs_;
};

/// Values keyed by the bitmask of the node subset B \ B' (size |B| - d).
template <ExactField F>
using NodeValues = std::map<std::uint64_t, F>;

/// The unique element of S_(|B|-d, d) taking the given values at all node
/// tuples: c_{B'} = value(B \ B') / R(B \ B', B'). Throws
/// std::invalid_argument for a missing node value or d outside [0, |B|-1].
template <ExactField F>
SymPolyInBasis<F> sym_interpolate(const RootSet<F>& nodes, long d, const NodeValues<F>& values);

/// sum_{B'} c_{B'} prod_{t in point, beta in B'} (t - beta).
template <ExactField F>
F sym_eval(const SymPolyInBasis<F>& h, std::span<const F> point);

/// Whether the C(n,d)-square evaluation matrix [R(B \ B'', B')] of the
/// basis at all node tuples has nonzero determinant.
template <ExactField F>
bool basis_independence_check(const RootSet<F>& nodes, long d);

/// Evaluation matrix used by basis_independence_check; rows indexed by B''
/// and columns by B', both in increasing bitmask order.
template <ExactField F>
Matrix<F> basis_evaluation_matrix(const RootSet<F>& nodes, long d);

}  // namespace sylv

#endif  // SYLV_SYMINTERP_HPP
