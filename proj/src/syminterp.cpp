#include "sylv/syminterp.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "sylv/subset.hpp"
#include "sylv/sylvester.hpp"

namespace sylv {

namespace {

void check_degree_bound(std::size_t n, long d) {
    if (d < 0 || d > static_cast<long>(n) - 1)
        throw std::invalid_argument("degree bound d = " + std::to_string(d) + " outside [0, |B|-1] = [0, " +
                                    std::to_string(static_cast<long>(n) - 1) + "]");
}

}  // namespace

BigInt sym_dim(long l, long d) {
    if (l < 1 || d < 0) throw std::invalid_argument("sym_dim needs l >= 1 and d >= 0");
    return binomial(l + d, d);
}

template <ExactField F>
SymPolyInBasis<F>::SymPolyInBasis(RootSet<F> nodes, long d, std::map<std::uint64_t, F> coeffs)
    : nodes_(std::move(nodes)), d_(d) {
    check_degree_bound(nodes_.size(), d_);
    for (const auto& [mask, c] : coeffs) {
        const SubsetSelector s(mask, nodes_.size());
        if (static_cast<long>(s.size()) != d_)
            throw std::invalid_argument("basis coefficient key " + std::to_string(mask) + " does not select d nodes");
    }
    for_each_subset(nodes_.size(), static_cast<std::size_t>(d_), [&](SubsetSelector s) {
        auto it = coeffs.find(s.mask());
        coeffs_.emplace(s.mask(), it == coeffs.end() ? F(0L) : it->second);
    });
}

template <ExactField F>
SymPolyInBasis<F> SymPolyInBasis<F>::basis_element(RootSet<F> nodes, long d, std::uint64_t mask) {
    return SymPolyInBasis(std::move(nodes), d, {{mask, F(1L)}});
}

template <ExactField F>
SymPolyInBasis<F> sym_interpolate(const RootSet<F>& nodes, long d, const NodeValues<F>& values) {
    check_degree_bound(nodes.size(), d);
    std::map<std::uint64_t, F> coeffs;
    for (const SubsetSelector basis : subsets(nodes.size(), static_cast<std::size_t>(d))) {
        const SubsetSelector node = basis.complement();
        const auto it = values.find(node.mask());
        if (it == values.end())
            throw std::invalid_argument("missing value at node subset with mask " + std::to_string(node.mask()));
        const std::vector<F> inside = basis.pick(nodes.elems());
        const std::vector<F> outside = node.pick(nodes.elems());
        coeffs.emplace(basis.mask(), it->second / rprod<F>(outside, inside));
    }
    return SymPolyInBasis<F>(nodes, d, std::move(coeffs));
}

template <ExactField F>
F sym_eval(const SymPolyInBasis<F>& h, std::span<const F> point) {
    if (point.size() != h.variables())
        throw std::invalid_argument("symmetric polynomial takes " + std::to_string(h.variables()) + " coordinates");
    F out(0L);
    for (const auto& [mask, c] : h.coeffs()) {
        if (c.is_zero()) continue;
        const SubsetSelector s(mask, h.nodes().size());
        out += c * rprod<F>(point, s.pick(h.nodes().elems()));
    }
    return out;
}

template <ExactField F>
Matrix<F> basis_evaluation_matrix(const RootSet<F>& nodes, long d) {
    check_degree_bound(nodes.size(), d);
    const std::vector<SubsetSelector> sets = subsets(nodes.size(), static_cast<std::size_t>(d));
    Matrix<F> out(sets.size(), sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::vector<F> point = sets[i].complement().pick(nodes.elems());
        for (std::size_t j = 0; j < sets.size(); ++j) out(i, j) = rprod<F>(point, sets[j].pick(nodes.elems()));
    }
    return out;
}

template <ExactField F>
bool basis_independence_check(const RootSet<F>& nodes, long d) {
    return !det_exact(basis_evaluation_matrix(nodes, d)).is_zero();
}

#define SYLV_INSTANTIATE_SYMINTERP(F)                                                          \
    template class SymPolyInBasis<F>;                                                          \
    template SymPolyInBasis<F> sym_interpolate(const RootSet<F>&, long, const NodeValues<F>&); \
    template F sym_eval(const SymPolyInBasis<F>&, std::span<const F>);                         \
    template Matrix<F> basis_evaluation_matrix(const RootSet<F>&, long);                       \
    template bool basis_independence_check(const RootSet<F>&, long);

SYLV_INSTANTIATE_SYMINTERP(Rational)
SYLV_INSTANTIATE_SYMINTERP(ModP)

}  // namespace sylv
