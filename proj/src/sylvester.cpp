#include "sylv/sylvester.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "sylv/linalg.hpp"
#include "sylv/subres.hpp"
#include "sylv/subset.hpp"

namespace sylv {

namespace {

template <ExactField F>
UniPoly<F> difference(const Operand<F>& y, const Operand<F>& z) {
    const F* ys = std::get_if<F>(&y);
    const F* zs = std::get_if<F>(&z);
    if (ys && zs) return UniPoly<F>::constant(*ys - *zs);
    if (!ys && !zs) return {};  // x - x
    if (ys) return UniPoly<F>{*ys, F(-1L)};
    return UniPoly<F>{-*zs, F(1L)};
}

template <ExactField F>
void check_single_marker(std::span<const Operand<F>> ys, std::span<const Operand<F>> zs) {
    std::optional<Var> seen;
    auto visit = [&](const Operand<F>& o) {
        if (const Var* v = std::get_if<Var>(&o)) {
            if (seen && !(*seen == *v)) throw std::invalid_argument("R(Y,Z) with two distinct variables");
            seen = *v;
        }
    };
    for (const auto& y : ys) visit(y);
    for (const auto& z : zs) visit(z);
}

void check_range(long value, long lo, long hi, const char* what) {
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(value) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

template <ExactField F>
UniPoly<F> rprod(std::span<const Operand<F>> ys, std::span<const Operand<F>> zs) {
    check_single_marker<F>(ys, zs);
    UniPoly<F> out = UniPoly<F>::constant(F(1L));
    for (const auto& y : ys)
        for (const auto& z : zs) out *= difference<F>(y, z);
    return out;
}

template <ExactField F>
F rprod(std::span<const F> ys, std::span<const F> zs) {
    F out(1L);
    for (const F& y : ys)
        for (const F& z : zs) out *= y - z;
    return out;
}

template <ExactField F>
UniPoly<F> syl_double(const RootSet<F>& a, const RootSet<F>& b, long p, long q) {
    const long m = static_cast<long>(a.size());
    const long n = static_cast<long>(b.size());
    check_range(p, 0, m, "p");
    check_range(q, 0, n, "q");

    UniPoly<F> out;
    for (const SubsetSelector sa : subsets(a.size(), static_cast<std::size_t>(p))) {
        const std::vector<F> a_in = sa.pick(a.elems());
        const std::vector<F> a_out = sa.complement().pick(a.elems());
        const F a_den = rprod<F>(a_in, a_out);
        const UniPoly<F> a_poly = poly_from_roots<F>(a_in);
        for (const SubsetSelector sb : subsets(b.size(), static_cast<std::size_t>(q))) {
            const std::vector<F> b_in = sb.pick(b.elems());
            const std::vector<F> b_out = sb.complement().pick(b.elems());
            const F coeff = rprod<F>(a_in, b_in) * rprod<F>(a_out, b_out) / (a_den * rprod<F>(b_in, b_out));
            out += a_poly * poly_from_roots<F>(b_in) * coeff;
        }
    }
    return out;
}

template <ExactField F>
F msyl_eval(const RootSet<F>& a, const RootSet<F>& b, long d, std::span<const F> point) {
    const long m = static_cast<long>(a.size());
    const long n = static_cast<long>(b.size());
    check_range(d, 0, n - 1, "d");
    if (static_cast<long>(point.size()) != n - d)
        throw std::invalid_argument("MSyl_{0,d} takes |B| - d = " + std::to_string(n - d) + " coordinates");

    const UniPoly<F> f = poly_from_roots(a);
    F sum(0L);
    for (const SubsetSelector sb : subsets(b.size(), static_cast<std::size_t>(d))) {
        const std::vector<F> b_in = sb.pick(b.elems());
        const std::vector<F> b_out = sb.complement().pick(b.elems());
        F weight(1L);
        for (const F& beta : b_out) weight *= f(beta);
        sum += weight * rprod<F>(point, b_in) / rprod<F>(b_out, b_in);
    }
    return signed_scalar<F>((m - d) * (n - d)) * sum;
}

template <ExactField F>
F msyl_det_eval(const RootSet<F>& a, const RootSet<F>& b, long d, std::span<const F> point) {
    const long m = static_cast<long>(a.size());
    const long n = static_cast<long>(b.size());
    check_range(d, 0, std::min(n - 1, m), "d");
    if (static_cast<long>(point.size()) != n - d)
        throw std::invalid_argument("MSyl_{0,d} takes |B| - d = " + std::to_string(n - d) + " coordinates");
    const F vdm = vandermonde_product(point);
    if (vdm.is_zero()) throw std::invalid_argument("determinantal MSyl needs pairwise-distinct coordinates");

    const UniPoly<F> f = poly_from_roots(a);
    const UniPoly<F> g = poly_from_roots(b);
    const std::size_t size = static_cast<std::size_t>(m + n - 2 * d);
    const std::size_t numeric = static_cast<std::size_t>(m - d);
    const Matrix<F> block = coefficient_block(f, g, d, numeric);

    Matrix<F> full(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < numeric; ++j) full(i, j) = block(i, j);
    const std::size_t f_rows = static_cast<std::size_t>(n - d);
    for (std::size_t c = 0; c < point.size(); ++c) {
        const F t = point[c];
        const F ft = f(t);
        const F gt = g(t);
        for (std::size_t i = 0; i < size; ++i) {
            const bool f_row = i < f_rows;
            const long exponent = f_row ? n - d - 1 - static_cast<long>(i)
                                        : m - d - 1 - static_cast<long>(i - f_rows);
            full(i, numeric + c) = power(t, static_cast<unsigned>(exponent)) * (f_row ? ft : gt);
        }
    }
    return det_exact(full) / vdm;
}

template <ExactField F>
ExchangeSides<F> exchange_sides(const RootSet<F>& a, const RootSet<F>& b, long p, std::span<const Operand<F>> xs) {
    const long m = static_cast<long>(a.size());
    check_range(p, 0, m, "p");
    check_range(p, 0, static_cast<long>(b.size()), "p (against |B|)");
    check_range(static_cast<long>(xs.size()), 0, m - p, "|X|");

    ExchangeSides<F> out;
    for (const SubsetSelector sa : subsets(a.size(), static_cast<std::size_t>(p))) {
        const std::vector<F> a_in = sa.pick(a.elems());
        const std::vector<F> a_out = sa.complement().pick(a.elems());
        const F coeff = rprod<F>(a_out, b.elems()) / rprod<F>(a_out, a_in);
        out.lhs += rprod<F>(xs, as_operands<F>(a_in)) * coeff;
    }
    for (const SubsetSelector sb : subsets(b.size(), static_cast<std::size_t>(p))) {
        const std::vector<F> b_in = sb.pick(b.elems());
        const std::vector<F> b_out = sb.complement().pick(b.elems());
        const F coeff = rprod<F>(a.elems(), b_out) / rprod<F>(b_in, b_out);
        out.rhs += rprod<F>(xs, as_operands<F>(b_in)) * coeff;
    }
    return out;
}

template <ExactField F>
UniPoly<F> exchange_lhs_swapped(const RootSet<F>& a, const RootSet<F>& b, long p, std::span<const Operand<F>> xs) {
    const long m = static_cast<long>(a.size());
    check_range(p, 0, m, "p");
    check_range(static_cast<long>(xs.size()), 0, m - p, "|X|");

    UniPoly<F> out;
    for (const SubsetSelector sa : subsets(a.size(), static_cast<std::size_t>(p))) {
        const std::vector<F> a_in = sa.pick(a.elems());
        const std::vector<F> a_out = sa.complement().pick(a.elems());
        const F coeff = rprod<F>(a_out, b.elems()) / rprod<F>(a_in, a_out);
        out += rprod<F>(xs, as_operands<F>(a_in)) * coeff;
    }
    return out;
}

#define SYLV_INSTANTIATE_SYLVESTER(F)                                                                      \
    template UniPoly<F> rprod(std::span<const Operand<F>>, std::span<const Operand<F>>);                 \
    template F rprod(std::span<const F>, std::span<const F>);                                            \
    template UniPoly<F> syl_double(const RootSet<F>&, const RootSet<F>&, long, long);                    \
    template F msyl_eval(const RootSet<F>&, const RootSet<F>&, long, std::span<const F>);                \
    template F msyl_det_eval(const RootSet<F>&, const RootSet<F>&, long, std::span<const F>);            \
    template ExchangeSides<F> exchange_sides(const RootSet<F>&, const RootSet<F>&, long,                 \
                                             std::span<const Operand<F>>);                               \
    template UniPoly<F> exchange_lhs_swapped(const RootSet<F>&, const RootSet<F>&, long,                 \
                                             std::span<const Operand<F>>);

SYLV_INSTANTIATE_SYLVESTER(Rational)
SYLV_INSTANTIATE_SYLVESTER(ModP)

}  // namespace sylv
