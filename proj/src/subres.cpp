#include "sylv/subres.hpp"

#include <stdexcept>
#include <string>

#include "sylv/subset.hpp"
#include "sylv/sylvester.hpp"

namespace sylv {

namespace {

template <ExactField F>
void require_nonzero(const UniPoly<F>& f, const UniPoly<F>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("subresultants need nonzero polynomials");
}

void check_cofactor_index(long m, long n, long k) {
    if (k < 0 || k > std::min(m - 1, n - 1))
        throw std::invalid_argument("cofactor index k = " + std::to_string(k) + " outside [0, min(m-1, n-1)] = [0, " +
                                    std::to_string(std::min(m - 1, n - 1)) + "]");
}

/// Sum over (k+1)-subsets C' of roots u {x} of R(C\C', other)/R(C', C\C'),
/// accumulated over the common denominator prod (x - root) and divided back.
template <ExactField F>
UniPoly<F> exchange_form_sum(const RootSet<F>& roots, const RootSet<F>& other, long k) {
    std::vector<Operand<F>> with_x = as_operands<F>(roots.elems());
    with_x.emplace_back(kX);
    const std::vector<Operand<F>> other_ops = as_operands<F>(other.elems());
    const UniPoly<F> common = poly_from_roots(roots);
    const std::span<const Operand<F>> all(with_x);

    UniPoly<F> numerator;
    for (const SubsetSelector s : subsets(with_x.size(), static_cast<std::size_t>(k + 1))) {
        const std::vector<Operand<F>> in = s.pick(all);
        const std::vector<Operand<F>> out = s.complement().pick(all);
        const UniPoly<F> num = rprod<F>(out, other_ops);
        const UniPoly<F> den = rprod<F>(in, out);
        numerator += exact_quotient(num * common, den);
    }
    return exact_quotient(numerator, common);
}

}  // namespace

bool sres_admissible(long m, long n, long d) {
    if (d < 0 || d > std::min(m, n)) return false;
    return m != n || d < m;
}

template <ExactField F>
Matrix<F> coefficient_block(const UniPoly<F>& f, const UniPoly<F>& g, long d, std::size_t cols) {
    const long m = f.degree();
    const long n = g.degree();
    const std::size_t f_rows = static_cast<std::size_t>(n - d);
    const std::size_t g_rows = static_cast<std::size_t>(m - d);
    Matrix<F> out(f_rows + g_rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const long jj = static_cast<long>(j);
        for (std::size_t i = 0; i < f_rows; ++i) out(i, j) = f.coeff(m - jj + static_cast<long>(i));
        for (std::size_t i = 0; i < g_rows; ++i) out(f_rows + i, j) = g.coeff(n - jj + static_cast<long>(i));
    }
    return out;
}

template <ExactField F>
UniPoly<F> sres(const UniPoly<F>& f, const UniPoly<F>& g, long d) {
    require_nonzero(f, g);
    const long m = f.degree();
    const long n = g.degree();
    if (!sres_admissible(m, n, d))
        throw std::invalid_argument("Sres_d undefined for d = " + std::to_string(d) + " with deg f = " +
                                    std::to_string(m) + ", deg g = " + std::to_string(n) +
                                    " (need d <= min(m, n), and d < m when m = n)");
    const std::size_t size = static_cast<std::size_t>(m + n - 2 * d);
    std::vector<UniPoly<F>> column;
    column.reserve(size);
    for (long i = 0; i < n - d; ++i) column.push_back(UniPoly<F>::monomial(F(1L), static_cast<std::size_t>(n - d - 1 - i)) * f);
    for (long i = 0; i < m - d; ++i) column.push_back(UniPoly<F>::monomial(F(1L), static_cast<std::size_t>(m - d - 1 - i)) * g);
    return det_poly_last_col(PolyColumnMatrix<F>(coefficient_block(f, g, d, size - 1), std::move(column)));
}

template <ExactField F>
F resultant(const UniPoly<F>& f, const UniPoly<F>& g) {
    require_nonzero(f, g);
    if (f.degree() < 1 && g.degree() < 1) throw std::invalid_argument("resultant needs deg f >= 1 or deg g >= 1");
    return sres(f, g, 0).coeff(0);
}

template <ExactField F>
Cofactors<F> bezout_cofactors_det(const UniPoly<F>& f, const UniPoly<F>& g, long k) {
    require_nonzero(f, g);
    const long m = f.degree();
    const long n = g.degree();
    check_cofactor_index(m, n, k);
    const std::size_t size = static_cast<std::size_t>(m + n - 2 * k);
    const Matrix<F> block = coefficient_block(f, g, k, size - 1);

    std::vector<UniPoly<F>> f_column(size);
    std::vector<UniPoly<F>> g_column(size);
    for (long i = 0; i < n - k; ++i)
        f_column[static_cast<std::size_t>(i)] = UniPoly<F>::monomial(F(1L), static_cast<std::size_t>(n - k - 1 - i));
    for (long i = 0; i < m - k; ++i)
        g_column[static_cast<std::size_t>(n - k + i)] =
            UniPoly<F>::monomial(F(1L), static_cast<std::size_t>(m - k - 1 - i));
    return {det_poly_last_col(PolyColumnMatrix<F>(block, std::move(f_column))),
            det_poly_last_col(PolyColumnMatrix<F>(block, std::move(g_column)))};
}

template <ExactField F>
Cofactors<F> cofactors_from_roots(const RootSet<F>& a, const RootSet<F>& b, long k) {
    const long m = static_cast<long>(a.size());
    const long n = static_cast<long>(b.size());
    check_cofactor_index(m, n, k);

    Cofactors<F> out;
    for (const SubsetSelector s : subsets(b.size(), static_cast<std::size_t>(k + 1))) {
        const std::vector<F> in = s.pick(b.elems());
        const std::vector<F> rest = s.complement().pick(b.elems());
        out.f += poly_from_roots<F>(rest) * (rprod<F>(a.elems(), rest) / rprod<F>(in, rest));
    }
    for (const SubsetSelector s : subsets(a.size(), static_cast<std::size_t>(k + 1))) {
        const std::vector<F> in = s.pick(a.elems());
        const std::vector<F> rest = s.complement().pick(a.elems());
        out.g += poly_from_roots<F>(rest) * (rprod<F>(rest, b.elems()) / rprod<F>(rest, in));
    }
    out.f *= signed_scalar<F>(m - k);
    out.g *= signed_scalar<F>(m - k + 1);
    return out;
}

template <ExactField F>
Cofactors<F> cofactors_exchange_form(const RootSet<F>& a, const RootSet<F>& b, long k) {
    const long m = static_cast<long>(a.size());
    const long n = static_cast<long>(b.size());
    check_cofactor_index(m, n, k);
    return {exchange_form_sum(a, b, k) * signed_scalar<F>(k * (m - k)),
            exchange_form_sum(b, a, k) * signed_scalar<F>(m * (n - k))};
}

#define SYLV_INSTANTIATE_SUBRES(F)                                                                   \
    template Matrix<F> coefficient_block(const UniPoly<F>&, const UniPoly<F>&, long, std::size_t); \
    template UniPoly<F> sres(const UniPoly<F>&, const UniPoly<F>&, long);                          \
    template F resultant(const UniPoly<F>&, const UniPoly<F>&);                                    \
    template Cofactors<F> bezout_cofactors_det(const UniPoly<F>&, const UniPoly<F>&, long);       \
    template Cofactors<F> cofactors_from_roots(const RootSet<F>&, const RootSet<F>&, long);       \
    template Cofactors<F> cofactors_exchange_form(const RootSet<F>&, const RootSet<F>&, long);

SYLV_INSTANTIATE_SUBRES(Rational)
SYLV_INSTANTIATE_SUBRES(ModP)

}  // namespace sylv
