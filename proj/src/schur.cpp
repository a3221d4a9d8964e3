#include "sylv/schur.hpp"

#include <stdexcept>
#include <string>

#include "sylv/subres.hpp"

namespace sylv {

namespace {

void check_cofactor_index(long m, long n, long k) {
    if (k < 0 || k > std::min(m - 1, n - 1))
        throw std::invalid_argument("cofactor index k = " + std::to_string(k) + " outside [0, min(m-1, n-1)]");
}

template <ExactField F>
std::vector<F> with_point(std::span<const F> roots, const F& t) {
    std::vector<F> out(roots.begin(), roots.end());
    for (const F& r : roots)
        if (r == t) throw std::invalid_argument("evaluation point " + t.to_string() + " collides with a root");
    out.push_back(t);
    return out;
}

template <ExactField F>
F nonzero_vandermonde(std::span<const F> xs) {
    const F v = vandermonde_product(xs);
    if (v.is_zero()) throw std::invalid_argument("bialternant needs pairwise-distinct points");
    return v;
}

}  // namespace

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition with a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
}

Partition Partition::blocks(long a, std::size_t count_a, long b, std::size_t count_b) {
    std::vector<long> parts(count_a, a);
    parts.insert(parts.end(), count_b, b);
    return Partition(std::move(parts));
}

template <ExactField F>
Matrix<F> bialternant_matrix(const Partition& lambda, std::span<const F> xs) {
    const std::size_t l = lambda.length();
    if (xs.size() != l) throw std::invalid_argument("Schur polynomial needs as many points as partition parts");
    Matrix<F> out(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            out(i, j) = power(xs[j], static_cast<unsigned>(lambda[i] + static_cast<long>(l - 1 - i)));
    return out;
}

template <ExactField F>
F schur_eval(const Partition& lambda, std::span<const F> xs) {
    const Matrix<F> num = bialternant_matrix(lambda, xs);
    return det_exact(num) / nonzero_vandermonde(xs);
}

template <ExactField F>
Matrix<F> weighted_vandermonde(std::span<const F> roots, const F& t, const UniPoly<F>& weight, std::size_t rows_top,
                               std::size_t rows_bottom) {
    const std::vector<F> cols = with_point(roots, t);
    if (rows_top + rows_bottom != cols.size()) throw std::invalid_argument("weighted Vandermonde must be square");
    Matrix<F> out(cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const F w = weight(cols[j]);
        for (std::size_t i = 0; i < rows_top; ++i)
            out(i, j) = w * power(cols[j], static_cast<unsigned>(rows_top - 1 - i));
        for (std::size_t i = 0; i < rows_bottom; ++i)
            out(rows_top + i, j) = power(cols[j], static_cast<unsigned>(rows_bottom - 1 - i));
    }
    return out;
}

template <ExactField F>
F cofactor_f_schur_eval(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t) {
    const long m = static_cast<long>(a.size());
    check_cofactor_index(m, g.degree(), k);
    const Matrix<F> num =
        weighted_vandermonde(a.elems(), t, g, static_cast<std::size_t>(m - k), static_cast<std::size_t>(k + 1));
    const std::vector<F> cols = with_point(a.elems(), t);
    return signed_scalar<F>(m - k) * det_exact(num) / nonzero_vandermonde<F>(cols);
}

template <ExactField F>
F cofactor_g_schur_eval(const RootSet<F>& b, const UniPoly<F>& f, long k, const F& t) {
    const long n = static_cast<long>(b.size());
    const long m = f.degree();
    check_cofactor_index(m, n, k);
    const Matrix<F> num =
        weighted_vandermonde(b.elems(), t, f, static_cast<std::size_t>(n - k), static_cast<std::size_t>(k + 1));
    const std::vector<F> cols = with_point(b.elems(), t);
    return signed_scalar<F>((m - k - 1) * (n - k)) * det_exact(num) / nonzero_vandermonde<F>(cols);
}

template <ExactField F>
SchurPair<F> schur_special_case(const RootSet<F>& a, long n, long k, const F& t) {
    const long m = static_cast<long>(a.size());
    check_cofactor_index(m, n, k);
    const UniPoly<F> f = poly_from_roots(a);
    const UniPoly<F> g = UniPoly<F>::monomial(F(1L), static_cast<std::size_t>(n));
    const Partition lambda =
        Partition::blocks(n - k - 1, static_cast<std::size_t>(m - k), 0, static_cast<std::size_t>(k + 1));
    const std::vector<F> cols = with_point(a.elems(), t);
    return {bezout_cofactors_det(f, g, k).f(t), signed_scalar<F>(m - k) * schur_eval<F>(lambda, cols)};
}

template <ExactField F>
CauchyBinetSides<F> cauchy_binet_sides(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t) {
    const long m = static_cast<long>(a.size());
    const long n = g.degree();
    check_cofactor_index(m, n, k);
    const std::size_t top = static_cast<std::size_t>(m - k);
    const std::size_t bottom = static_cast<std::size_t>(k + 1);
    const std::size_t width = static_cast<std::size_t>(m + n - k);

    CauchyBinetSides<F> out;
    out.weighted = weighted_vandermonde(a.elems(), t, g, top, bottom);
    out.band = Matrix<F>(top + bottom, width);
    for (std::size_t i = 0; i < top; ++i)
        for (long s = 0; s <= n; ++s) out.band(i, i + static_cast<std::size_t>(s)) = g.coeff(n - s);
    const std::size_t zero_cols = width - bottom;
    for (std::size_t r = 0; r < bottom; ++r) out.band(top + r, zero_cols + r) = F(1L);
    const std::vector<F> cols = with_point(a.elems(), t);
    out.product = out.band * vandermonde<F>(cols, width);
    return out;
}

template <ExactField F>
bool cauchy_binet_factorization_check(const RootSet<F>& a, const UniPoly<F>& g, long k, const F& t) {
    const CauchyBinetSides<F> sides = cauchy_binet_sides(a, g, k, t);
    return sides.weighted == sides.product;
}

#define SYLV_INSTANTIATE_SCHUR(F)                                                                               \
    template Matrix<F> bialternant_matrix(const Partition&, std::span<const F>);                              \
    template F schur_eval(const Partition&, std::span<const F>);                                              \
    template Matrix<F> weighted_vandermonde(std::span<const F>, const F&, const UniPoly<F>&, std::size_t,     \
                                            std::size_t);                                                     \
    template F cofactor_f_schur_eval(const RootSet<F>&, const UniPoly<F>&, long, const F&);                   \
    template F cofactor_g_schur_eval(const RootSet<F>&, const UniPoly<F>&, long, const F&);                   \
    template SchurPair<F> schur_special_case(const RootSet<F>&, long, long, const F&);                        \
    template CauchyBinetSides<F> cauchy_binet_sides(const RootSet<F>&, const UniPoly<F>&, long, const F&);    \
    template bool cauchy_binet_factorization_check(const RootSet<F>&, const UniPoly<F>&, long, const F&);

SYLV_INSTANTIATE_SCHUR(Rational)
SYLV_INSTANTIATE_SCHUR(ModP)

}  // namespace sylv
