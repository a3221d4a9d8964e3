#ifndef SYLV_POLY_HPP
#define SYLV_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sylv/field.hpp"

namespace sylv {

/// Dense univariate polynomial in x, coefficients in ascending powers.
/// The zero polynomial has no stored coefficients; otherwise the last stored
/// coefficient is nonzero.
template <ExactField F>
class UniPoly {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly constant(const F& c) { return UniPoly(std::vector<F>{c}); }

    /// c * x^k
    static UniPoly monomial(const F& c, std::size_t k) {
        std::vector<F> v(k + 1, F(0L));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    static UniPoly x() { return monomial(F(1L), 1); }

    long degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<F>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero outside the stored range (including i < 0).
    F coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return F(0L);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    F leading() const { return coeffs_.empty() ? F(0L) : coeffs_.back(); }

    /// Horner evaluation.
    F operator()(const F& t) const {
        F acc(0L);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    UniPoly& operator+=(const UniPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0L));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0L));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const F& c) {
        for (auto& a : coeffs_) a *= c;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly p, const F& c) { return p *= c; }
    friend UniPoly operator*(const F& c, UniPoly p) { return p *= c; }

    // schoolbook
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0L));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(out));
    }

    UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws std::domain_error on a
/// zero divisor.
template <ExactField F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& num, const UniPoly<F>& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> rem = num.coeffs();
    const long dn = den.degree();
    if (num.degree() < dn) return {UniPoly<F>{}, num};
    const F lead_inv = den.leading().inverse();
    std::vector<F> quot(static_cast<std::size_t>(num.degree() - dn + 1), F(0L));
    for (long i = num.degree(); i >= dn; --i) {
        const F c = rem[static_cast<std::size_t>(i)] * lead_inv;
        quot[static_cast<std::size_t>(i - dn)] = c;
        if (c.is_zero()) continue;
        for (long j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(i - dn + j)] -= c * den.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dn));
    return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

/// num / den, which must divide exactly; a nonzero remainder throws
/// std::logic_error.
template <ExactField F>
UniPoly<F> exact_quotient(const UniPoly<F>& num, const UniPoly<F>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Ordered tuple of pairwise-distinct scalars.
template <ExactField F>
class RootSet {
   public:
    RootSet() = default;
    explicit RootSet(std::vector<F> elems) : elems_(std::move(elems)) {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            for (std::size_t j = i + 1; j < elems_.size(); ++j)
                if (elems_[i] == elems_[j])
                    throw std::invalid_argument("root set has repeated element " + elems_[i].to_string());
    }
    RootSet(std::initializer_list<F> elems) : RootSet(std::vector<F>(elems)) {}

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const F& operator[](std::size_t i) const { return elems_[i]; }
    std::span<const F> elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    bool contains(const F& value) const { return std::find(elems_.begin(), elems_.end(), value) != elems_.end(); }

    friend bool operator==(const RootSet&, const RootSet&) = default;

   private:
    std::vector<F> elems_;
};

/// (x - r_1)...(x - r_k); 1 for an empty range.
template <ExactField F>
UniPoly<F> poly_from_roots(std::span<const F> roots) {
    std::vector<F> c{F(1L)};
    for (const F& r : roots) {
        c.push_back(F(0L));
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return UniPoly<F>(std::move(c));
}

template <ExactField F>
UniPoly<F> poly_from_roots(const RootSet<F>& roots) {
    return poly_from_roots<F>(roots.elems());
}

/// Unique polynomial of degree < |xs| through the points (xs[i], ys[i]);
/// the abscissae must be pairwise distinct.
template <ExactField F>
UniPoly<F> lagrange_interpolate(std::span<const F> xs, std::span<const F> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation needs as many values as abscissae");
    UniPoly<F> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<F> others;
        F den(1L);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            others.push_back(xs[j]);
            den *= xs[i] - xs[j];
        }
        out += poly_from_roots<F>(others) * (ys[i] / den);
    }
    return out;
}

/// Renders descending powers with explicit signs, e.g. `x^2 - 3x + 2`,
/// `-4x + 10`, `(3/2)x - 1/2`. The zero polynomial renders as `0`.
template <ExactField F>
std::string to_string(const UniPoly<F>& p);

extern template std::string to_string(const UniPoly<Rational>&);
extern template std::string to_string(const UniPoly<ModP>&);

}  // namespace sylv

#endif  // SYLV_POLY_HPP
