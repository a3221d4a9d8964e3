#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sylv/linalg.hpp"

using sylv::Matrix;
using sylv::ModP;
using sylv::Rational;

namespace {

template <class F>
Matrix<F> random_matrix(std::mt19937_64& rng, std::size_t n, bool fractional) {
    Matrix<F> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long num = oracle::random_between(rng, -9, 9);
            const long den = fractional ? oracle::random_between(rng, 1, 5) : 1;
            m(i, j) = F(num) / F(den);
        }
    return m;
}

}  // namespace

TEST(DeterminantTest, Fixtures) {
    EXPECT_EQ(sylv::det_exact(Matrix<Rational>{{1, 2}, {3, 4}}), Rational(-2L));
    EXPECT_EQ(sylv::det_exact(Matrix<Rational>(0, 0)), Rational(1L));
    EXPECT_EQ(sylv::det_exact(Matrix<Rational>{{0, 1}, {1, 0}}), Rational(-1L));
    EXPECT_EQ(sylv::det_exact(Matrix<Rational>{{1, 2}, {2, 4}}), Rational(0L));
    EXPECT_EQ(sylv::det_exact(Matrix<ModP>{{1, 2}, {3, 4}}), ModP(-2L));
}

TEST(DeterminantTest, VandermondeFixture) {
    const std::vector<Rational> xs{1, 2, 4};
    EXPECT_EQ(sylv::det_exact(sylv::vandermonde<Rational>(xs, 3)), Rational(-6L));
    EXPECT_EQ(sylv::vandermonde_product<Rational>(xs), Rational(-6L));
}

TEST(DeterminantTest, NonSquareThrows) {
    EXPECT_THROW(sylv::det_exact(Matrix<Rational>(2, 3)), std::invalid_argument);
}

TEST(DeterminantPropertyTest, MatchesLeibnizOverRationals) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = static_cast<std::size_t>(oracle::random_between(rng, 1, 6));
        const auto m = random_matrix<Rational>(rng, n, it % 2 == 0);
        EXPECT_EQ(sylv::det_exact(m), oracle::leibniz_det(m));
    }
}

TEST(DeterminantPropertyTest, SingularMatricesVanish) {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = static_cast<std::size_t>(oracle::random_between(rng, 2, 6));
        auto m = random_matrix<Rational>(rng, n, true);
        const Rational c(oracle::random_between(rng, -3, 3));
        for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * c;
        EXPECT_TRUE(sylv::det_exact(m).is_zero());
    }
}

TEST(DeterminantPropertyTest, MatchesLeibnizModP) {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = static_cast<std::size_t>(oracle::random_between(rng, 1, 6));
        const auto m = random_matrix<ModP>(rng, n, true);
        EXPECT_EQ(sylv::det_exact(m), oracle::leibniz_det(m));
    }
}

TEST(DeterminantPropertyTest, Multiplicative) {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = static_cast<std::size_t>(oracle::random_between(rng, 1, 5));
        const auto a = random_matrix<Rational>(rng, n, true);
        const auto b = random_matrix<Rational>(rng, n, false);
        EXPECT_EQ(sylv::det_exact(a * b), sylv::det_exact(a) * sylv::det_exact(b));
    }
}

TEST(DeterminantPropertyTest, VandermondeProduct) {
    std::mt19937_64 rng(35);
    for (int it = 0; it < 60; ++it) {
        const auto xs = oracle::random_distinct(rng, static_cast<std::size_t>(oracle::random_between(rng, 1, 6)), 12);
        Rational expected(1L);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) expected *= xs[i] - xs[j];
        EXPECT_EQ(sylv::det_exact(sylv::vandermonde<Rational>(xs, xs.size())), expected);
    }
}

TEST(PolyColumnDeterminantPropertyTest, MatchesPointwiseEvaluation) {
    std::mt19937_64 rng(36);
    using P = sylv::UniPoly<Rational>;
    for (int it = 0; it < 60; ++it) {
        const std::size_t r = static_cast<std::size_t>(oracle::random_between(rng, 1, 5));
        Matrix<Rational> block(r, r - 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j + 1 < r; ++j) block(i, j) = Rational(oracle::random_between(rng, -5, 5));
        std::vector<P> column;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Rational> c;
            for (long k = 0; k <= 3; ++k) c.emplace_back(oracle::random_between(rng, -4, 4));
            column.emplace_back(c);
        }
        const sylv::PolyColumnMatrix<Rational> pm(block, column);
        const P det = sylv::det_poly_last_col(pm);
        for (long t = -3; t <= 3; ++t) {
            Matrix<Rational> full(r, r);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j + 1 < r; ++j) full(i, j) = block(i, j);
                full(i, r - 1) = column[i](Rational(t));
            }
            EXPECT_EQ(det(Rational(t)), oracle::leibniz_det(full));
        }
    }
}
