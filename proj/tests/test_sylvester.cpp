#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sylv/sylvester.hpp"

using sylv::Operand;
using sylv::Rational;
using P = sylv::UniPoly<Rational>;
using Roots = sylv::RootSet<Rational>;

namespace {

const Roots kA{1, 2};
const Roots kB{3, 4};

struct RandomPair {
    std::vector<Rational> a, b;
};

RandomPair random_pair(std::mt19937_64& rng, long max_m, long max_n) {
    RandomPair out;
    out.a = oracle::random_distinct(rng, static_cast<std::size_t>(oracle::random_between(rng, 1, max_m)), 8);
    out.b = oracle::random_distinct(rng, static_cast<std::size_t>(oracle::random_between(rng, 1, max_n)), 8);
    return out;
}

}  // namespace

TEST(SylDoubleTest, Fixtures) {
    EXPECT_EQ(sylv::syl_double(kA, kB, 0, 1), (P{10, -4}));
    EXPECT_EQ(sylv::syl_double(kA, kB, 1, 0), (P{-10, 4}));
    EXPECT_EQ(sylv::syl_double(kA, kB, 2, 0), (P{2, -3, 1}));
    EXPECT_EQ(sylv::syl_double(kA, kB, 0, 2), (P{12, -7, 1}));
    EXPECT_EQ(sylv::syl_double(kA, kB, 0, 0), P{12});
}

TEST(SylDoubleTest, RangeChecks) {
    EXPECT_THROW(sylv::syl_double(kA, kB, 3, 0), std::invalid_argument);
    EXPECT_THROW(sylv::syl_double(kA, kB, 0, -1), std::invalid_argument);
}

TEST(RprodTest, ScalarsAndMarker) {
    const std::vector<Rational> ys{5, 7}, zs{1, 2};
    EXPECT_EQ(sylv::rprod<Rational>(ys, zs), Rational(4L * 3 * 6 * 5));
    EXPECT_EQ(sylv::rprod<Rational>(std::vector<Rational>{}, zs), Rational(1L));
    const std::vector<Operand<Rational>> x{sylv::kX};
    const auto z_ops = sylv::as_operands<Rational>(zs);
    EXPECT_EQ(sylv::rprod<Rational>(x, z_ops), (P{2, -3, 1}));
    EXPECT_EQ(sylv::rprod<Rational>(z_ops, x), (P{2, -3, 1}));
    const std::vector<Operand<Rational>> other{sylv::Var{1}};
    EXPECT_THROW(sylv::rprod<Rational>(x, other), std::invalid_argument);
}

TEST(MsylTest, Fixtures) {
    const std::vector<Rational> at3{3}, at4{4}, at0{0};
    // Single surviving term at the node (3) = B \ {4}: -f(3).
    EXPECT_EQ(sylv::msyl_eval(kA, kB, 1, std::span<const Rational>(at3)), Rational(-2L));
    // At the node (4) = B \ {3}: -f(4).
    EXPECT_EQ(sylv::msyl_eval(kA, kB, 1, std::span<const Rational>(at4)), Rational(-6L));
    EXPECT_EQ(sylv::msyl_det_eval(kA, kB, 1, std::span<const Rational>(at0)), Rational(10L));

    const Roots a{5}, b{1, 2, 3};
    const std::vector<Rational> origin{0, 0};
    EXPECT_EQ(sylv::msyl_eval(a, b, 1, std::span<const Rational>(origin)), Rational(25L));
}

TEST(MsylTest, DeterminantNeedsDistinctCoordinates) {
    const Roots a{5, 6}, b{1, 2, 3};
    const std::vector<Rational> repeated{0, 0};
    EXPECT_THROW(sylv::msyl_det_eval(a, b, 1, std::span<const Rational>(repeated)), std::invalid_argument);
    const std::vector<Rational> short_point{0};
    EXPECT_THROW(sylv::msyl_eval(a, b, 1, std::span<const Rational>(short_point)), std::invalid_argument);
}

TEST(ExchangeTest, Fixtures) {
    const std::vector<Operand<Rational>> x{sylv::kX};
    const auto sides = sylv::exchange_sides<Rational>(kA, kB, 1, x);
    EXPECT_EQ(sides.lhs, (P{10, -4}));
    EXPECT_EQ(sides.rhs, (P{10, -4}));

    const std::vector<Operand<Rational>> none;
    const auto p0 = sylv::exchange_sides<Rational>(kA, kB, 0, none);
    EXPECT_EQ(p0.lhs, P{12});
    EXPECT_EQ(p0.rhs, P{12});

    const auto scalar = sylv::exchange_sides<Rational>(kA, kB, 1, none);
    EXPECT_EQ(scalar.lhs, scalar.rhs);
}

TEST(ExchangeTest, RangeChecks) {
    const std::vector<Operand<Rational>> two{sylv::kX, Rational(0L)};
    EXPECT_THROW(sylv::exchange_sides<Rational>(kA, kB, 1, two), std::invalid_argument);
    const Roots small{9};
    const std::vector<Operand<Rational>> none;
    EXPECT_THROW(sylv::exchange_sides<Rational>(kA, small, 2, none), std::invalid_argument);
}

TEST(SylDoublePropertyTest, MatchesDirectSumAndDegreeBound) {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 120; ++it) {
        const RandomPair inst = random_pair(rng, 4, 4);
        const Roots a(inst.a), b(inst.b);
        const long p = oracle::random_between(rng, 0, static_cast<long>(inst.a.size()));
        const long q = oracle::random_between(rng, 0, static_cast<long>(inst.b.size()));
        const P s = sylv::syl_double(a, b, p, q);
        EXPECT_LE(s.degree(), p + q);
        for (long x = -3; x <= 3; ++x)
            EXPECT_EQ(s(Rational(x)), oracle::syl_double_at(inst.a, inst.b, static_cast<std::size_t>(p),
                                                            static_cast<std::size_t>(q), Rational(x)));
    }
}

TEST(MsylPropertyTest, SubsetSumAndDeterminantAgreeWithDirectSum) {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 80; ++it) {
        const RandomPair inst = random_pair(rng, 4, 5);
        const Roots a(inst.a), b(inst.b);
        const long n = static_cast<long>(inst.b.size());
        const long m = static_cast<long>(inst.a.size());
        const long d = oracle::random_between(rng, 0, n - 1);
        const auto point = oracle::random_distinct(rng, static_cast<std::size_t>(n - d), 15);
        const Rational value = sylv::msyl_eval(a, b, d, std::span<const Rational>(point));
        EXPECT_EQ(value, oracle::msyl_at(inst.a, inst.b, static_cast<std::size_t>(d), point));
        if (d <= m) EXPECT_EQ(sylv::msyl_det_eval(a, b, d, std::span<const Rational>(point)), value);
    }
}

TEST(ExchangePropertyTest, SidesAgreeAndOrientationsDifferBySign) {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 80; ++it) {
        const RandomPair inst = random_pair(rng, 5, 5);
        const Roots a(inst.a), b(inst.b);
        const long m = static_cast<long>(inst.a.size());
        const long p = oracle::random_between(rng, 0, std::min<long>(m, static_cast<long>(inst.b.size())));
        const long r = oracle::random_between(rng, 0, m - p);
        std::vector<Operand<Rational>> xs;
        if (r > 0) xs.emplace_back(sylv::kX);
        for (long i = 1; i < r; ++i) xs.emplace_back(Rational(oracle::random_between(rng, -20, 20)));
        const auto sides = sylv::exchange_sides<Rational>(a, b, p, xs);
        EXPECT_EQ(sides.lhs, sides.rhs);
        EXPECT_EQ(sylv::exchange_lhs_swapped<Rational>(a, b, p, xs),
                  sides.lhs * sylv::signed_scalar<Rational>(p * (m - p)));
    }
}
