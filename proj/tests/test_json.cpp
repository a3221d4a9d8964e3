#include <gtest/gtest.h>

#include "sylv/json.hpp"
#include "sylv/syminterp.hpp"

using sylv::Json;
using sylv::ModP;
using sylv::Rational;
using P = sylv::UniPoly<Rational>;

TEST(JsonTest, PolyFormat) {
    const P p{Rational(sylv::BigInt(1), sylv::BigInt(2)), -4, 0, 1};
    const Json j = sylv::poly_to_json(p);
    EXPECT_EQ(j.dump(), R"({"coeffs":["1/2","-4","0","1"]})");
    EXPECT_EQ(sylv::poly_from_json<Rational>(j), p);
    EXPECT_EQ(sylv::poly_to_json(P{}).dump(), R"({"coeffs":[]})");
}

TEST(JsonTest, PolyRejectsMalformed) {
    EXPECT_THROW(sylv::poly_from_json<Rational>(Json::parse(R"({"coef":[]})")), std::invalid_argument);
    EXPECT_THROW(sylv::poly_from_json<Rational>(Json::parse(R"({"coeffs":[1]})")), std::invalid_argument);
    EXPECT_THROW(sylv::poly_from_json<Rational>(Json::parse(R"({"coeffs":["1.5"]})")), std::invalid_argument);
}

TEST(JsonTest, SymPolyRoundTrip) {
    const sylv::RootSet<Rational> b{3, 4, 7};
    const sylv::NodeValues<Rational> values{{0b011, Rational(1L)}, {0b101, Rational(-2L)}, {0b110, Rational(5L)}};
    const auto h = sylv::sym_interpolate(b, 1, values);
    const Json j = sylv::sym_to_json(h);
    EXPECT_EQ(j["d"], 1);
    EXPECT_TRUE(j["coeffs"].contains("4"));
    EXPECT_EQ(sylv::sym_from_json<Rational>(j), h);
    EXPECT_EQ(sylv::sym_from_json<Rational>(Json::parse(j.dump())), h);

    Json bad = j;
    bad["coeffs"] = Json{{"x1", "2"}};
    EXPECT_THROW(sylv::sym_from_json<Rational>(bad), std::invalid_argument);
}

TEST(JsonTest, ReportRoundTrip) {
    const auto inst = sylv::make_instance(sylv::RootSet<Rational>{1, 2}, sylv::RootSet<Rational>{3, 4});
    for (const auto& r : sylv::check_theorem1(inst)) {
        const Json j = sylv::report_to_json(r);
        for (const char* key : {"m", "n", "p", "q", "seed", "branch", "pass", "expected", "computed"})
            EXPECT_TRUE(j.contains(key)) << key;
        const auto back = sylv::report_from_json<Rational>(Json::parse(j.dump()));
        EXPECT_EQ(sylv::report_to_json(back), j);
    }
}

TEST(JsonTest, SuiteRoundTripModP) {
    ModP::Scope scope(2147483647);
    sylv::SuiteConfig config;
    config.max_m = 2;
    config.max_n = 2;
    config.seeds = 1;
    const auto suite = sylv::run_suite<ModP>(config);
    const Json j = sylv::suite_to_json(suite);
    EXPECT_EQ(j["summary"]["failures"], 0);
    const auto back = sylv::suite_from_json<ModP>(Json::parse(j.dump()));
    EXPECT_EQ(sylv::suite_to_json(back), j);
}
