#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "sylv/json.hpp"

using sylv::Json;
using sylv::Rational;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = sylv::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

void expect_input_error(const std::vector<std::string>& args) {
    const Outcome o = run(args);
    EXPECT_EQ(o.status, sylv::cli::kExitInputError) << o.out;
    EXPECT_TRUE(o.out.empty());
    ASSERT_FALSE(o.err.empty());
    EXPECT_EQ(o.err.find('\n'), o.err.size() - 1) << "diagnostic must be one line: " << o.err;
}

}  // namespace

TEST(CliTest, SylsumFixture) {
    const Outcome o = run({"sylsum", "--A", "1,2", "--B", "3,4", "--p", "0", "--q", "1"});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "-4x + 10\n");
}

TEST(CliTest, SresAndResultant) {
    EXPECT_EQ(run({"sres", "--A", "1,2", "--B", "3,4", "--d", "1"}).out, "-4x + 10\n");
    EXPECT_EQ(run({"res", "--A", "1,2", "--B", "3,4"}).out, "12\n");
    EXPECT_EQ(run({"sres", "--f", "2,-3,1", "--g", "12,-7,1", "--d", "1"}).out, "-4x + 10\n");
    EXPECT_EQ(run({"sres", "--A", "1/2,2", "--B", "3", "--d", "0"}).out, "5/2\n");
}

TEST(CliTest, InadmissibleSres) {
    expect_input_error({"sres", "--A", "1,2", "--B", "3,4", "--d", "2"});
}

TEST(CliTest, InputErrors) {
    expect_input_error({});
    expect_input_error({"frobnicate"});
    expect_input_error({"sylsum", "--A", "1,2", "--B", "3,4", "--p", "0"});
    expect_input_error({"sylsum", "--A", "1,2", "--B", "3,4", "--p", "3", "--q", "0"});
    expect_input_error({"sylsum", "--A", "1,1", "--B", "3,4", "--p", "0", "--q", "1"});
    expect_input_error({"sylsum", "--A", "1,x", "--B", "3,4", "--p", "0", "--q", "1"});
    expect_input_error({"sylsum", "--f", "1,2", "--g", "3,4", "--p", "0", "--q", "1"});
    expect_input_error({"sres", "--A", "1", "--f", "1,1", "--d", "0"});
    expect_input_error({"cofactors", "--A", "1,2", "--B", "3,4", "--k", "2"});
    expect_input_error({"interp", "--B", "1,2,3", "--d", "1", "--values", "1,2"});
    expect_input_error({"res", "--A", "1", "--B", "2", "--prime", "1000000"});
    expect_input_error({"res", "--A", "1", "--B", "2", "--format", "xml"});
    expect_input_error({"verify", "--max-m", "0"});
    expect_input_error({"res", "--A", "1/0", "--B", "2"});
}

TEST(CliTest, UnexpectedArgumentsKeepTheirOrder) {
    const Outcome o = run({"schur", "--f", "2,-3,1", "--g", "12,-7,1", "--k", "0"});
    EXPECT_EQ(o.status, sylv::cli::kExitInputError);
    EXPECT_EQ(o.err, "sylv: unexpected arguments: --f 2,-3,1 --g 12,-7,1\n");
}

TEST(CliTest, CofactorsListsAllForms) {
    const Outcome o = run({"cofactors", "--A", "1,2", "--B", "3,4", "--k", "0"});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("F_0 (determinant): -4x + 18"), std::string::npos);
    EXPECT_NE(o.out.find("G_0 (exchange): 4x - 2"), std::string::npos);
    const Outcome j = run({"cofactors", "--f", "2,-3,1", "--g", "12,-7,1", "--k", "1", "--format", "json"});
    EXPECT_EQ(j.status, 0);
    const Json doc = Json::parse(j.out);
    EXPECT_EQ(sylv::poly_from_json<Rational>(doc["determinant"]["F"]), sylv::UniPoly<Rational>{-1});
    EXPECT_FALSE(doc.contains("roots"));
}

TEST(CliTest, SchurRecoversCofactors) {
    const Outcome o = run({"schur", "--A", "1,2,5", "--B", "3,4", "--k", "1", "--format", "json"});
    EXPECT_EQ(o.status, 0);
    EXPECT_TRUE(Json::parse(o.out)["agree"].get<bool>());
}

TEST(CliTest, InterpJsonRoundTrip) {
    const Outcome o = run({"interp", "--B", "3,4", "--d", "1", "--values", "3,4", "--format", "json"});
    EXPECT_EQ(o.status, 0);
    const Json doc = Json::parse(o.out);
    const auto h = sylv::sym_from_json<Rational>(doc);
    EXPECT_EQ(sylv::sym_to_json(h), doc);
    const std::vector<Rational> t{Rational(9L)};
    EXPECT_EQ(sylv::sym_eval(h, std::span<const Rational>(t)), Rational(9L));
}

TEST(CliTest, VerifySmallSweep) {
    const Outcome o = run({"verify", "--max-m", "4", "--max-n", "4", "--seeds", "3"});
    EXPECT_EQ(o.status, 0) << o.out;
    EXPECT_NE(o.out.find("failures: 0"), std::string::npos);
}

TEST(CliTest, VerifyJsonRoundTripAndDeterminism) {
    const std::vector<std::string> args{"verify", "--max-m", "2", "--max-n", "3", "--seeds", "2", "--format", "json"};
    const Outcome first = run(args);
    const Outcome second = run(args);
    EXPECT_EQ(first.status, 0);
    EXPECT_EQ(first.out, second.out);
    const Json doc = Json::parse(first.out);
    EXPECT_EQ(sylv::suite_to_json(sylv::suite_from_json<Rational>(doc)), doc);
}

TEST(CliTest, ShowTheorem1) {
    const Outcome text = run({"show-theorem1", "--A", "1,2", "--B", "3,4"});
    EXPECT_EQ(text.status, 0);
    EXPECT_NE(text.out.find("p=0 q=1 branch=sres expected=-4x + 10"), std::string::npos);
    const Outcome json = run({"show-theorem1", "--m", "3", "--n", "2", "--seed", "7", "--format", "json"});
    EXPECT_EQ(json.status, 0);
    const Json doc = Json::parse(json.out);
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc.size(), 12u);
    for (const Json& r : doc) EXPECT_EQ(sylv::report_to_json(sylv::report_from_json<Rational>(r)), r);
}

TEST(CliTest, PrimeField) {
    const Outcome o = run({"sylsum", "--A", "1,2", "--B", "3,4", "--p", "1", "--q", "0", "--prime", "2147483647"});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "4x + 2147483637\n");
}

TEST(CliTest, Help) {
    const Outcome o = run({"--help"});
    EXPECT_EQ(o.status, 0);
    EXPECT_NE(o.out.find("show-theorem1"), std::string::npos);
}
