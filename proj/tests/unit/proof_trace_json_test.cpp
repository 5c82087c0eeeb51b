#include <gtest/gtest.h>

#include "wz/errors.hpp"
#include "wz/proof_trace_json.hpp"
#include "wz/wz_core.hpp"

using namespace wz;

TEST(TraceJson, ValidTrace)
{
    const auto j = trace_to_json(build_proof_trace(2, 1));
    std::string why;
    EXPECT_TRUE(validate_trace_json(j, &why)) << why;
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["m"], 2);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["wz_residual"], "0");
    EXPECT_EQ(j["final_identity"], "1");
    EXPECT_EQ(j["pair"]["cert_src"], "-k/(n+1)");
    EXPECT_EQ(j["telescope"]["lhs"], j["telescope"]["rhs"]);
    EXPECT_EQ(j["initial_row"]["expected"], "-x^3 + 1");
}

TEST(TraceJson, RoundTripsThroughText)
{
    const auto j = trace_to_json(build_proof_trace(7, 7));
    const std::string text = j.dump(2);
    const auto back = nlohmann::json::parse(text);
    EXPECT_EQ(back, j);
    EXPECT_EQ(back.dump(2), text);
    EXPECT_TRUE(validate_trace_json(back));
}

TEST(TraceJson, Deterministic)
{
    EXPECT_EQ(trace_to_json(build_proof_trace(4, 9)).dump(), trace_to_json(build_proof_trace(4, 9)).dump());
}

TEST(TraceJson, InvalidTraceStillConforms)
{
    const auto f = chaundy_bullard_pair().term();
    const auto bad = rf_normalize(-(MultiPoly::var(Var::k) + 1), MultiPoly::var(Var::n) + 1);
    const auto j = trace_to_json(build_proof_trace(f, bad, "F", "bad", 1, 1));
    std::string why;
    EXPECT_TRUE(validate_trace_json(j, &why)) << why;
    EXPECT_EQ(j["valid"], false);
    EXPECT_EQ(j["boundary"], false);
}

TEST(TraceJson, ValidatorRejectsDamage)
{
    const auto good = trace_to_json(build_proof_trace(1, 1));
    auto missing = good;
    missing.erase("telescope");
    EXPECT_FALSE(validate_trace_json(missing));
    auto wrong_type = good;
    wrong_type["m"] = "one";
    EXPECT_FALSE(validate_trace_json(wrong_type));
    auto wrong_version = good;
    wrong_version["schema_version"] = 2;
    EXPECT_FALSE(validate_trace_json(wrong_version));
    EXPECT_FALSE(validate_trace_json(nlohmann::json::array()));
}
