#include <gtest/gtest.h>

#include <cmath>

#include "support/errors.hpp"
#include "support/generators.hpp"
#include "tclass/io.hpp"

namespace tclass {
namespace {

using io::Json;
using testing::code_of;

TEST(Io, ParsesSeries) {
    const auto f = io::series_from_json(Json::parse(R"({"j": 1, "terms": {"2": 0.5, "5": 0.1}})"));
    EXPECT_EQ(f, make_series(1, {{2, 0.5}, {5, 0.1}}));
    EXPECT_EQ(io::series_from_json(Json::parse(R"({"j": 2, "terms": {}})")), NegCoeffSeries(2));
}

TEST(Io, RejectsMalformedSeries) {
    auto parse = [](const char* text) { return io::series_from_json(Json::parse(text)); };
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1, "terms": {"2": 0.5}, "extra": 1})"); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1.5, "terms": {}})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1, "terms": {"x": 0.5}})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1, "terms": {"2": "0.5"}})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"([1, 2])"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1, "terms": {"2": -0.5}})"); }),
              ErrorCode::NegativeCoefficient);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 1, "terms": {"1": 0.5}})"); }),
              ErrorCode::IndexBelowRange);
    EXPECT_EQ(code_of([&] { parse(R"({"j": 0, "terms": {}})"); }), ErrorCode::ParameterOutOfRange);
}

TEST(Io, ParsesParams) {
    const auto p = io::params_from_json(
        Json::parse(R"({"n":1,"m":1,"beta":0.5,"j":1,"mode":"dual"})"));
    EXPECT_EQ(p, (ClassParams{1, 1, 0.5, 1, OperatorMode::dual}));
    EXPECT_EQ(io::params_from_json(Json::parse(R"({"n":0,"m":2,"beta":0,"j":3,"mode":"integral"})")),
              (ClassParams{0, 2, 0.0, 3, OperatorMode::integral}));

    auto parse = [](const char* text) { return io::params_from_json(Json::parse(text)); };
    EXPECT_EQ(code_of([&] { parse(R"({"n":1,"m":1,"beta":0.5,"j":1,"mode":"Dual"})"); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"n":1,"m":1,"beta":0.5,"j":1})"); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"n":1,"m":1,"beta":0.5,"j":1,"mode":"dual","k":2})"); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"n":1.0,"m":1,"beta":0.5,"j":1,"mode":"dual"})"); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([&] { parse(R"({"n":-1,"m":1,"beta":0.5,"j":1,"mode":"dual"})"); }),
              ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([&] { parse(R"({"n":1,"m":1,"beta":-0.5,"j":1,"mode":"dual"})"); }),
              ErrorCode::ParameterOutOfRange);
}

TEST(Io, TenSignificantDigits) {
    EXPECT_EQ(io::dump(io::number(1.0 / 3.0)), "0.3333333333");
    EXPECT_EQ(io::dump(io::number(1.0)), "1.0");
    EXPECT_EQ(io::dump(io::number(0.25)), "0.25");
    EXPECT_EQ(io::dump(io::number(2.0 / 3.0 * 1e-7)), "6.666666667e-08");
    EXPECT_EQ(io::dump(io::number(-0.0)), "0.0");
    EXPECT_EQ(io::dump(io::number(1.0 + 1e-13)), "1.0");
    EXPECT_TRUE(io::number(NAN).is_null());
    EXPECT_TRUE(io::number(INFINITY).is_null());
}

TEST(Io, ReportShapes) {
    EXPECT_EQ(io::dump(io::to_json(Deficiency{1.0, true})), R"({"sigma":1.0,"member":true})");
    ProductParamResult r{ProductKind::gamma, 0.5, 2.0, 2, true};
    EXPECT_EQ(io::dump(io::to_json(r)),
              R"({"kind":"gamma","printed":0.5,"derived":2.0,"attained_k":2,"feasible":true})");
    ProductParamResult none{ProductKind::alpha, INFINITY, std::nullopt, std::nullopt, false};
    EXPECT_EQ(io::dump(io::to_json(none)),
              R"({"kind":"alpha","printed":null,"derived":null,"attained_k":null,"feasible":false})");
    EXPECT_EQ(io::dump(io::to_json(RadiusKind::starlike, RadiusResult{1.0 / 3.0, 2, 512, false})),
              R"({"kind":"starlike","value":0.3333333333,"attained_k":2,"scanned_to":512,"clipped":false})");
    EXPECT_EQ(io::dump(io::to_json(MarginReport{-0.013, {0.999, 0.0}, 0})),
              R"({"margin":-0.013,"worst_z":{"re":0.999,"im":0.0},"degenerate_samples":0})");
}

TEST(Io, SeriesRoundTripsExactly) {
    testing::Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = testing::random_series(rng, testing::uniform_int(rng, 1, 4), 64, 8, 10.0);
        const auto text = io::dump(io::series_to_json(f));
        EXPECT_EQ(io::series_from_json(Json::parse(text)), f);
    }
}

TEST(Io, ParamsRoundTrip) {
    const ClassParams p{2, 1, 0.75, 3, OperatorMode::integral};
    EXPECT_EQ(io::params_from_json(io::params_to_json(p)), p);
}

}  // namespace
}  // namespace tclass
