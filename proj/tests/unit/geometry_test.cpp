#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support/errors.hpp"
#include "support/generators.hpp"
#include "tclass/geometry.hpp"

namespace tclass {
namespace {

using testing::code_of;
using testing::dual;
using testing::integral;

const ClassParams kUnitWeight = dual(0, 0, 0.0);

// Brute-force minimum of the k-scan without any stopping rule.
std::pair<double, int> brute_infimum(RadiusKind kind, const ClassParams& p, double rho, int K) {
    double best = std::numeric_limits<double>::infinity();
    int at = 0;
    for (int k = p.j + 1; k <= K; ++k) {
        double denom = k;
        if (kind == RadiusKind::starlike) denom = k - rho;
        if (kind == RadiusKind::convex) denom = k * (k - rho);
        const double term = std::pow((1.0 - rho) / denom * weight(k, p), 1.0 / (k - 1));
        if (term < best) {
            best = term;
            at = k;
        }
    }
    return {best, at};
}

TEST(Geometry, RadiusExamples) {
    const auto cc = radius(RadiusKind::close_to_convex, kUnitWeight, 0.0);
    EXPECT_NEAR(cc.value, 0.5, 1e-15);
    EXPECT_EQ(cc.attained_k, 2);
    EXPECT_FALSE(cc.clipped);

    const auto st = radius(RadiusKind::starlike, kUnitWeight, 0.5);
    EXPECT_NEAR(st.value, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(st.attained_k, 2);

    const auto cv = radius(RadiusKind::convex, kUnitWeight, 0.0);
    EXPECT_NEAR(cv.value, 0.25, 1e-15);
    EXPECT_EQ(cv.attained_k, 2);
    EXPECT_EQ(cv.scanned_to, 2 + kStopRun);

    const auto full = radius(RadiusKind::convex, kUnitWeight, 0.0, {512, true});
    EXPECT_EQ(full.scanned_to, 512);
    EXPECT_EQ(full.value, cv.value);
}

TEST(Geometry, RadiusErrors) {
    EXPECT_EQ(code_of([] { radius(RadiusKind::convex, kUnitWeight, 1.0); }),
              ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { radius(RadiusKind::convex, kUnitWeight, -0.1); }),
              ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { radius(RadiusKind::convex, integral(1, 1, 1.0), 0.0); }),
              ErrorCode::InvalidWeightFamily);
    EXPECT_EQ(code_of([] { radius(RadiusKind::convex, kUnitWeight, 0.0, {1, false}); }),
              ErrorCode::ParameterOutOfRange);
}

TEST(Geometry, ClippedWhenBeyondUnitDisc) {
    const auto r = radius(RadiusKind::close_to_convex, dual(2, 2, 1.0), 0.0);
    EXPECT_GT(r.value, 1.0);
    EXPECT_TRUE(r.clipped);
}

TEST(Geometry, EarlyStopAgreesWithBruteForce) {
    for (auto mode : {OperatorMode::integral, OperatorMode::dual}) {
        for (int n = 0; n <= 2; ++n) {
            for (int m = 0; m <= 2; ++m) {
                for (double beta : {0.0, 0.5, 2.0}) {
                    const ClassParams p{n, m, beta, 1, mode};
                    if (!validity(p, 512).valid) continue;
                    for (auto kind : {RadiusKind::close_to_convex, RadiusKind::starlike,
                                      RadiusKind::convex}) {
                        for (double rho : {0.0, 0.3, 0.9}) {
                            const auto r = radius(kind, p, rho);
                            const auto [value, k] = brute_infimum(kind, p, rho, 512);
                            EXPECT_EQ(r.value, value);
                            EXPECT_EQ(r.attained_k, k);
                        }
                    }
                }
            }
        }
    }
}

TEST(Geometry, RadiusIsNonincreasingInOrder) {
    for (const auto& p : {kUnitWeight, dual(1, 1, 0.5), integral(1, 2, 0.0), dual(0, 2, 1.0, 2)}) {
        for (auto kind : {RadiusKind::close_to_convex, RadiusKind::starlike, RadiusKind::convex}) {
            double previous = std::numeric_limits<double>::infinity();
            for (int step = 0; step <= 9; ++step) {
                const double value = radius(kind, p, 0.1 * step).value;
                EXPECT_LE(value, previous);
                previous = value;
            }
        }
    }
}

TEST(Geometry, RadiusCollapsesAsOrderApproachesOne) {
    for (auto kind : {RadiusKind::close_to_convex, RadiusKind::starlike, RadiusKind::convex}) {
        EXPECT_LT(radius(kind, kUnitWeight, 0.999999).value, 1e-3);
    }
}

TEST(Geometry, RadiusSaturatesExtremalCriterion) {
    // k a_k r^(k-1) = 1 - rho at the close-to-convexity term of f_k.
    for (const auto& p : {kUnitWeight, dual(1, 1, 0.5), integral(1, 1, 0.0)}) {
        for (double rho : {0.0, 0.4}) {
            const auto r = radius(RadiusKind::close_to_convex, p, rho);
            const int k = r.attained_k;
            const double a = 1.0 / weight(k, p);
            EXPECT_NEAR(k * a * std::pow(r.value, k - 1), 1.0 - rho, 1e-12);
        }
    }
}

TEST(Geometry, BernardiUnivalenceRadius) {
    const auto c0 = bernardi_univalence_radius(kUnitWeight, 0.0);
    EXPECT_NEAR(c0.value, 0.25, 1e-15);
    EXPECT_EQ(c0.attained_k, 2);
    const auto c1 = bernardi_univalence_radius(kUnitWeight, 1.0);
    EXPECT_NEAR(c1.value, 1.0 / 3.0, 1e-15);
    EXPECT_EQ(c1.attained_k, 2);
    EXPECT_EQ(code_of([] { bernardi_univalence_radius(kUnitWeight, -1.0); }),
              ErrorCode::ParameterOutOfRange);
}

TEST(Geometry, DistortionEnvelope) {
    const auto integral_env = distortion_envelope(integral(1, 1, 0.0), 0, 0.5);
    EXPECT_EQ(integral_env.lower, -0.5);
    EXPECT_EQ(integral_env.upper, 1.5);
    EXPECT_TRUE(integral_env.vacuous_lower);

    const auto dual_env = distortion_envelope(dual(1, 1, 0.0), 0, 0.5);
    EXPECT_EQ(dual_env.lower, 0.4375);
    EXPECT_EQ(dual_env.upper, 0.5625);
    EXPECT_FALSE(dual_env.vacuous_lower);

    // i = 1 divides the denominator by e_1(2) = 2.
    const auto shifted = distortion_envelope(dual(1, 1, 0.0), 1, 0.5);
    EXPECT_EQ(shifted.upper, 0.5 + 0.25 / 2.0);

    for (const auto& p : {dual(2, 1, 0.3), integral(0, 0, 0.0), dual(0, 0, 0.0, 3)}) {
        const auto e = distortion_envelope(p, 0, 0.0);
        EXPECT_EQ(e.lower, 0.0);
        EXPECT_EQ(e.upper, 0.0);
        const auto g = distortion_envelope(p, 0, 0.7);
        EXPECT_NEAR(g.upper - g.r, g.r - g.lower, 1e-15);
    }

    EXPECT_EQ(code_of([] { distortion_envelope(dual(1, 1, 0.0), 2, 0.5); }),
              ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { distortion_envelope(dual(1, 1, 0.0), 0, 1.0); }),
              ErrorCode::ParameterOutOfRange);
    EXPECT_EQ(code_of([] { distortion_envelope(integral(1, 1, 1.0), 0, 0.5); }),
              ErrorCode::InvalidWeightFamily);
}

}  // namespace
}  // namespace tclass
