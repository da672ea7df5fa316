#include "tclass/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tclass/error.hpp"

namespace tclass {

namespace {

constexpr double kDominanceTolerance = 1e-15;

// Sign of w(k) for k -> infinity. Only integral mode with beta > 0 and
// m >= 1 has a bracket tending to -beta.
TailVerdict tail_sign(const ClassParams& p) {
    if (p.mode == OperatorMode::integral && p.beta > 0.0 && p.m >= 1) {
        return TailVerdict::negative;
    }
    return TailVerdict::positive;
}

// First k >= j+1 with (beta+1) k^-m <= beta, i.e. k^m >= (beta+1)/beta.
// Empty when that index does not fit in an int.
std::optional<int> first_nonpositive_index(const ClassParams& p) {
    const double threshold = std::pow((p.beta + 1.0) / p.beta, 1.0 / p.m);
    if (!(threshold < 1e9)) return std::nullopt;
    int k = std::max(p.j + 1, static_cast<int>(std::floor(threshold)) - 1);
    while (weight(k, p) > 0.0) ++k;
    return k;
}

}  // namespace

void validate(const ClassParams& p) {
    if (p.n < 0 || p.m < 0) {
        throw Error(ErrorCode::ParameterOutOfRange, "n and m must be >= 0");
    }
    if (!std::isfinite(p.beta) || p.beta < 0.0) {
        throw Error(ErrorCode::ParameterOutOfRange, "beta must be finite and >= 0");
    }
    if (p.j < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "gap index j must be >= 1");
    }
}

double exponent_factor(int k, int p, OperatorMode mode) {
    const double kk = k;
    return mode == OperatorMode::integral ? std::pow(kk, -p) : std::pow(kk, p);
}

double weight(int k, const ClassParams& p) {
    if (k < p.j + 1) {
        throw Error(ErrorCode::IndexBelowRange,
                    "weight index " + std::to_string(k) + " must exceed j = " +
                        std::to_string(p.j));
    }
    if (p.beta == 0.0) return exponent_factor(k, p.n + p.m, p.mode);
    // (beta+1) e_m - beta written so that m = 0 gives exactly 1.
    const double em = exponent_factor(k, p.m, p.mode);
    return exponent_factor(k, p.n, p.mode) * (em + p.beta * (em - 1.0));
}

ValidityReport validity(const ClassParams& p, int K) {
    validate(p);
    ValidityReport report;
    report.scanned_to = K;
    report.tail_verdict = tail_sign(p);
    for (int k = p.j + 1; k <= K; ++k) {
        if (!(weight(k, p) > 0.0)) {
            report.valid = false;
            report.first_failure_k = k;
            return report;
        }
    }
    if (report.tail_verdict != TailVerdict::positive) {
        report.valid = false;
        if (report.tail_verdict == TailVerdict::negative) {
            report.first_failure_k = first_nonpositive_index(p);
        }
    }
    return report;
}

void require_valid(const ClassParams& p, int K) {
    const ValidityReport report = validity(p, K);
    if (!report.valid) {
        std::string detail = "weight family is not positive";
        if (report.first_failure_k) {
            detail += ": w(" + std::to_string(*report.first_failure_k) + ") <= 0";
        }
        throw Error(ErrorCode::InvalidWeightFamily, detail);
    }
}

bool dominates(const ClassParams& p1, const ClassParams& p2, int K) {
    if (p1.j != p2.j) {
        throw Error(ErrorCode::MismatchedGapIndex, "dominance needs equal gap indices");
    }
    require_valid(p1, K);
    require_valid(p2, K);
    for (int k = p1.j + 1; k <= K; ++k) {
        if (weight(k, p1) > weight(k, p2) + kDominanceTolerance) return false;
    }
    return true;
}

}  // namespace tclass
