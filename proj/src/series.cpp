#include "tclass/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tclass/error.hpp"

namespace tclass {

namespace {

constexpr double kConvexSumTolerance = 1e-12;

// Drops zero entries; the remaining map is the canonical representation.
std::map<int, double> prune(std::map<int, double> terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0.0; });
    return terms;
}

void require_same_gap(const NegCoeffSeries& a, const NegCoeffSeries& b) {
    if (a.gap() != b.gap()) {
        throw Error(ErrorCode::MismatchedGapIndex,
                    "gap indices differ: " + std::to_string(a.gap()) + " vs " +
                        std::to_string(b.gap()));
    }
}

}  // namespace

NegCoeffSeries::NegCoeffSeries(int j) : j_(j) {
    if (j < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "gap index j must be >= 1");
    }
}

NegCoeffSeries::NegCoeffSeries(int j, std::map<int, double> terms) : NegCoeffSeries(j) {
    for (const auto& [k, a] : terms) {
        if (k <= j) {
            throw Error(ErrorCode::IndexBelowRange,
                        "index " + std::to_string(k) + " must exceed j = " + std::to_string(j));
        }
        if (!std::isfinite(a)) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "coefficient at index " + std::to_string(k) + " is not finite");
        }
        if (a < 0.0) {
            throw Error(ErrorCode::NegativeCoefficient,
                        "coefficient at index " + std::to_string(k) + " is negative");
        }
    }
    terms_ = prune(std::move(terms));
}

int NegCoeffSeries::truncation() const noexcept {
    return terms_.empty() ? j_ : terms_.rbegin()->first;
}

double NegCoeffSeries::coefficient(int k) const noexcept {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0.0 : it->second;
}

NegCoeffSeries make_series(int j, std::map<int, double> terms) {
    return NegCoeffSeries(j, std::move(terms));
}

Complex evaluate(const NegCoeffSeries& f, Complex z, int order) {
    if (order < 0 || order > 2) {
        throw Error(ErrorCode::ParameterOutOfRange, "derivative order must be 0, 1 or 2");
    }
    // Terms are visited in increasing k, so z^(k - order) is built by
    // repeated multiplication.
    Complex sum{};
    Complex power{1.0, 0.0};
    int exponent = 0;
    for (const auto& [k, a] : f.terms()) {
        const int target = k - order;
        for (; exponent < target; ++exponent) power *= z;
        double factor = a;
        if (order >= 1) factor *= k;
        if (order == 2) factor *= k - 1;
        sum += factor * power;
    }
    switch (order) {
        case 0: return z - sum;
        case 1: return Complex(1.0) - sum;
        default: return -sum;
    }
}

NegCoeffSeries apply_operator(const NegCoeffSeries& f, int p, OperatorMode mode) {
    if (p < 0) {
        throw Error(ErrorCode::ParameterOutOfRange, "operator power must be >= 0");
    }
    std::map<int, double> out;
    const double sign = mode == OperatorMode::integral ? -1.0 : 1.0;
    for (const auto& [k, a] : f.terms()) {
        out.emplace(k, a * std::pow(double(k), sign * p));
    }
    return NegCoeffSeries(f.gap(), std::move(out));
}

NegCoeffSeries hadamard(const NegCoeffSeries& f1, const NegCoeffSeries& f2) {
    const int j = std::max(f1.gap(), f2.gap());
    std::map<int, double> out;
    for (const auto& [k, a] : f1.terms()) {
        if (k <= j) continue;
        if (double b = f2.coefficient(k); b != 0.0) out.emplace(k, a * b);
    }
    return NegCoeffSeries(j, std::move(out));
}

NegCoeffSeries convex_combine(std::span<const NegCoeffSeries> fs,
                              std::span<const double> lambdas) {
    if (fs.empty() || fs.size() != lambdas.size()) {
        throw Error(ErrorCode::WeightsNotConvex,
                    "need one weight per function and at least one function");
    }
    double total = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw Error(ErrorCode::WeightsNotConvex, "weights must be >= 0");
        total += l;
    }
    if (std::abs(total - 1.0) > kConvexSumTolerance) {
        throw Error(ErrorCode::WeightsNotConvex, "weights must sum to 1");
    }
    for (const auto& f : fs) require_same_gap(fs.front(), f);

    std::map<int, double> out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (const auto& [k, a] : fs[i].terms()) out[k] += lambdas[i] * a;
    }
    return NegCoeffSeries(fs.front().gap(), std::move(out));
}

NegCoeffSeries bernardi(const NegCoeffSeries& f, double c) {
    if (!(c > -1.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::ParameterOutOfRange, "Bernardi parameter requires c > -1");
    }
    std::map<int, double> out;
    for (const auto& [k, a] : f.terms()) out.emplace(k, (c + 1.0) / (c + k) * a);
    return NegCoeffSeries(f.gap(), std::move(out));
}

NegCoeffSeries quadratic_combine(const NegCoeffSeries& f1, const NegCoeffSeries& f2) {
    require_same_gap(f1, f2);
    std::map<int, double> out;
    for (const auto& [k, a] : f1.terms()) out[k] += a * a;
    for (const auto& [k, a] : f2.terms()) out[k] += a * a;
    return NegCoeffSeries(f1.gap(), std::move(out));
}

}  // namespace tclass
