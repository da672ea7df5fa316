#include "tclass/classt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tclass/error.hpp"

namespace tclass {

namespace {

constexpr double kDecompositionSumTolerance = 1e-12;

int support_end(const NegCoeffSeries& f, const ClassParams& p) {
    return std::max(f.truncation(), p.j + 1);
}

void require_gap(const NegCoeffSeries& f, const ClassParams& p) {
    if (f.gap() != p.j) {
        throw Error(ErrorCode::MismatchedGapIndex,
                    "series has j = " + std::to_string(f.gap()) + " but parameters have j = " +
                        std::to_string(p.j));
    }
}

ClassParams with_beta(ClassParams p, double beta) {
    p.beta = beta;
    return p;
}

}  // namespace

Deficiency deficiency(const NegCoeffSeries& f, const ClassParams& p) {
    validate(p);
    require_gap(f, p);
    require_valid(p, support_end(f, p));
    Deficiency d;
    for (const auto& [k, a] : f.terms()) d.sigma += weight(k, p) * a;
    d.member = d.sigma <= 1.0 + kMembershipTolerance;
    return d;
}

double coeff_bound(int k, const ClassParams& p) {
    validate(p);
    const double w = weight(k, p);
    if (!(w > 0.0)) {
        throw Error(ErrorCode::InvalidWeightFamily,
                    "w(" + std::to_string(k) + ") <= 0 has no coefficient bound");
    }
    return 1.0 / w;
}

NegCoeffSeries extremal(int k, const ClassParams& p) {
    return NegCoeffSeries(p.j, {{k, coeff_bound(k, p)}});
}

Decomposition decompose(const NegCoeffSeries& f, const ClassParams& p) {
    const Deficiency d = deficiency(f, p);
    if (!d.member) {
        throw Error(ErrorCode::NotAMember, "sigma = " + std::to_string(d.sigma) + " exceeds 1");
    }
    Decomposition out;
    double total = 0.0;
    for (const auto& [k, a] : f.terms()) {
        const double mu = weight(k, p) * a;
        out.mus.emplace(k, mu);
        total += mu;
    }
    // Boundary members may overshoot 1 by rounding.
    out.mu_j = std::max(0.0, 1.0 - total);
    return out;
}

NegCoeffSeries recompose(const Decomposition& d, const ClassParams& p) {
    validate(p);
    double total = d.mu_j;
    bool nonnegative = d.mu_j >= 0.0;
    for (const auto& [k, mu] : d.mus) {
        nonnegative = nonnegative && mu >= 0.0;
        total += mu;
    }
    if (!nonnegative || std::abs(total - 1.0) > kDecompositionSumTolerance) {
        throw Error(ErrorCode::WeightsNotConvex,
                    "decomposition weights must be >= 0 and sum to 1");
    }
    std::map<int, double> terms;
    for (const auto& [k, mu] : d.mus) {
        if (k <= p.j) {
            throw Error(ErrorCode::IndexBelowRange,
                        "index " + std::to_string(k) + " must exceed j = " + std::to_string(p.j));
        }
    }
    const int end = d.mus.empty() ? p.j + 1 : std::max(d.mus.rbegin()->first, p.j + 1);
    require_valid(p, end);
    for (const auto& [k, mu] : d.mus) terms.emplace(k, mu / weight(k, p));
    return NegCoeffSeries(p.j, std::move(terms));
}

double parameter_weight(int k, const ClassParams& p, double t) {
    return weight(k, with_beta(p, t));
}

double printed_product_value(ProductKind kind, const ClassParams& p,
                             std::optional<double> eta) {
    // Integral exponents at k = j+1, transcribed as displayed.
    const double q = p.j + 1;
    const double en = std::pow(q, -p.n);
    const double em = std::pow(q, -p.m);
    auto bracket = [em](double b) { return (b + 1.0) * em - b; };
    const double bb = bracket(p.beta);
    switch (kind) {
        case ProductKind::gamma:
            return (en * bb * bb - em) / (em - 1.0);
        case ProductKind::xi: {
            const double be = bracket(eta.value_or(p.beta));
            return (en * bb * en * be - en) / (en - 1.0);
        }
        case ProductKind::delta:
            return (std::pow(q, -2 * p.n) * bb * bb - em) / (em - 1.0);
        case ProductKind::alpha:
            return (en * bb * bb * en - 2.0 * em) / (2.0 * em - 1.0);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

ProductParamResult product_parameter(ProductKind kind, const ClassParams& p,
                                     std::optional<double> eta, int K) {
    validate(p);
    if (kind == ProductKind::xi && !eta) {
        throw Error(ErrorCode::MissingEta, "xi needs the second class parameter eta");
    }
    if (K < p.j + 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "kmax must be at least j + 1");
    }
    require_valid(p, K);
    ClassParams eta_params = p;
    if (kind == ProductKind::xi) {
        eta_params = with_beta(p, *eta);
        validate(eta_params);
        require_valid(eta_params, K);
    }

    ProductParamResult result;
    result.kind = kind;
    result.printed_value = printed_product_value(kind, p, eta);

    double upper = std::numeric_limits<double>::infinity();
    double lower = -std::numeric_limits<double>::infinity();
    int attained = 0;
    bool consistent = true;
    for (int k = p.j + 1; k <= K; ++k) {
        const double w = weight(k, p);
        double bound = 0.0;
        switch (kind) {
            case ProductKind::gamma: bound = w * w; break;
            case ProductKind::xi: bound = w * weight(k, eta_params); break;
            case ProductKind::delta: bound = w * w * w; break;
            case ProductKind::alpha: bound = 0.5 * w * w; break;
        }
        // parameter_weight(k, p, t) = base + t * slope <= bound.
        const double en = exponent_factor(k, p.n, p.mode);
        const double em = exponent_factor(k, p.m, p.mode);
        const double base = en * em;
        const double slope = en * (em - 1.0);
        if (slope > 0.0) {
            const double t = (bound - base) / slope;
            if (t < upper) {
                upper = t;
                attained = k;
            }
        } else if (slope < 0.0) {
            lower = std::max(lower, (bound - base) / slope);
        } else if (base > bound) {
            consistent = false;
        }
    }

    result.feasible = consistent && std::isfinite(upper) && lower <= upper;
    if (result.feasible) {
        for (int k = p.j + 1; k <= K; ++k) {
            if (!(parameter_weight(k, p, upper) > 0.0)) {
                result.feasible = false;
                break;
            }
        }
    }
    if (result.feasible) {
        result.derived_value = upper;
        result.attained_k = attained;
    }
    return result;
}

}  // namespace tclass
