#pragma once

#include <map>
#include <optional>

#include "tclass/series.hpp"
#include "tclass/weights.hpp"

namespace tclass {

inline constexpr double kMembershipTolerance = 1e-12;

struct Deficiency {
    double sigma = 0.0;
    bool member = true;
};

/// sigma = sum_k w(k) a_k; member iff sigma <= 1 + 1e-12.
Deficiency deficiency(const NegCoeffSeries& f, const ClassParams& p);

/// 1 / w(k).
double coeff_bound(int k, const ClassParams& p);

/// z - z^k / w(k), the single-term member with sigma = 1.
NegCoeffSeries extremal(int k, const ClassParams& p);

/// Convex weights of f over the extreme points {z, f_k}.
struct Decomposition {
    double mu_j = 1.0;
    std::map<int, double> mus;
};

Decomposition decompose(const NegCoeffSeries& f, const ClassParams& p);
NegCoeffSeries recompose(const Decomposition& d, const ClassParams& p);

enum class ProductKind { gamma, xi, delta, alpha };

struct ProductParamResult {
    ProductKind kind = ProductKind::gamma;
    // Literal value of the closed-form expression at k = j+1 with integral
    // exponents. May be non-finite.
    double printed_value = 0.0;
    std::optional<double> derived_value;
    std::optional<int> attained_k;
    bool feasible = false;
};

/// Weight of the class with parameter t in place of beta:
/// e_n(k) [e_m(k) + t (e_m(k) - 1)].
double parameter_weight(int k, const ClassParams& p, double t);

double printed_product_value(ProductKind kind, const ClassParams& p,
                             std::optional<double> eta);

// Largest t with parameter_weight(k, p, t) <= B(k) for k in j+1..K, where
//   gamma: B = w^2, xi: B = w * w_eta, delta: B = w^3, alpha: B = w^2 / 2.
// Each constraint is affine in t and solved in closed form.
ProductParamResult product_parameter(ProductKind kind, const ClassParams& p,
                                     std::optional<double> eta, int K);

}  // namespace tclass
