#pragma once

#include <complex>
#include <map>
#include <span>

namespace tclass {

using Complex = std::complex<double>;

// Coefficient multiplier convention: integral divides a_k by k^p, dual
// multiplies by k^p.
enum class OperatorMode { integral, dual };

/// A truncated function f(z) = z - sum_{k=j+1..K} a_k z^k with a_k >= 0.
///
/// Coefficients are stored as nonnegative magnitudes and the minus sign is
/// applied at evaluation. Zero coefficients are not stored, so two series
/// compare equal exactly when they describe the same polynomial.
class NegCoeffSeries {
public:
    /// The identity member f(z) = z with gap index j.
    explicit NegCoeffSeries(int j = 1);

    /// Validating constructor. Throws ParameterOutOfRange for j < 1 or
    /// non-finite coefficients, IndexBelowRange for k <= j and
    /// NegativeCoefficient for a_k < 0.
    NegCoeffSeries(int j, std::map<int, double> terms);

    int gap() const noexcept { return j_; }
    /// Largest index with a nonzero coefficient, or j for the identity.
    int truncation() const noexcept;
    const std::map<int, double>& terms() const noexcept { return terms_; }
    double coefficient(int k) const noexcept;
    bool is_identity() const noexcept { return terms_.empty(); }

    friend bool operator==(const NegCoeffSeries&, const NegCoeffSeries&) = default;

private:
    int j_;
    std::map<int, double> terms_;
};

NegCoeffSeries make_series(int j, std::map<int, double> terms);

/// f(z), f'(z) or f''(z) for order 0, 1, 2.
Complex evaluate(const NegCoeffSeries& f, Complex z, int order = 0);

/// Image under the p-fold operator: a_k -> k^(-p) a_k (integral) or
/// k^(+p) a_k (dual).
NegCoeffSeries apply_operator(const NegCoeffSeries& f, int p, OperatorMode mode);

/// Modified Hadamard product. The result carries the larger gap index.
NegCoeffSeries hadamard(const NegCoeffSeries& f1, const NegCoeffSeries& f2);

NegCoeffSeries convex_combine(std::span<const NegCoeffSeries> fs,
                              std::span<const double> lambdas);

/// Bernardi transform on coefficients: b_k = (c+1)/(c+k) a_k, c > -1.
NegCoeffSeries bernardi(const NegCoeffSeries& f, double c);

/// Coefficients a_{k,1}^2 + a_{k,2}^2.
NegCoeffSeries quadratic_combine(const NegCoeffSeries& f1, const NegCoeffSeries& f2);

}  // namespace tclass
