#pragma once

#include <optional>

#include "tclass/series.hpp"

namespace tclass {

/// Parameters (n, m, beta, j, mode) selecting the weight family
///   w(k) = e_n(k) [(beta + 1) e_m(k) - beta],
/// with e_p(k) = k^(-p) in integral mode and k^(+p) in dual mode.
struct ClassParams {
    int n = 0;
    int m = 0;
    double beta = 0.0;
    int j = 1;
    OperatorMode mode = OperatorMode::dual;

    friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

/// Throws ParameterOutOfRange unless n, m >= 0, beta >= 0 finite and j >= 1.
void validate(const ClassParams& p);

/// e_p(k).
double exponent_factor(int k, int p, OperatorMode mode);

double weight(int k, const ClassParams& p);

enum class TailVerdict { positive, negative, inconclusive };

struct ValidityReport {
    bool valid = true;
    std::optional<int> first_failure_k;
    int scanned_to = 0;
    TailVerdict tail_verdict = TailVerdict::positive;
};

// Scans w(k) > 0 on j+1..K and classifies the sign of w for large k from
// its dominant term. A negative tail makes the family invalid even when the
// finite scan passes; first_failure_k then reports the first index where
// the weight stops being positive.
ValidityReport validity(const ClassParams& p, int K);

/// Throws InvalidWeightFamily when validity(p, K) fails.
void require_valid(const ClassParams& p, int K);

/// True iff w1(k) <= w2(k) + 1e-15 on j+1..K, which gives T(w2) subset T(w1).
bool dominates(const ClassParams& p1, const ClassParams& p2, int K);

}  // namespace tclass
