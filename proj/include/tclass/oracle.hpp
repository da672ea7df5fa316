#pragma once

#include <vector>

#include "tclass/geometry.hpp"
#include "tclass/series.hpp"
#include "tclass/weights.hpp"

namespace tclass {

/// Sample points: `angles` equally spaced points on each circle |z| = r for
/// r in radii, followed by the real points z = r for r in
/// real_axis_refinement.
struct SampleGrid {
    std::vector<double> radii;
    int angles = 256;
    std::vector<double> real_axis_refinement;

    /// {0.1, ..., 0.9, 0.99} x 256 angles plus {0.9, 0.99, 0.999, 0.9999}.
    static SampleGrid default_grid();
};

struct MarginReport {
    double margin = 0.0;
    Complex worst_z{};
    int degenerate_samples = 0;
};

// One row of the optional per-sample dump.
struct SampleRecord {
    Complex z;
    double value = 0.0;
    bool degenerate = false;
};

// Samples whose denominator falls below this times |z| are counted but
// excluded from the minimum.
inline constexpr double kDegenerateThreshold = 1e-12;

/// min over samples of Re(q) - beta |q - 1|, q = I^{n+m} f / I^n f.
MarginReport membership_margin(const NegCoeffSeries& f, const ClassParams& p,
                               const SampleGrid& grid,
                               std::vector<SampleRecord>* dump = nullptr);

/// min over |z| = r of (1 - rho) - |E(z)| with E = f' - 1, z f'/f - 1 or
/// z f''/f' by kind.
MarginReport geometry_margin(RadiusKind kind, const NegCoeffSeries& f, double rho,
                             double r, int angles,
                             std::vector<SampleRecord>* dump = nullptr);

/// min over |z| = r of 1 - |G'(z) - 1|.
MarginReport transform_univalence_margin(const NegCoeffSeries& g, double r, int angles,
                                         std::vector<SampleRecord>* dump = nullptr);

struct DistortionExtremes {
    double min_abs = 0.0;
    double max_abs = 0.0;
};

DistortionExtremes distortion_extremes(const NegCoeffSeries& f, int i, double r,
                                       OperatorMode mode, int angles);

}  // namespace tclass
