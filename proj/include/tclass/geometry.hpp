#pragma once

#include "tclass/weights.hpp"

namespace tclass {

inline constexpr int kDefaultKmax = 512;
// The early-stop rule ends a scan once the term has been nondecreasing for
// this many consecutive indices and lies above the running minimum.
inline constexpr int kStopRun = 32;

enum class RadiusKind { close_to_convex, starlike, convex };

struct RadiusResult {
    double value = 0.0;
    int attained_k = 0;
    int scanned_to = 0;
    bool clipped = false;  // value > 1
};

struct ScanOptions {
    int kmax = kDefaultKmax;
    bool full_scan = false;
};

/// min_k [factor(k) w(k)]^(1/(k-1)) with factor (1-rho)/k, (1-rho)/(k-rho)
/// or (1-rho)/(k(k-rho)).
RadiusResult radius(RadiusKind kind, const ClassParams& p, double rho,
                    ScanOptions opts = {});

/// min_k [(c+1) w(k) / (k (c+k))]^(1/(k-1)).
RadiusResult bernardi_univalence_radius(const ClassParams& p, double c,
                                        ScanOptions opts = {});

struct DistortionEnvelope {
    double lower = 0.0;
    double upper = 0.0;
    double r = 0.0;
    int i = 0;
    bool vacuous_lower = false;
};

/// r -/+ r^(j+1) / D with D = e_n(j+1) / e_i(j+1) * [(beta+1) e_m(j+1) - beta].
DistortionEnvelope distortion_envelope(const ClassParams& p, int i, double r);

}  // namespace tclass
