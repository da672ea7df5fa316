#include "tclass/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tclass/error.hpp"

namespace tclass {

namespace {

void require_kmax(const ClassParams& p, int kmax) {
    if (kmax < p.j + 1) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "kmax = " + std::to_string(kmax) + " is below j + 1");
    }
}

// Minimum of term(k) over j+1..kmax with the early-stop rule; ties resolve
// to the smallest k.
template <typename Term>
RadiusResult scan_infimum(const ClassParams& p, const ScanOptions& opts, Term term) {
    RadiusResult out;
    out.value = std::numeric_limits<double>::infinity();
    double previous = 0.0;
    int run = 0;
    for (int k = p.j + 1; k <= opts.kmax; ++k) {
        const double t = term(k);
        if (t < out.value) {
            out.value = t;
            out.attained_k = k;
        }
        run = (k > p.j + 1 && t >= previous) ? run + 1 : 0;
        previous = t;
        out.scanned_to = k;
        if (!opts.full_scan && run >= kStopRun && t > out.value) break;
    }
    out.clipped = out.value > 1.0;
    return out;
}

}  // namespace

RadiusResult radius(RadiusKind kind, const ClassParams& p, double rho, ScanOptions opts) {
    validate(p);
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "order rho must lie in [0, 1)");
    }
    require_kmax(p, opts.kmax);
    require_valid(p, opts.kmax);
    return scan_infimum(p, opts, [&](int k) {
        double factor = 1.0 - rho;
        switch (kind) {
            case RadiusKind::close_to_convex: factor /= k; break;
            case RadiusKind::starlike: factor /= k - rho; break;
            case RadiusKind::convex: factor /= k * (k - rho); break;
        }
        return std::pow(factor * weight(k, p), 1.0 / (k - 1));
    });
}

RadiusResult bernardi_univalence_radius(const ClassParams& p, double c, ScanOptions opts) {
    validate(p);
    if (!(c > -1.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::ParameterOutOfRange, "Bernardi parameter requires c > -1");
    }
    require_kmax(p, opts.kmax);
    require_valid(p, opts.kmax);
    return scan_infimum(p, opts, [&](int k) {
        return std::pow((c + 1.0) * weight(k, p) / (k * (c + k)), 1.0 / (k - 1));
    });
}

DistortionEnvelope distortion_envelope(const ClassParams& p, int i, double r) {
    validate(p);
    if (i < 0 || i > p.n) {
        throw Error(ErrorCode::ParameterOutOfRange, "operator index i must lie in [0, n]");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "radius r must lie in [0, 1)");
    }
    require_valid(p, p.j + 1);
    const int q = p.j + 1;
    const double denominator = weight(q, p) / exponent_factor(q, i, p.mode);
    const double spread = std::pow(r, q) / denominator;
    DistortionEnvelope env;
    env.r = r;
    env.i = i;
    env.lower = r - spread;
    env.upper = r + spread;
    env.vacuous_lower = env.lower < 0.0;
    return env;
}

}  // namespace tclass
