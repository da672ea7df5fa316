#include "tclass/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tclass/error.hpp"

namespace tclass {

namespace {

void validate_grid(const SampleGrid& grid) {
    double previous = 0.0;
    for (double r : grid.radii) {
        if (!(r > previous && r < 1.0)) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "grid radii must be strictly increasing inside (0, 1)");
        }
        previous = r;
    }
    for (double r : grid.real_axis_refinement) {
        if (!(r > 0.0 && r < 1.0)) {
            throw Error(ErrorCode::ParameterOutOfRange,
                        "real-axis refinement points must lie in (0, 1)");
        }
    }
    if (grid.angles < 0) {
        throw Error(ErrorCode::ParameterOutOfRange, "angle count must be >= 0");
    }
    const bool circles = !grid.radii.empty() && grid.angles > 0;
    if (!circles && grid.real_axis_refinement.empty()) {
        throw Error(ErrorCode::EmptyGrid, "sample grid has no points");
    }
}

Complex circle_point(double r, int t, int angles) {
    return std::polar(r, (2.0 * std::numbers::pi * t) / angles);
}

void validate_circle(double r, int angles) {
    if (angles == 0) throw Error(ErrorCode::EmptyGrid, "angle count is zero");
    if (angles < 8) {
        throw Error(ErrorCode::ParameterOutOfRange, "at least 8 angles are required");
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "radius r must lie in (0, 1)");
    }
}

void validate_order(double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "order rho must lie in [0, 1)");
    }
}

// Running minimum over samples in visiting order. A sample replaces the
// current worst only when strictly smaller, so ties keep the earliest point.
class MarginAccumulator {
public:
    explicit MarginAccumulator(std::vector<SampleRecord>* dump) : dump_(dump) {}

    void degenerate(Complex z) {
        ++report_.degenerate_samples;
        if (dump_) dump_->push_back({z, std::numeric_limits<double>::quiet_NaN(), true});
    }

    void sample(Complex z, double value) {
        if (value < best_) {
            best_ = value;
            report_.worst_z = z;
        }
        if (dump_) dump_->push_back({z, value, false});
    }

    MarginReport finish() const {
        if (!std::isfinite(best_)) {
            throw Error(ErrorCode::EmptyGrid, "every sample was degenerate");
        }
        MarginReport out = report_;
        out.margin = best_;
        return out;
    }

private:
    std::vector<SampleRecord>* dump_;
    MarginReport report_;
    double best_ = std::numeric_limits<double>::infinity();
};

template <typename Visit>
void for_each_circle_point(double r, int angles, Visit visit) {
    for (int t = 0; t < angles; ++t) visit(circle_point(r, t, angles));
}

bool is_degenerate(Complex denominator, Complex z) {
    return std::abs(denominator) < kDegenerateThreshold * std::abs(z);
}

}  // namespace

SampleGrid SampleGrid::default_grid() {
    return SampleGrid{{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99},
                      256,
                      {0.9, 0.99, 0.999, 0.9999}};
}

MarginReport membership_margin(const NegCoeffSeries& f, const ClassParams& p,
                               const SampleGrid& grid, std::vector<SampleRecord>* dump) {
    validate(p);
    validate_grid(grid);
    const NegCoeffSeries upper = apply_operator(f, p.n + p.m, p.mode);
    const NegCoeffSeries lower = apply_operator(f, p.n, p.mode);

    MarginAccumulator acc(dump);
    auto visit = [&](Complex z) {
        const Complex den = evaluate(lower, z);
        if (is_degenerate(den, z)) {
            acc.degenerate(z);
            return;
        }
        // 1 + (U - L)/L rather than U/L: exact for f = z and free of cancellation near 1.
        const Complex q = 1.0 + (evaluate(upper, z) - den) / den;
        acc.sample(z, q.real() - p.beta * std::abs(q - 1.0));
    };
    if (grid.angles > 0) {
        for (double r : grid.radii) for_each_circle_point(r, grid.angles, visit);
    }
    for (double r : grid.real_axis_refinement) visit(Complex(r, 0.0));
    return acc.finish();
}

MarginReport geometry_margin(RadiusKind kind, const NegCoeffSeries& f, double rho, double r,
                             int angles, std::vector<SampleRecord>* dump) {
    validate_order(rho);
    validate_circle(r, angles);
    MarginAccumulator acc(dump);
    for_each_circle_point(r, angles, [&](Complex z) {
        Complex expression;
        switch (kind) {
            case RadiusKind::close_to_convex:
                expression = evaluate(f, z, 1) - 1.0;
                break;
            case RadiusKind::starlike: {
                const Complex fz = evaluate(f, z, 0);
                if (is_degenerate(fz, z)) return acc.degenerate(z);
                expression = z * evaluate(f, z, 1) / fz - 1.0;
                break;
            }
            case RadiusKind::convex: {
                const Complex d1 = evaluate(f, z, 1);
                if (is_degenerate(d1, z)) return acc.degenerate(z);
                expression = z * evaluate(f, z, 2) / d1;
                break;
            }
        }
        acc.sample(z, (1.0 - rho) - std::abs(expression));
    });
    return acc.finish();
}

MarginReport transform_univalence_margin(const NegCoeffSeries& g, double r, int angles,
                                         std::vector<SampleRecord>* dump) {
    validate_circle(r, angles);
    MarginAccumulator acc(dump);
    for_each_circle_point(r, angles, [&](Complex z) {
        acc.sample(z, 1.0 - std::abs(evaluate(g, z, 1) - 1.0));
    });
    return acc.finish();
}

DistortionExtremes distortion_extremes(const NegCoeffSeries& f, int i, double r,
                                       OperatorMode mode, int angles) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "radius r must lie in [0, 1)");
    }
    if (angles < 1) throw Error(ErrorCode::EmptyGrid, "angle count is zero");
    const NegCoeffSeries image = apply_operator(f, i, mode);
    DistortionExtremes out{std::numeric_limits<double>::infinity(), 0.0};
    for (int t = 0; t < angles; ++t) {
        const double modulus = std::abs(evaluate(image, circle_point(r, t, angles)));
        out.min_abs = std::min(out.min_abs, modulus);
        out.max_abs = std::max(out.max_abs, modulus);
    }
    return out;
}

}  // namespace tclass
