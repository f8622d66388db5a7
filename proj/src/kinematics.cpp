#include "h4/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "h4/errors.hpp"

namespace h4 {
namespace {

double quartic_root(double p) {
    if (p == 0.0) return 0.0;
    return std::exp(std::log(p) / 4.0);
}

// 1 - W expanded: 2r^2 - 8 v1v2v3 - (v1^4+v2^4+v3^4) + 2(v1^2v2^2+v1^2v3^2+v2^2v3^2).
// No leading-1 cancellation, so it keeps full relative accuracy at small v.
double w_complement(const Velocity3& v) {
    const double s1 = v.v1 * v.v1, s2 = v.v2 * v.v2, s3 = v.v3 * v.v3;
    return 2.0 * (s1 + s2 + s3) - 8.0 * v.v1 * v.v2 * v.v3 -
           (s1 * s1 + s2 * s2 + s3 * s3) + 2.0 * (s1 * s2 + s1 * s3 + s2 * s3);
}

} // namespace

WForm w_form(const Velocity3& v) {
    WForm out;
    out.factors = {1.0 + v.v1 + v.v2 + v.v3, 1.0 + v.v1 - v.v2 - v.v3,
                   1.0 - v.v1 + v.v2 - v.v3, 1.0 - v.v1 - v.v2 + v.v3};
    out.w = out.factors[0] * out.factors[1] * out.factors[2] * out.factors[3];
    return out;
}

VelocityClass classify_velocity(const Velocity3& v) {
    const auto f = w_form(v).factors;
    const double lo = std::min(std::min(f[0], f[1]), std::min(f[2], f[3]));
    if (std::fabs(lo) <= kConeFactorTol) return VelocityClass::Boundary;
    return lo > 0.0 ? VelocityClass::Subluminal : VelocityClass::Superluminal;
}

const char* velocity_class_name(VelocityClass c) {
    switch (c) {
    case VelocityClass::Subluminal: return "subluminal";
    case VelocityClass::Boundary: return "boundary";
    default: return "superluminal";
    }
}

double velocity_modulus_h4(const Velocity3& v) {
    switch (classify_velocity(v)) {
    case VelocityClass::Superluminal:
        throw SuperluminalError("velocity_modulus_h4: velocity outside the cone");
    case VelocityClass::Boundary:
        return 1.0;
    case VelocityClass::Subluminal:
        break;
    }
    const double c = std::max(0.0, w_complement(v)); // 1 - W
    const double w = std::max(0.0, 1.0 - c);
    const double m = std::sqrt(c / (1.0 + std::sqrt(w)));
    // Subluminal inputs are strictly below 1; pin the handful of near-vertex
    // cases whose complement rounds past it.
    return std::min(m, 1.0 - std::numeric_limits<double>::epsilon() / 2.0);
}

double interval_from_velocity_h4(double dt, const Velocity3& v) {
    if (!(dt > 0.0)) throw DomainError("interval_from_velocity_h4: dt must be positive");
    const double w = w_form(v).w;
    if (w < 0.0) throw NegativeFormError("interval_from_velocity_h4: quartic form is negative");
    return dt * quartic_root(w);
}

Velocity3 velocity_from_events(const Event4& first, const Event4& second) {
    const double dt = second.x0 - first.x0;
    if (!(dt > 0.0))
        throw DegenerateError("velocity_from_events: time components must strictly increase");
    return {(second.x1 - first.x1) / dt, (second.x2 - first.x2) / dt, (second.x3 - first.x3) / dt};
}

double interval_factor_h4(const Velocity3& v) {
    const double w = w_form(v).w;
    if (w < 0.0) throw NegativeFormError("interval_factor_h4: quartic form is negative");
    return quartic_root(w);
}

double velocity_modulus_nonrel(const Velocity3& v) {
    return std::sqrt(v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3);
}

} // namespace h4
