#pragma once

#include <array>

#include "h4/algebra.hpp"
#include "h4/minkowski.hpp"

namespace h4 {

/// Absolute tolerance on the four cone factors: within it a velocity counts
/// as lying on the cone face.
inline constexpr double kConeFactorTol = 1e-12;

enum class VelocityClass { Subluminal, Boundary, Superluminal };

/// The four cone factors of a velocity and their product
///   W = (1+v1+v2+v3)(1+v1-v2-v3)(1-v1+v2-v3)(1-v1-v2+v3).
/// The factors always sum to 4; W equals the quartic form of (1, v1, v2, v3)
/// and reaches 1 only at v = 0. W is direction-asymmetric: W(-v) != W(v)
/// whenever v1*v2*v3 != 0.
struct WForm {
    std::array<double, 4> factors{};
    double w = 0.0;
};

WForm w_form(const Velocity3& v);

/// Subluminal iff all four factors exceed the face tolerance; Boundary when
/// the smallest factor sits within it; Superluminal otherwise.
VelocityClass classify_velocity(const Velocity3& v);

const char* velocity_class_name(VelocityClass c);

/// v = sqrt(1 - sqrt(W)), in [0, 1). Boundary velocities return exactly 1.
/// Throws SuperluminalError beyond the cone. Internally evaluates the
/// complement 1 - W = 2r^2 - 8v1v2v3 - P4(v) so that axis inputs reproduce
/// |u| to rounding instead of losing half the mantissa near v = 0.
double velocity_modulus_h4(const Velocity3& v);

/// S21 = dt * W^(1/4) for dt > 0. Requires W >= 0 (the quartic form turns
/// positive again far outside the cone; only a sign-indefinite W is invalid).
double interval_from_velocity_h4(double dt, const Velocity3& v);

/// Coordinate velocity between two events on a world line, component-wise
/// (x2a - x1a)/(x20 - x10). Requires strictly increasing time.
Velocity3 velocity_from_events(const Event4& first, const Event4& second);

/// W^(1/4) = sqrt(1 - v^2) with v the h4 modulus; the per-unit-time interval.
double interval_factor_h4(const Velocity3& v);

/// Euclidean norm sqrt(v1^2+v2^2+v3^2), the non-relativistic comparison
/// modulus. Agrees with velocity_modulus_h4 to second order in |v|.
double velocity_modulus_nonrel(const Velocity3& v);

} // namespace h4
