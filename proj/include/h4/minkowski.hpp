#pragma once

#include <utility>

#include "h4/algebra.hpp"

namespace h4 {

struct Velocity3 {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
};

/// Two hyperboloids of radius S centered at (-T,0,0,0) and (T,0,0,0).
/// Valid only for 0 <= S <= T (they intersect nowhere otherwise).
struct HyperboloidPair {
    HyperboloidPair(double t_half, double s_radius);

    double t_half;
    double s_radius;
};

/// Residuals of an event against the two-center intersection system:
/// (S^2 - (T^2 + x0^2 - x1^2 - x2^2 - x3^2), 2*T*x0). Both vanish exactly on
/// the intersection sphere.
std::pair<double, double> mink_intersection_residuals(const HyperboloidPair& h, const Event4& e);

/// l = sqrt(T^2 - S^2), the Euclidean radius of the intersection sphere.
double mink_distance(const HyperboloidPair& h);

/// l = sqrt(x1^2 + x2^2 + x3^2).
double mink_distance_euclid(const Event4& e);

/// Two-center construction run end to end with the Minkowski polynomials:
/// the x0 = 0 plane is the simultaneity surface, S^2 = T^2 - r^2, and the
/// distance collapses to the Euclidean radius. Requires r <= T.
double mink_distance_from_offset(double t_half, double x1, double x2, double x3);

/// |v| = sqrt(v1^2 + v2^2 + v3^2).
double mink_velocity_modulus(const Velocity3& v);

/// sqrt(1 - v^2) for |v| <= 1.
double mink_interval_factor(const Velocity3& v);

/// S21 = dt * sqrt(1 - v^2) for dt > 0, |v| <= 1.
double mink_interval_from_velocity(double dt, const Velocity3& v);

} // namespace h4
