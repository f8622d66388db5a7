#include "h4/minkowski.hpp"

#include <cmath>

#include "h4/errors.hpp"

namespace h4 {

HyperboloidPair::HyperboloidPair(double t, double s) : t_half(t), s_radius(s) {
    if (!(t > 0.0)) throw DomainError("HyperboloidPair: T must be positive");
    if (!(s >= 0.0 && s <= t))
        throw DomainError("HyperboloidPair: S must satisfy 0 <= S <= T");
}

std::pair<double, double> mink_intersection_residuals(const HyperboloidPair& h, const Event4& e) {
    const double r2 = e.x1 * e.x1 + e.x2 * e.x2 + e.x3 * e.x3;
    const double first = h.s_radius * h.s_radius - (h.t_half * h.t_half + e.x0 * e.x0 - r2);
    return {first, 2.0 * h.t_half * e.x0};
}

double mink_distance(const HyperboloidPair& h) {
    return std::sqrt((h.t_half - h.s_radius) * (h.t_half + h.s_radius));
}

double mink_distance_euclid(const Event4& e) {
    return std::sqrt(e.x1 * e.x1 + e.x2 * e.x2 + e.x3 * e.x3);
}

double mink_distance_from_offset(double t_half, double x1, double x2, double x3) {
    if (!(t_half > 0.0)) throw DomainError("mink_distance_from_offset: T must be positive");
    const double r2 = x1 * x1 + x2 * x2 + x3 * x3;
    const double s2 = t_half * t_half - r2; // surface crossing sits at x0 = 0
    if (s2 < 0.0)
        throw OutsideDomainError("mink_distance_from_offset: offset beyond the anchor scale");
    return std::sqrt(t_half * t_half - s2);
}

double mink_velocity_modulus(const Velocity3& v) {
    return std::sqrt(v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3);
}

double mink_interval_factor(const Velocity3& v) {
    const double m2 = v.v1 * v.v1 + v.v2 * v.v2 + v.v3 * v.v3;
    if (m2 > 1.0) throw SuperluminalError("mink_interval_factor: |v| exceeds 1");
    return std::sqrt(1.0 - m2);
}

double mink_interval_from_velocity(double dt, const Velocity3& v) {
    if (!(dt > 0.0)) throw DomainError("mink_interval_from_velocity: dt must be positive");
    return dt * mink_interval_factor(v);
}

} // namespace h4
