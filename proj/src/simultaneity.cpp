#include "h4/simultaneity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "h4/errors.hpp"

namespace h4 {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Real root of x^3 + a*x + q with a > 0 (single real root, negative
// discriminant). Cardano with the large-magnitude cube taken first so the
// q ~ 0 regime never cancels, then one Newton polish.
double depressed_cubic_root(double a, double q) {
    if (q == 0.0) return 0.0;
    const double delta = std::sqrt(q * q / 4.0 + a * a * a / 27.0);
    const double u = std::cbrt(-q / 2.0 - std::copysign(delta, q));
    double x = u - a / (3.0 * u);
    x -= ((x * x + a) * x + q) / (3.0 * x * x + a);
    return x;
}

struct OffsetTerms {
    double r2;  // x1^2 + x2^2 + x3^2
    double p;   // x1*x2*x3
    double p4;  // x1^4+x2^4+x3^4 - 2(x1^2x2^2 + x1^2x3^2 + x2^2x3^2)
};

OffsetTerms offset_terms(const SpatialOffset& d) {
    const double s1 = d.x1 * d.x1, s2 = d.x2 * d.x2, s3 = d.x3 * d.x3;
    return {s1 + s2 + s3, d.x1 * d.x2 * d.x3,
            s1 * s1 + s2 * s2 + s3 * s3 - 2.0 * (s1 * s2 + s1 * s3 + s2 * s3)};
}

} // namespace

ObserverScale::ObserverScale(double t) : t_half(t) {
    if (!(t > 0.0)) throw DomainError("ObserverScale: T must be positive");
}

const char* sample_status_name(SampleStatus s) {
    switch (s) {
    case SampleStatus::Ok: return "ok";
    case SampleStatus::OutsideDomain: return "outside_domain";
    default: return "outside_causal";
    }
}

double simultaneity_x0(const ObserverScale& scale, const SpatialOffset& d) {
    const double t2 = scale.t_half * scale.t_half;
    const OffsetTerms ot = offset_terms(d);
    if (!(ot.r2 < t2))
        throw OutsideDomainError("simultaneity_x0: offset not inside the open ball r < T");
    return depressed_cubic_root(t2 - ot.r2, 2.0 * ot.p);
}

double s4_on_surface(const ObserverScale& scale, const SpatialOffset& d, double x0) {
    const double t2 = scale.t_half * scale.t_half;
    const OffsetTerms ot = offset_terms(d);
    const double x02 = x0 * x0;
    return x02 * x02 + 2.0 * x02 * (3.0 * t2 - ot.r2) + 8.0 * x0 * ot.p + t2 * t2 -
           2.0 * t2 * ot.r2 + ot.p4;
}

SurfacePoint solve_offset(const ObserverScale& scale, const SpatialOffset& d,
                          double boundary_tol) noexcept {
    const double t2 = scale.t_half * scale.t_half;
    const OffsetTerms ot = offset_terms(d);
    if (!(ot.r2 < t2)) return {kNan, kNan, kNan, SampleStatus::OutsideDomain};

    const double x0 = depressed_cubic_root(t2 - ot.r2, 2.0 * ot.p);
    const double x02 = x0 * x0;
    double s4 = x02 * x02 + 2.0 * x02 * (3.0 * t2 - ot.r2) + 8.0 * x0 * ot.p + t2 * t2 -
                2.0 * t2 * ot.r2 + ot.p4;
    // Complement T^4 - S^4 evaluated expanded; this is what keeps l accurate
    // when S^4 approaches T^4 (small offsets), where the direct subtraction
    // would cancel.
    double u4 = 2.0 * t2 * ot.r2 - ot.p4 - x02 * x02 - 2.0 * x02 * (3.0 * t2 - ot.r2) -
                8.0 * x0 * ot.p;

    const double band = boundary_tol * std::max(t2 * t2, 1.0);
    if (s4 < -band || u4 < -band) return {x0, s4, kNan, SampleStatus::OutsideCausal};
    s4 = std::max(s4, 0.0); // exact cone contact, within the boundary band
    u4 = std::max(u4, 0.0);
    const double l = std::sqrt(u4 / (t2 + std::sqrt(s4)));
    return {x0, s4, l, SampleStatus::Ok};
}

double distance_h4(const ObserverScale& scale, const SpatialOffset& d) {
    const SurfacePoint p = solve_offset(scale, d);
    switch (p.status) {
    case SampleStatus::OutsideDomain:
        throw OutsideDomainError("distance_h4: offset not inside the open ball r < T");
    case SampleStatus::OutsideCausal:
        throw OutsideCausalRegionError("distance_h4: surface interval outside [0, T^4]");
    case SampleStatus::Ok:
        break;
    }
    return p.l;
}

std::pair<double, double> distance_asymmetry(const ObserverScale& scale, const SpatialOffset& d) {
    return {distance_h4(scale, d), distance_h4(scale, {-d.x1, -d.x2, -d.x3})};
}

} // namespace h4
