#include "h4/metric.hpp"

#include <cmath>
#include <limits>

#include "h4/errors.hpp"

namespace h4 {
namespace {

// Fourth root of a nonnegative value; exact zero short-circuits the log.
double quartic_root(double p) {
    if (p == 0.0) return 0.0;
    return std::exp(std::log(p) / 4.0);
}

} // namespace

double interval_h4_isotropic(const IsotropicEvent4& xi) {
    const double p = xi.xi1 * xi.xi2 * xi.xi3 * xi.xi4;
    if (p < 0.0) throw NegativeFormError("interval_h4_isotropic: quartic form is negative");
    return quartic_root(p);
}

double interval4_h4_orthonormal(const Event4& e) {
    const double s1 = e.x1 * e.x1, s2 = e.x2 * e.x2, s3 = e.x3 * e.x3;
    const double t2 = e.x0 * e.x0;
    return t2 * t2 - 2.0 * t2 * (s1 + s2 + s3) + 8.0 * e.x0 * e.x1 * e.x2 * e.x3 + s1 * s1 +
           s2 * s2 + s3 * s3 - 2.0 * s1 * s2 - 2.0 * s1 * s3 - 2.0 * s2 * s3;
}

double interval_general(const IsotropicEvent4& xi, const ExponentWeights& w) {
    if (!(xi.xi1 > 0.0 && xi.xi2 > 0.0 && xi.xi3 > 0.0 && xi.xi4 > 0.0))
        throw DomainError("interval_general: all isotropic components must be positive");
    const auto a = w.exponents();
    return std::exp(a[0] * std::log(xi.xi1) + a[1] * std::log(xi.xi2) + a[2] * std::log(xi.xi3) +
                    a[3] * std::log(xi.xi4));
}

double interval_h3(double xi1, double xi2, double xi3) {
    const double p = xi1 * xi2 * xi3;
    if (p < 0.0) throw NegativeFormError("interval_h3: cubic form is negative");
    return std::cbrt(p);
}

double interval2_plane(double xi1, double xi2) { return xi1 * xi2; }

double interval2_minkowski(const Event4& e) {
    return e.x0 * e.x0 - e.x1 * e.x1 - e.x2 * e.x2 - e.x3 * e.x3;
}

double interval4_minkowski(const Event4& e) {
    const double s1 = e.x1 * e.x1, s2 = e.x2 * e.x2, s3 = e.x3 * e.x3;
    const double t2 = e.x0 * e.x0;
    return t2 * t2 - 2.0 * t2 * (s1 + s2 + s3) + s1 * s1 + s2 * s2 + s3 * s3 + 2.0 * s1 * s2 +
           2.0 * s1 * s3 + 2.0 * s2 * s3;
}

double interval2_minkowski_isotropiclike(const IsotropicEvent4& xi) {
    return xi.xi1 * (xi.xi2 + xi.xi3 + xi.xi4) + xi.xi2 * (xi.xi3 + xi.xi4) + xi.xi3 * xi.xi4;
}

Interval interval_h4(const Event4& e) {
    Interval out;
    out.fourth_power = interval4_h4_orthonormal(e);
    out.value = out.fourth_power >= 0.0 ? quartic_root(out.fourth_power)
                                        : std::numeric_limits<double>::quiet_NaN();
    return out;
}

} // namespace h4
