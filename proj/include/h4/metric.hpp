#pragma once

#include "h4/algebra.hpp"

namespace h4 {

/// Interval S together with its quartic power (the raw signed form value).
struct Interval {
    double value = 0.0;        // S, defined when fourth_power >= 0
    double fourth_power = 0.0; // S^4, signed
};

/// Exponent triple (r1, r2, r3) of the general commutative-algebra metric
/// S = xi1^a1 * xi2^a2 * xi3^a3 * xi4^a4 with a_i = (1 +- r1 +- r2 +- r3)/4.
struct ExponentWeights {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    std::array<double, 4> exponents() const {
        return {(1.0 + r1 + r2 + r3) / 4.0, (1.0 + r1 - r2 - r3) / 4.0,
                (1.0 - r1 + r2 - r3) / 4.0, (1.0 - r1 - r2 + r3) / 4.0};
    }
};

/// S = (xi1*xi2*xi3*xi4)^(1/4). Throws NegativeFormError when the product is
/// negative. The fourth root is computed as exp(ln(p)/4), with p == 0 -> 0.
double interval_h4_isotropic(const IsotropicEvent4& xi);

/// Signed quartic form in the orthonormal-analog basis, returned raw:
/// x0^4 - 2x0^2(x1^2+x2^2+x3^2) + 8x0x1x2x3
///   + x1^4+x2^4+x3^4 - 2x1^2x2^2 - 2x1^2x3^2 - 2x2^2x3^2.
double interval4_h4_orthonormal(const Event4& e);

/// General exponent family S = prod xi_i^(a_i(w)). Requires all xi_i > 0.
double interval_general(const IsotropicEvent4& xi, const ExponentWeights& w);

/// Three-component analog, S^3 = xi1*xi2*xi3 (product must be >= 0).
double interval_h3(double xi1, double xi2, double xi3);

/// Two-component analog, S^2 = xi1*xi2 (signed, returned raw).
double interval2_plane(double xi1, double xi2);

/// Minkowski quadratic x0^2 - x1^2 - x2^2 - x3^2 (signed, raw).
double interval2_minkowski(const Event4& e);

/// Minkowski quartic written expanded (not as a square of the quadratic):
/// x0^4 - 2x0^2(x1^2+x2^2+x3^2) + x1^4+x2^4+x3^4 + 2x1^2x2^2 + 2x1^2x3^2 + 2x2^2x3^2.
double interval4_minkowski(const Event4& e);

/// Pairwise symmetric form sum_{i<j} xi_i xi_j. Composed with to_isotropic it
/// equals 6*x0^2 - 2*(x1^2+x2^2+x3^2) = 2*interval2_minkowski + 4*x0^2; there
/// is no constant ratio to the Minkowski quadratic (ratio 6 on the time axis
/// only), so no rescaling is applied.
double interval2_minkowski_isotropiclike(const IsotropicEvent4& xi);

/// Convenience: signed quartic plus S when the form is nonnegative.
Interval interval_h4(const Event4& e);

} // namespace h4
