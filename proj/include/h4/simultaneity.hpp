#pragma once

#include <utility>

#include "h4/algebra.hpp"

namespace h4 {

/// Half-separation T of the two world-line anchor events (-T and +T on the
/// observer clock). Strictly positive.
struct ObserverScale {
    explicit ObserverScale(double t_half);
    double t_half;
};

/// Spatial offset of a parallel world line from the observer's.
struct SpatialOffset {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

enum class SampleStatus { Ok, OutsideDomain, OutsideCausal };

const char* sample_status_name(SampleStatus s);

/// One solved offset: the time x0 where the simultaneity surface crosses the
/// offset world line, the surface interval S^4 there, and the distance l.
/// x0/s4/l are NaN past the point where their status made them undefined.
struct SurfacePoint {
    double x0 = 0.0;
    double s4 = 0.0;
    double l = 0.0;
    SampleStatus status = SampleStatus::Ok;
};

/// Real root of x0^3 + (T^2 - r^2) x0 + 2 x1 x2 x3 = 0, the crossing time of
/// the simultaneity surface. Unique inside the open ball r < T (the cubic's
/// discriminant -4a^3 - 27q^2 is negative there); throws OutsideDomainError
/// beyond it. Closed-form (one cube root, no cancellation branch) plus a
/// single Newton polish; returns exactly 0 whenever x1*x2*x3 = 0.
double simultaneity_x0(const ObserverScale& scale, const SpatialOffset& d);

/// Surface interval polynomial
///   S^4 = x0^4 + 2x0^2(3T^2 - r^2) + 8x0x1x2x3 + T^4 - 2T^2r^2
///       + x1^4 + x2^4 + x3^4 - 2(x1^2x2^2 + x1^2x3^2 + x2^2x3^2),
/// i.e. the half-sum of the quartic forms taken from the two anchor events.
/// Raw polynomial value; no domain checks.
double s4_on_surface(const ObserverScale& scale, const SpatialOffset& d, double x0);

/// Non-throwing full solve; statuses instead of exceptions so grid kernels
/// can run exception-free. boundary_tol scales the |S^4| ~ 0 clamp band
/// (multiplied by max(T^4, 1)); genuinely negative or > T^4 values report
/// OutsideCausal, never clamp.
SurfacePoint solve_offset(const ObserverScale& scale, const SpatialOffset& d,
                          double boundary_tol = 1e-12) noexcept;

/// l = sqrt(T^2 - sqrt(S^4)) at the surface crossing, evaluated through the
/// complement T^4 - S^4 (expanded form) to stay exact-to-rounding on the
/// coordinate axes. Throws OutsideDomainError / OutsideCausalRegionError.
double distance_h4(const ObserverScale& scale, const SpatialOffset& d);

/// (distance_h4(d), distance_h4(-d)). The construction makes the two equal:
/// the cubic root is odd under the offset flip and the surface quartic is
/// even under the joint (x0, d) flip, so the pair is returned for inspection
/// rather than asserted unequal.
std::pair<double, double> distance_asymmetry(const ObserverScale& scale, const SpatialOffset& d);

} // namespace h4
