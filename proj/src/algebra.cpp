#include "h4/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace h4 {

IsotropicEvent4 to_isotropic(const Event4& e) {
    return {e.x0 + e.x1 + e.x2 + e.x3, e.x0 + e.x1 - e.x2 - e.x3,
            e.x0 - e.x1 + e.x2 - e.x3, e.x0 - e.x1 - e.x2 + e.x3};
}

Event4 from_isotropic(const IsotropicEvent4& xi) {
    return {(xi.xi1 + xi.xi2 + xi.xi3 + xi.xi4) / 4.0, (xi.xi1 + xi.xi2 - xi.xi3 - xi.xi4) / 4.0,
            (xi.xi1 - xi.xi2 + xi.xi3 - xi.xi4) / 4.0, (xi.xi1 - xi.xi2 - xi.xi3 + xi.xi4) / 4.0};
}

ConeRegion cone_classify(const IsotropicEvent4& xi, double tol_scale) {
    const double lo = std::min(std::min(xi.xi1, xi.xi2), std::min(xi.xi3, xi.xi4));
    const double scale = std::max(std::max(std::fabs(xi.xi1), std::fabs(xi.xi2)),
                                  std::max(std::fabs(xi.xi3), std::fabs(xi.xi4)));
    const double tol = tol_scale * scale;
    if (std::fabs(lo) <= tol) return ConeRegion::OnBoundary;
    return lo > 0.0 ? ConeRegion::InsideFuture : ConeRegion::Outside;
}

const char* cone_region_name(ConeRegion r) {
    switch (r) {
    case ConeRegion::InsideFuture: return "inside_future";
    case ConeRegion::OnBoundary: return "on_boundary";
    default: return "outside";
    }
}

} // namespace h4
