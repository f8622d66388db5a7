#pragma once

#include <array>

namespace h4 {

/// Event in the orthonormal-analog basis (x0 time-like, x1..x3 space-like).
struct Event4 {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

/// Event in the isotropic basis; the quartic interval is the plain product
/// xi1*xi2*xi3*xi4 here.
struct IsotropicEvent4 {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
    double xi4 = 0.0;
};

enum class ConeRegion {
    InsideFuture, // all isotropic components strictly positive
    OnBoundary,   // smallest component within tolerance of zero
    Outside,
};

/// Basis change matrix between the two bases. Involutive up to scale:
/// A*A = 4*I, so the inverse is A/4. Stored as integers; conversions below
/// use the explicit signed sums instead of a generic matrix product.
inline constexpr std::array<std::array<int, 4>, 4> kBasisMatrix = {{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
}};

/// xi = A * x.
IsotropicEvent4 to_isotropic(const Event4& e);

/// x = A * xi / 4.
Event4 from_isotropic(const IsotropicEvent4& xi);

/// Classifies against the future cone with an absolute tolerance of
/// tol_scale (default 1e-12) scaled by max|xi_i|. The zero vector classifies
/// OnBoundary.
ConeRegion cone_classify(const IsotropicEvent4& xi, double tol_scale = 1e-12);

const char* cone_region_name(ConeRegion r);

} // namespace h4
