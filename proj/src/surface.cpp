#include "h4/surface.hpp"

#include <cmath>
#include <string>

#include "h4/errors.hpp"

namespace h4 {

std::size_t GridSpec::total_nodes() const {
    return static_cast<std::size_t>(x1.count) * static_cast<std::size_t>(x2.count) *
           static_cast<std::size_t>(x3.count);
}

void GridSpec::validate() const {
    for (const GridAxis* ax : {&x1, &x2, &x3}) {
        if (ax->count < 1) throw ConfigError("grid: axis count must be >= 1");
        if (!(ax->min <= ax->max)) throw ConfigError("grid: axis range is inverted");
        if (!std::isfinite(ax->min) || !std::isfinite(ax->max))
            throw ConfigError("grid: axis range must be finite");
    }
    if (total_nodes() > node_cap)
        throw ConfigError("grid: " + std::to_string(total_nodes()) + " nodes exceed cap " +
                          std::to_string(node_cap));
}

double grid_coordinate(const GridAxis& axis, int index) {
    if (axis.count == 1) return axis.min;
    return axis.min + static_cast<double>(index) * (axis.max - axis.min) /
                          static_cast<double>(axis.count - 1);
}

namespace {

std::vector<SurfaceSample> sample_impl(const ObserverScale& scale, const GridSpec& grid,
                                       double boundary_tol, bool parallel) {
    grid.validate();
    const long long n1 = grid.x1.count, n2 = grid.x2.count, n3 = grid.x3.count;
    const long long total = n1 * n2 * n3;
    std::vector<SurfaceSample> out(static_cast<std::size_t>(total));

    // x3 fastest; each node writes only its own slot, so the schedule cannot
    // change the result.
#pragma omp parallel for schedule(static) if (parallel)
    for (long long idx = 0; idx < total; ++idx) {
        const int i3 = static_cast<int>(idx % n3);
        const int i2 = static_cast<int>((idx / n3) % n2);
        const int i1 = static_cast<int>(idx / (n3 * n2));
        SurfaceSample& s = out[static_cast<std::size_t>(idx)];
        s.x1 = grid_coordinate(grid.x1, i1);
        s.x2 = grid_coordinate(grid.x2, i2);
        s.x3 = grid_coordinate(grid.x3, i3);
        const SurfacePoint p = solve_offset(scale, {s.x1, s.x2, s.x3}, boundary_tol);
        s.x0 = p.x0;
        s.s4 = p.s4;
        s.l = p.l;
        s.status = p.status;
    }
    return out;
}

} // namespace

std::vector<SurfaceSample> sample_surface(const ObserverScale& scale, const GridSpec& grid,
                                          double boundary_tol) {
    return sample_impl(scale, grid, boundary_tol, true);
}

std::vector<SurfaceSample> sample_surface_serial(const ObserverScale& scale, const GridSpec& grid,
                                                 double boundary_tol) {
    return sample_impl(scale, grid, boundary_tol, false);
}

std::vector<SurfaceSample> sample_surface_minkowski(const ObserverScale& scale,
                                                    const GridSpec& grid) {
    grid.validate();
    const long long n1 = grid.x1.count, n2 = grid.x2.count, n3 = grid.x3.count;
    const long long total = n1 * n2 * n3;
    std::vector<SurfaceSample> out(static_cast<std::size_t>(total));
    const double t2 = scale.t_half * scale.t_half;

#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const int i3 = static_cast<int>(idx % n3);
        const int i2 = static_cast<int>((idx / n3) % n2);
        const int i1 = static_cast<int>(idx / (n3 * n2));
        SurfaceSample& s = out[static_cast<std::size_t>(idx)];
        s.x1 = grid_coordinate(grid.x1, i1);
        s.x2 = grid_coordinate(grid.x2, i2);
        s.x3 = grid_coordinate(grid.x3, i3);
        const double r2 = s.x1 * s.x1 + s.x2 * s.x2 + s.x3 * s.x3;
        if (!(r2 < t2)) {
            s.x0 = s.s4 = s.l = std::numeric_limits<double>::quiet_NaN();
            s.status = SampleStatus::OutsideDomain;
            continue;
        }
        const double s2 = t2 - r2;
        s.x0 = 0.0;
        s.s4 = s2 * s2;
        s.l = std::sqrt(r2);
        s.status = SampleStatus::Ok;
    }
    return out;
}

} // namespace h4
