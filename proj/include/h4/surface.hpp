#pragma once

#include <cstddef>
#include <vector>

#include "h4/simultaneity.hpp"

namespace h4 {

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 1;
};

/// Rectilinear sampling grid over (x1, x2, x3). Row order is x3 fastest,
/// then x2, then x1.
struct GridSpec {
    GridAxis x1;
    GridAxis x2;
    GridAxis x3;
    std::size_t node_cap = 1000000;

    std::size_t total_nodes() const;
    /// Throws ConfigError on count < 1, min > max, or total_nodes > node_cap.
    void validate() const;
};

/// Grid node coordinate along one axis (count == 1 pins it to min).
double grid_coordinate(const GridAxis& axis, int index);

struct SurfaceSample {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x0 = 0.0;
    double s4 = 0.0;
    double l = 0.0;
    SampleStatus status = SampleStatus::Ok;
};

/// Samples the simultaneity surface over the grid. Nodes violating the ball
/// or causal preconditions are emitted with their status set, never dropped,
/// so the output length always equals total_nodes(). Per-node solves are
/// independent; the parallel version partitions the index range over OpenMP
/// threads and writes by index, producing bitwise-identical output to the
/// serial reference for any thread count.
std::vector<SurfaceSample> sample_surface(const ObserverScale& scale, const GridSpec& grid,
                                          double boundary_tol = 1e-12);

/// Serial reference implementation (same per-node code path).
std::vector<SurfaceSample> sample_surface_serial(const ObserverScale& scale, const GridSpec& grid,
                                                 double boundary_tol = 1e-12);

/// Same grid walk against the Minkowski construction: the surface is the flat
/// x0 = 0 plane, S^2 = T^2 - r^2 (emitted squared in the s4 slot so meshes
/// stay column-compatible) and l is the Euclidean radius.
std::vector<SurfaceSample> sample_surface_minkowski(const ObserverScale& scale, const GridSpec& grid);

} // namespace h4
