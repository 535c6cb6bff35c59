#pragma once

#include <cstddef>
#include <vector>

#include "wavewr/problem.hpp"

namespace wavewr {

/// Uniform time grid on [0, T]. The last sample is exactly T.
struct TimeGrid {
    double T = 1.0;
    std::size_t steps = 1;

    /// Smallest step count whose step does not exceed `dt`.
    static TimeGrid from_step(double T, double dt);

    double dt() const { return T / static_cast<double>(steps); }
    double time(std::size_t m) const;
    std::size_t size() const { return steps + 1; }
    std::vector<double> times() const;

    bool operator==(const TimeGrid&) const = default;
};

/// Discretization parameters handed to build_partition.
struct GridSteps {
    double dx = 0.0;
    /// Either one step shared by all subdomains or one per subdomain.
    std::vector<double> dt;
    /// Requested y step for strips; adjusted so it divides the y extent.
    double dy = 0.0;
};

/// Non-overlapping decomposition into a chain of intervals (1D) or strips (2D).
struct Partition {
    std::vector<double> interfaces;  ///< x_0 < x_1 < ... < x_N, physical ends included
    std::vector<double> widths;      ///< h_i = x_i - x_{i-1}
    double h_min = 0.0;
    std::vector<double> speed;       ///< largest wave speed on each subdomain
    std::vector<double> dx;          ///< spatial step per subdomain
    std::vector<std::size_t> cells;  ///< h_i / dx_i
    std::vector<TimeGrid> time;      ///< per-subdomain time grid

    // Strip data; y_cells == 0 for 1D partitions.
    double y_lo = 0.0;
    double y_hi = 0.0;
    double dy = 0.0;
    std::size_t y_cells = 0;

    std::size_t subdomains() const { return widths.size(); }
    std::size_t interior_interfaces() const { return widths.empty() ? 0 : widths.size() - 1; }
    bool is_2d() const { return y_cells > 0; }
    double x_lo() const { return interfaces.front(); }
    double x_hi() const { return interfaces.back(); }
    /// True when every subdomain shares the same dx.
    bool uniform_dx() const;
    /// Grid with the most time steps (the finest).
    TimeGrid finest_time() const;
};

Partition build_partition(const WaveProblem1D& problem, const std::vector<double>& interior_interfaces,
                          const GridSteps& steps);

Partition build_partition(const WaveProblem2D& problem, const std::vector<double>& interior_interfaces,
                          const GridSteps& steps);

}  // namespace wavewr
