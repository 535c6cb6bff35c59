#pragma once

#include <cstddef>
#include <vector>

#include "wavewr/partition.hpp"
#include "wavewr/problem.hpp"
#include "wavewr/stepper.hpp"
#include "wavewr/trace.hpp"

namespace wavewr {

/// Binds a 1D problem to a partition: per-subdomain setups with the true data
/// and with homogeneous data (for correction solves), plus the mono-domain
/// reference discretization. Immutable after construction.
class ChainLayout1D {
public:
    using Field = SubdomainField1D;

    ChainLayout1D(WaveProblem1D problem, Partition partition);

    const WaveProblem1D& problem() const { return problem_; }
    const Partition& partition() const { return partition_; }
    std::size_t subdomains() const { return partition_.subdomains(); }
    std::size_t width() const { return 1; }
    std::vector<double> times(std::size_t s) const { return partition_.time[s].times(); }

    const SubdomainSetup1D& setup(std::size_t s, bool homogeneous) const {
        return homogeneous ? homogeneous_[s] : full_[s];
    }
    /// Setup for an arbitrary node range [x_lo, x_lo + cells dx]; nodes on the
    /// range ends take the one-sided speed toward the range interior.
    SubdomainSetup1D make_setup(double x_lo, std::size_t cells, double dx, const TimeGrid& time,
                                bool homogeneous) const;

    Field solve(std::size_t s, const BoundarySpec& bc, bool homogeneous) const;

    /// Physical Dirichlet data at x_lo (Side::left) or x_hi on grid `times`.
    SpaceTimeTrace physical_data(Side side, const std::vector<double>& times, bool homogeneous) const;
    SpaceTimeTrace zero_trace(const std::vector<double>& times) const { return SpaceTimeTrace(times, 1); }
    /// Initial displacement at interface position x (per y-node in 2D).
    std::vector<double> initial_at(double x) const;
    /// Dirichlet values the y-sides impose at interface position x; empty in 1D.
    std::vector<std::size_t> pinned_entries() const { return {}; }
    double pinned_value(double, std::size_t, double) const { return 0.0; }

    static SpaceTimeTrace side_trace(const Field& f, Side side);
    static SpaceTimeTrace node_trace(const Field& f, std::size_t j) { return f.node_trace(j); }
    static std::size_t x_nodes(const Field& f) { return f.grid().nodes(); }

    /// Single-domain solve on the finest time grid; requires a uniform dx.
    Field solve_mono(bool homogeneous = false) const;
    /// Mono-field time series at coordinate x.
    static SpaceTimeTrace trace_at(const Field& mono, double x);

private:
    WaveProblem1D problem_;
    Partition partition_;
    std::vector<SubdomainSetup1D> full_;
    std::vector<SubdomainSetup1D> homogeneous_;
};

class ChainLayout2D {
public:
    using Field = SubdomainField2D;

    ChainLayout2D(WaveProblem2D problem, Partition partition);

    const WaveProblem2D& problem() const { return problem_; }
    const Partition& partition() const { return partition_; }
    std::size_t subdomains() const { return partition_.subdomains(); }
    std::size_t width() const { return partition_.y_cells + 1; }
    std::vector<double> times(std::size_t s) const { return partition_.time[s].times(); }
    Grid1D y_grid() const { return Grid1D{partition_.y_lo, partition_.dy, partition_.y_cells}; }

    const SubdomainSetup2D& setup(std::size_t s, bool homogeneous) const {
        return homogeneous ? homogeneous_[s] : full_[s];
    }
    SubdomainSetup2D make_setup(double x_lo, std::size_t cells, double dx, const TimeGrid& time,
                                bool homogeneous) const;

    Field solve(std::size_t s, const BoundarySpec& bc, bool homogeneous) const;

    SpaceTimeTrace physical_data(Side side, const std::vector<double>& times, bool homogeneous) const;
    SpaceTimeTrace zero_trace(const std::vector<double>& times) const { return SpaceTimeTrace(times, width()); }
    std::vector<double> initial_at(double x) const;
    /// Entries of an interface trace fixed by the y-side Dirichlet data.
    std::vector<std::size_t> pinned_entries() const { return {0, partition_.y_cells}; }
    double pinned_value(double x, std::size_t l, double t) const;

    static SpaceTimeTrace side_trace(const Field& f, Side side);
    static SpaceTimeTrace node_trace(const Field& f, std::size_t i) { return f.column_trace(i); }
    static std::size_t x_nodes(const Field& f) { return f.grid().x.nodes(); }

    Field solve_mono(bool homogeneous = false) const;
    static SpaceTimeTrace trace_at(const Field& mono, double x);

private:
    WaveProblem2D problem_;
    Partition partition_;
    std::vector<SubdomainSetup2D> full_;
    std::vector<SubdomainSetup2D> homogeneous_;
};

/// Node index of coordinate x on a grid; throws when x is not a node.
std::size_t node_index(const Grid1D& g, double x);

}  // namespace wavewr
