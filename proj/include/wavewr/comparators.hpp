#pragma once

#include <cstddef>
#include <vector>

#include "wavewr/discretization.hpp"
#include "wavewr/nnwr.hpp"
#include "wavewr/record.hpp"

namespace wavewr {

struct DnwrOptions {
    double theta = 0.5;
    std::size_t max_iterations = 20;
    double tolerance = 0.0;  ///< relative, as in NnwrOptions
};

/// Dirichlet-Neumann waveform relaxation on exactly two subdomains: Dirichlet
/// solve on the left, Neumann solve on the right with the left outward flux
/// negated, then w = (1 - theta) w + theta u_2 on the interface.
template <typename Layout>
ConvergenceRecord run_dnwr(const Layout& layout, const DnwrOptions& opt, SpaceTimeTrace guess,
                           const SpaceTimeTrace& reference);

template <typename Layout>
ConvergenceRecord run_dnwr(const Layout& layout, const DnwrOptions& opt, const InitialGuess& guess);

struct SwrConfig {
    enum class Kind { classical, first_order };
    /// Overlap in grid cells; 0 is non-overlapping.
    std::size_t overlap = 0;
    Kind kind = Kind::first_order;
    double p = 0.0;
    std::size_t max_iterations = 20;
    double tolerance = 0.0;
    bool parallel = false;
};

/// Node ranges of the overlapped subdomains: subdomain i reaches ceil(n/2)
/// cells past its right interface and floor(n/2) cells past its left one.
struct OverlapRange {
    double x_lo;
    std::size_t cells;
};
std::vector<OverlapRange> overlap_ranges(const Partition& p, std::size_t overlap);

/// Schwarz waveform relaxation. The iterate is the set of traces received at
/// the artificial boundary nodes (the neighbour's field values there); they
/// are compared against the mono-domain reference at the same positions.
/// Iteration 0 uses `guess` at those positions.
template <typename Layout>
ConvergenceRecord run_swr(const Layout& layout, const SwrConfig& cfg, const InitialGuess& guess);

/// Artificial boundary positions of run_swr, in the order of its traces:
/// (right end of subdomain 0, left end of subdomain 1, right end of 1, ...).
std::vector<double> swr_boundary_positions(const Partition& p, std::size_t overlap);

}  // namespace wavewr
