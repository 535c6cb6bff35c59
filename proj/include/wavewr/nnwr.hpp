#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <vector>

#include "wavewr/discretization.hpp"
#include "wavewr/errors.hpp"
#include "wavewr/record.hpp"
#include "wavewr/transfer.hpp"

namespace wavewr {

/// Interface Dirichlet traces w_i^k, one per interior interface. Interface i
/// (between subdomains i and i+1, 0-based) lives on subdomain i's time grid.
struct NnwrState {
    std::size_t k = 0;
    std::vector<SpaceTimeTrace> traces;
    double theta = 0.25;
};

struct NnwrOptions {
    double theta = 0.25;
    std::size_t max_iterations = 20;
    /// Stop once error(k) <= tolerance * error(0); 0 runs all iterations.
    double tolerance = 0.0;
    bool parallel = false;
    FluxStencil stencil = FluxStencil::scheme_consistent;
    /// Keep every iterate's traces in NnwrResult::history.
    bool keep_history = false;
};

struct NnwrResult {
    ConvergenceRecord record;
    std::vector<SpaceTimeTrace> traces;
    std::vector<std::vector<SpaceTimeTrace>> history;
};

void validate_theta(double theta);

/// Initial interface traces.
struct InitialGuess {
    enum class Kind { zero, poly_t2, t_sin_y, random, function };
    Kind kind = Kind::poly_t2;
    std::uint64_t seed = 0;
    std::function<double(double y, double t)> fn;

    static InitialGuess zero() { return {Kind::zero, 0, {}}; }
    static InitialGuess poly_t2() { return {Kind::poly_t2, 0, {}}; }
    static InitialGuess t_sin_y() { return {Kind::t_sin_y, 0, {}}; }
    static InitialGuess random(std::uint64_t seed) { return {Kind::random, seed, {}}; }
    static InitialGuess function(std::function<double(double y, double t)> f) {
        return {Kind::function, 0, std::move(f)};
    }
};

/// Guess traces at coordinates `xs` on grids `grids`. Random guesses draw
/// uniform [-1, 1] samples from a seeded mt19937_64; their t = 0 sample is set
/// to the initial displacement so that it is compatible with the problem. In 2D
/// the y-side entries are always set to the y-side Dirichlet data.
template <typename Layout>
std::vector<SpaceTimeTrace> make_guesses(const Layout& layout, const InitialGuess& guess,
                                         const std::vector<double>& xs,
                                         const std::vector<std::vector<double>>& grids);

/// Guesses on the NNWR interfaces.
template <typename Layout>
std::vector<SpaceTimeTrace> make_initial_guesses(const Layout& layout, const InitialGuess& guess) {
    const Partition& p = layout.partition();
    std::vector<double> xs;
    std::vector<std::vector<double>> grids;
    for (std::size_t i = 0; i + 1 < p.subdomains(); ++i) {
        xs.push_back(p.interfaces[i + 1]);
        grids.push_back(layout.times(i));
    }
    return make_guesses(layout, guess, xs, grids);
}

/// Mono-domain reference restricted to position x and projected onto `grid`.
template <typename Layout>
SpaceTimeTrace reference_at(const typename Layout::Field& mono, double x, const std::vector<double>& grid) {
    return project_onto(Layout::trace_at(mono, x), grid);
}

/// Reference traces on the NNWR interfaces (left-subdomain carrier grids).
template <typename Layout>
std::vector<SpaceTimeTrace> interface_reference(const Layout& layout, const typename Layout::Field& mono) {
    const Partition& p = layout.partition();
    std::vector<SpaceTimeTrace> ref;
    for (std::size_t i = 0; i + 1 < p.subdomains(); ++i) {
        ref.push_back(reference_at<Layout>(mono, p.interfaces[i + 1], layout.times(i)));
    }
    return ref;
}

namespace detail {

template <typename Fn>
auto map_subdomains(std::size_t n, bool parallel, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out;
    out.reserve(n);
    if (!parallel || n < 2) {
        for (std::size_t s = 0; s < n; ++s) out.push_back(fn(s));
        return out;
    }
    std::vector<std::future<R>> jobs;
    jobs.reserve(n);
    for (std::size_t s = 0; s < n; ++s) jobs.push_back(std::async(std::launch::async, fn, s));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace detail

/// Dirichlet solves with the current interface traces and the true data.
template <typename Layout>
std::vector<typename Layout::Field> dirichlet_step(const NnwrState& state, const Layout& layout,
                                                   bool parallel = false, bool homogeneous = false) {
    const std::size_t n = layout.subdomains();
    if (n < 2) throw ValidationError("NNWR needs at least two subdomains");
    if (state.traces.size() != n - 1) throw ValidationError("one trace per interior interface expected");
    return detail::map_subdomains(n, parallel, [&](std::size_t s) {
        const auto grid = layout.times(s);
        BoundarySpec bc{
            BoundaryCondition::dirichlet(s == 0 ? layout.physical_data(Side::left, grid, homogeneous)
                                                : project_onto(state.traces[s - 1], grid)),
            BoundaryCondition::dirichlet(s + 1 == n ? layout.physical_data(Side::right, grid, homogeneous)
                                                    : project_onto(state.traces[s], grid)),
        };
        return layout.solve(s, bc, homogeneous);
    });
}

/// Interface flux sums (outward fluxes of both neighbours), one per interior
/// interface, each returned on both adjacent grids: {on left grid, on right grid}.
template <typename Layout>
std::vector<std::pair<SpaceTimeTrace, SpaceTimeTrace>> interface_flux_sums(
    const std::vector<typename Layout::Field>& fields, const Layout& layout, FluxStencil stencil) {
    std::vector<std::pair<SpaceTimeTrace, SpaceTimeTrace>> out;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        const SpaceTimeTrace from_left = extract_normal_derivative(fields[i], Side::right, stencil);
        const SpaceTimeTrace from_right = extract_normal_derivative(fields[i + 1], Side::left, stencil);
        out.emplace_back(from_left + project_onto(from_right, layout.times(i)),
                         project_onto(from_left, layout.times(i + 1)) + from_right);
    }
    return out;
}

/// Correction solves: zero data, Neumann data from the flux jumps on interior
/// sides, homogeneous Dirichlet on physical sides.
template <typename Layout>
std::vector<typename Layout::Field> neumann_step(const std::vector<typename Layout::Field>& fields,
                                                 const Layout& layout, bool parallel = false,
                                                 FluxStencil stencil = FluxStencil::scheme_consistent) {
    const std::size_t n = layout.subdomains();
    if (fields.size() != n) throw ValidationError("one Dirichlet field per subdomain expected");
    const auto sums = interface_flux_sums(fields, layout, stencil);
    return detail::map_subdomains(n, parallel, [&](std::size_t s) {
        const auto grid = layout.times(s);
        BoundarySpec bc{
            s == 0 ? BoundaryCondition::dirichlet(layout.zero_trace(grid))
                   : BoundaryCondition::neumann(sums[s - 1].second),
            s + 1 == n ? BoundaryCondition::dirichlet(layout.zero_trace(grid))
                       : BoundaryCondition::neumann(sums[s].first),
        };
        return layout.solve(s, bc, true);
    });
}

/// w_i^k = w_i^{k-1} - theta (phi_i + phi_{i+1}) on interface i.
template <typename Layout>
NnwrState update_traces(const NnwrState& state, const std::vector<typename Layout::Field>& corrections,
                        const Layout& layout, double theta) {
    validate_theta(theta);
    if (corrections.size() != state.traces.size() + 1) {
        throw ValidationError("one correction field per subdomain expected");
    }
    NnwrState next{state.k + 1, {}, theta};
    next.traces.reserve(state.traces.size());
    for (std::size_t i = 0; i < state.traces.size(); ++i) {
        SpaceTimeTrace sum = Layout::side_trace(corrections[i], Side::right) +
                             project_onto(Layout::side_trace(corrections[i + 1], Side::left), layout.times(i));
        next.traces.push_back(state.traces[i] - theta * std::move(sum));
    }
    return next;
}

/// Full NNWR iteration, measured against `reference` traces (one per interface,
/// on the carrier grids) every iteration.
template <typename Layout>
NnwrResult run_nnwr(const Layout& layout, const NnwrOptions& opt, std::vector<SpaceTimeTrace> guesses,
                    const std::vector<SpaceTimeTrace>& reference, bool homogeneous = false) {
    validate_theta(opt.theta);
    NnwrResult res;
    res.record.method = "nnwr";
    res.record.theta = opt.theta;
    NnwrState state{0, std::move(guesses), opt.theta};
    res.record.errors.push_back(interface_error(state.traces, reference));
    res.record.wall_seconds.push_back(0.0);
    if (opt.keep_history) res.history.push_back(state.traces);
    const double e0 = res.record.errors.front();
    auto converged = [&](double e) { return e0 == 0.0 || (opt.tolerance > 0.0 && e <= opt.tolerance * e0); };
    if (converged(e0)) res.record.iterations_to_tolerance = 0;
    for (std::size_t it = 0; it < opt.max_iterations && !res.record.iterations_to_tolerance; ++it) {
        const auto start = std::chrono::steady_clock::now();
        const auto fields = dirichlet_step(state, layout, opt.parallel, homogeneous);
        const auto corrections = neumann_step(fields, layout, opt.parallel, opt.stencil);
        state = update_traces(state, corrections, layout, opt.theta);
        const double e = interface_error(state.traces, reference);
        res.record.errors.push_back(e);
        res.record.wall_seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        if (opt.keep_history) res.history.push_back(state.traces);
        if (converged(e)) res.record.iterations_to_tolerance = state.k;
    }
    res.traces = std::move(state.traces);
    return res;
}

/// Convenience overload: builds the mono-domain reference itself.
template <typename Layout>
NnwrResult run_nnwr(const Layout& layout, const NnwrOptions& opt, const InitialGuess& guess) {
    const auto mono = layout.solve_mono();
    const auto reference = interface_reference(layout, mono);
    NnwrResult r = run_nnwr(layout, opt, make_initial_guesses(layout, guess), reference);
    if (guess.kind == InitialGuess::Kind::random) r.record.seed = guess.seed;
    return r;
}

extern template std::vector<SpaceTimeTrace> make_guesses<ChainLayout1D>(const ChainLayout1D&, const InitialGuess&,
                                                                        const std::vector<double>&,
                                                                        const std::vector<std::vector<double>>&);
extern template std::vector<SpaceTimeTrace> make_guesses<ChainLayout2D>(const ChainLayout2D&, const InitialGuess&,
                                                                        const std::vector<double>&,
                                                                        const std::vector<std::vector<double>>&);

}  // namespace wavewr
