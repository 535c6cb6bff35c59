#include <chrono>
#include <cmath>

#include "wavewr/comparators.hpp"
#include "wavewr/errors.hpp"
#include "wavewr/transfer.hpp"

namespace wavewr {

std::vector<OverlapRange> overlap_ranges(const Partition& p, std::size_t overlap) {
    const std::size_t n = p.subdomains();
    if (overlap > 0 && !p.uniform_dx()) throw ValidationError("overlapping SWR needs a uniform dx");
    const std::size_t right_ext = (overlap + 1) / 2;
    const std::size_t left_ext = overlap / 2;
    std::vector<OverlapRange> out;
    for (std::size_t s = 0; s < n; ++s) {
        const std::size_t lo = s > 0 ? left_ext : 0;
        const std::size_t hi = s + 1 < n ? right_ext : 0;
        if (s > 0 && lo > p.cells[s - 1]) throw ValidationError("overlap exceeds a neighbouring subdomain");
        if (s + 1 < n && hi > p.cells[s + 1]) throw ValidationError("overlap exceeds a neighbouring subdomain");
        out.push_back({p.interfaces[s] - static_cast<double>(lo) * p.dx[s], p.cells[s] + lo + hi});
    }
    return out;
}

std::vector<double> swr_boundary_positions(const Partition& p, std::size_t overlap) {
    const auto ranges = overlap_ranges(p, overlap);
    std::vector<double> xs;
    for (std::size_t s = 0; s + 1 < ranges.size(); ++s) {
        xs.push_back(ranges[s].x_lo + static_cast<double>(ranges[s].cells) * p.dx[s]);
        xs.push_back(ranges[s + 1].x_lo);
    }
    return xs;
}

namespace {

SubdomainField1D solve_setup(const SubdomainSetup1D& s, const BoundarySpec& bc) { return solve_subdomain_1d(s, bc); }
SubdomainField2D solve_setup(const SubdomainSetup2D& s, const BoundarySpec& bc) { return solve_subdomain_2d(s, bc); }

const Grid1D& x_grid(const SubdomainSetup1D& s) { return s.grid; }
const Grid1D& x_grid(const SubdomainSetup2D& s) { return s.grid.x; }

double speed_at(const SubdomainSetup1D& s, std::size_t j) { return s.c[j]; }
double speed_at(const SubdomainSetup2D& s, std::size_t) { return s.c; }

double v0_at(const SubdomainSetup1D& s, std::size_t j, std::size_t) { return s.v0[j]; }
double v0_at(const SubdomainSetup2D& s, std::size_t i, std::size_t l) { return s.v0[i * s.grid.y.nodes() + l]; }

// (1/c) du/dt + p u of a trace, with the differences used by the ghost-node
// imposition (initial velocity at t = 0).
template <typename Setup>
SpaceTimeTrace characteristic_part(const SpaceTimeTrace& w, const Setup& setup, std::size_t j, double c, double p) {
    const std::size_t M = w.samples() - 1;
    const double dt = setup.time.dt();
    SpaceTimeTrace out(w.time_grid(), w.width(), TraceKind::flux);
    for (std::size_t l = 0; l < w.width(); ++l) {
        for (std::size_t m = 0; m <= M; ++m) {
            double ut = 0.0;
            if (m == 0) {
                ut = v0_at(setup, j, l);
            } else if (m == M) {
                ut = (w.at(m, l) - w.at(m - 1, l)) / dt;
            } else {
                ut = (w.at(m + 1, l) - w.at(m - 1, l)) / (2.0 * dt);
            }
            out.at(m, l) = ut / c + p * w.at(m, l);
        }
    }
    return out;
}

}  // namespace

template <typename Layout>
ConvergenceRecord run_swr(const Layout& layout, const SwrConfig& cfg, const InitialGuess& guess) {
    using Field = typename Layout::Field;
    const Partition& part = layout.partition();
    const std::size_t n = part.subdomains();
    if (n < 2) throw ValidationError("SWR needs at least two subdomains");
    const bool classical = cfg.kind == SwrConfig::Kind::classical;
    if (classical && cfg.overlap == 0 && part.is_2d()) {
        throw ValidationError("classical SWR without overlap stagnates in 2D");
    }
    if (cfg.p < 0.0) throw ValidationError("first-order transmission parameter p must be >= 0");

    const auto ranges = overlap_ranges(part, cfg.overlap);
    using Setup = std::decay_t<decltype(layout.setup(0, false))>;
    std::vector<Setup> setups;
    for (std::size_t s = 0; s < n; ++s) {
        setups.push_back(layout.make_setup(ranges[s].x_lo, ranges[s].cells, part.dx[s], part.time[s], false));
    }
    const auto xs = swr_boundary_positions(part, cfg.overlap);
    // Boundary b: 2s is the right end of s (fed by s+1), 2s+1 the left end of s+1 (fed by s).
    auto receiver = [](std::size_t b) { return b / 2 + (b % 2); };
    auto sender = [](std::size_t b) { return b / 2 + 1 - (b % 2); };
    std::vector<std::vector<double>> grids;
    for (std::size_t b = 0; b < xs.size(); ++b) grids.push_back(layout.times(receiver(b)));

    const auto mono = layout.solve_mono();
    std::vector<SpaceTimeTrace> reference;
    for (std::size_t b = 0; b < xs.size(); ++b) reference.push_back(reference_at<Layout>(mono, xs[b], grids[b]));

    std::vector<SpaceTimeTrace> w = make_guesses(layout, guess, xs, grids);
    auto recv_node = [&](std::size_t b) { return b % 2 == 0 ? x_grid(setups[receiver(b)]).cells : std::size_t{0}; };
    // The t = 0 datum is known from the initial data; the exchange alone
    // cannot recover its normal-derivative part.
    auto pin_initial = [&](SpaceTimeTrace& g, std::size_t b) {
        const Setup& rs = setups[receiver(b)];
        const std::size_t j = recv_node(b);
        const double dx = x_grid(rs).dx;
        const double normal = b % 2 == 0 ? 1.0 : -1.0;
        const auto lo = layout.initial_at(xs[b] - dx);
        const auto mid = layout.initial_at(xs[b]);
        const auto hi = layout.initial_at(xs[b] + dx);
        for (std::size_t l = 0; l < g.width(); ++l) {
            g.at(0, l) = normal * (hi[l] - lo[l]) / (2.0 * dx) + v0_at(rs, j, l) / speed_at(rs, j) + cfg.p * mid[l];
        }
    };
    std::vector<SpaceTimeTrace> G(xs.size());
    if (!classical) {
        for (std::size_t b = 0; b < xs.size(); ++b) {
            const Setup& rs = setups[receiver(b)];
            const std::size_t j = recv_node(b);
            G[b] = characteristic_part(w[b], rs, j, speed_at(rs, j), cfg.p);
            pin_initial(G[b], b);
        }
    }

    ConvergenceRecord rec;
    rec.method = classical ? "swr-classical" : "swr-first-order";
    rec.theta = 0.0;
    if (guess.kind == InitialGuess::Kind::random) rec.seed = guess.seed;
    rec.errors.push_back(interface_error(w, reference));
    rec.wall_seconds.push_back(0.0);
    const double e0 = rec.errors.front();
    if (e0 == 0.0) rec.iterations_to_tolerance = 0;

    for (std::size_t k = 1; k <= cfg.max_iterations && !rec.iterations_to_tolerance; ++k) {
        const auto start = std::chrono::steady_clock::now();
        auto artificial = [&](std::size_t b) {
            return classical ? BoundaryCondition::dirichlet(w[b]) : BoundaryCondition::first_order(G[b], cfg.p);
        };
        const auto fields = detail::map_subdomains(n, cfg.parallel, [&](std::size_t s) {
            const auto grid = layout.times(s);
            BoundarySpec bc{
                s == 0 ? BoundaryCondition::dirichlet(layout.physical_data(Side::left, grid, false))
                       : artificial(2 * s - 1),
                s + 1 == n ? BoundaryCondition::dirichlet(layout.physical_data(Side::right, grid, false))
                           : artificial(2 * s),
            };
            return solve_setup(setups[s], bc);
        });
        std::vector<SpaceTimeTrace> w_next(xs.size());
        std::vector<SpaceTimeTrace> G_next(xs.size());
        for (std::size_t b = 0; b < xs.size(); ++b) {
            const std::size_t r = receiver(b);
            const std::size_t s = sender(b);
            const Field& nb = fields[s];
            const std::size_t j = node_index(x_grid(setups[s]), xs[b]);
            w_next[b] = project_onto(Layout::node_trace(nb, j), grids[b]);
            if (classical) continue;
            const int normal = b % 2 == 0 ? 1 : -1;
            const std::size_t rj = recv_node(b);
            const double c_recv = speed_at(setups[r], rj);
            SpaceTimeTrace datum;
            if (j > 0 && j < x_grid(setups[s]).cells) {
                datum = first_order_datum(nb, j, normal, c_recv, cfg.p);
            } else {
                // The sender's own boundary node: its first-order condition
                // fixes the normal derivative there, and the receiver's normal
                // is the opposite one.
                const std::size_t own = b % 2 == 0 ? 2 * s - 1 : 2 * s;
                const SpaceTimeTrace u = Layout::node_trace(nb, j);
                const double c_nb = speed_at(setups[s], j);
                const SpaceTimeTrace own_char = characteristic_part(u, setups[s], j, c_nb, cfg.p);
                const SpaceTimeTrace recv_char = characteristic_part(u, setups[s], j, c_recv, cfg.p);
                datum = own_char + recv_char - G[own];
            }
            G_next[b] = project_onto(datum, grids[b]);
            pin_initial(G_next[b], b);
        }
        w = std::move(w_next);
        if (!classical) G = std::move(G_next);
        rec.errors.push_back(interface_error(w, reference));
        rec.wall_seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        if (cfg.tolerance > 0.0 && rec.errors.back() <= cfg.tolerance * e0) rec.iterations_to_tolerance = k;
    }
    return rec;
}

template ConvergenceRecord run_swr<ChainLayout1D>(const ChainLayout1D&, const SwrConfig&, const InitialGuess&);
template ConvergenceRecord run_swr<ChainLayout2D>(const ChainLayout2D&, const SwrConfig&, const InitialGuess&);

}  // namespace wavewr
