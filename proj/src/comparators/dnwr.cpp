#include "wavewr/comparators.hpp"

#include "wavewr/errors.hpp"
#include "wavewr/transfer.hpp"

namespace wavewr {

template <typename Layout>
ConvergenceRecord run_dnwr(const Layout& layout, const DnwrOptions& opt, SpaceTimeTrace guess,
                           const SpaceTimeTrace& reference) {
    if (layout.subdomains() != 2) throw ValidationError("DNWR needs exactly two subdomains");
    validate_theta(opt.theta);
    ConvergenceRecord rec;
    rec.method = "dnwr";
    rec.theta = opt.theta;
    const auto g0 = layout.times(0);
    const auto g1 = layout.times(1);
    SpaceTimeTrace w = std::move(guess);
    const std::vector<SpaceTimeTrace> ref{reference};
    auto error = [&] { return interface_error(std::span<const SpaceTimeTrace>(&w, 1), ref); };
    rec.errors.push_back(error());
    rec.wall_seconds.push_back(0.0);
    const double e0 = rec.errors.front();
    if (e0 == 0.0) rec.iterations_to_tolerance = 0;
    for (std::size_t k = 1; k <= opt.max_iterations && !rec.iterations_to_tolerance; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const auto u1 = layout.solve(0, {BoundaryCondition::dirichlet(layout.physical_data(Side::left, g0, false)),
                                         BoundaryCondition::dirichlet(w)},
                                     false);
        SpaceTimeTrace flux = extract_normal_derivative(u1, Side::right, FluxStencil::scheme_consistent);
        const auto u2 = layout.solve(1, {BoundaryCondition::neumann(project_onto(-1.0 * std::move(flux), g1)),
                                         BoundaryCondition::dirichlet(layout.physical_data(Side::right, g1, false))},
                                     false);
        w = (1.0 - opt.theta) * std::move(w) + opt.theta * project_onto(Layout::side_trace(u2, Side::left), g0);
        rec.errors.push_back(error());
        rec.wall_seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        if (opt.tolerance > 0.0 && rec.errors.back() <= opt.tolerance * e0) rec.iterations_to_tolerance = k;
    }
    return rec;
}

template <typename Layout>
ConvergenceRecord run_dnwr(const Layout& layout, const DnwrOptions& opt, const InitialGuess& guess) {
    if (layout.subdomains() != 2) throw ValidationError("DNWR needs exactly two subdomains");
    const auto mono = layout.solve_mono();
    auto guesses = make_initial_guesses(layout, guess);
    const auto ref = interface_reference(layout, mono);
    ConvergenceRecord rec = run_dnwr(layout, opt, std::move(guesses.front()), ref.front());
    if (guess.kind == InitialGuess::Kind::random) rec.seed = guess.seed;
    return rec;
}

template ConvergenceRecord run_dnwr<ChainLayout1D>(const ChainLayout1D&, const DnwrOptions&, SpaceTimeTrace,
                                                   const SpaceTimeTrace&);
template ConvergenceRecord run_dnwr<ChainLayout2D>(const ChainLayout2D&, const DnwrOptions&, SpaceTimeTrace,
                                                   const SpaceTimeTrace&);
template ConvergenceRecord run_dnwr<ChainLayout1D>(const ChainLayout1D&, const DnwrOptions&, const InitialGuess&);
template ConvergenceRecord run_dnwr<ChainLayout2D>(const ChainLayout2D&, const DnwrOptions&, const InitialGuess&);

}  // namespace wavewr
