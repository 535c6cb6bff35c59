#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fixtures.hpp"
#include "wavewr/bounds.hpp"
#include "wavewr/nnwr.hpp"

using namespace wavewr;
using namespace fixtures;
using std::numbers::pi;

namespace {

SpaceTimeTrace of_time(const std::vector<double>& grid, double (*f)(double)) {
    SpaceTimeTrace tr(grid, 1);
    for (std::size_t m = 0; m < grid.size(); ++m) tr.at(m) = f(grid[m]);
    return tr;
}

double t2(double t) { return t * t; }

// Restriction of a mono-domain field to each subdomain of a uniform-dx chain.
std::vector<SubdomainField1D> restrict_mono(const ChainLayout1D& layout, const SubdomainField1D& mono) {
    std::vector<SubdomainField1D> out;
    std::size_t offset = 0;
    for (std::size_t s = 0; s < layout.subdomains(); ++s) {
        const auto& setup = layout.setup(s, false);
        std::vector<double> v;
        for (std::size_t m = 0; m < setup.time.size(); ++m)
            for (std::size_t j = 0; j < setup.grid.nodes(); ++j) v.push_back(mono.at(m, offset + j));
        out.emplace_back(setup, std::move(v));
        offset += setup.grid.cells;
    }
    return out;
}

SubdomainField1D uniform_in_x(const SubdomainSetup1D& s, const std::function<double(double x, double t)>& f) {
    std::vector<double> v;
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t j = 0; j < s.grid.nodes(); ++j) v.push_back(f(s.grid.x(j), s.time.time(m)));
    return SubdomainField1D(s, std::move(v));
}

NnwrOptions options(double theta, std::size_t iters, double tol = 0.0) {
    NnwrOptions o;
    o.theta = theta;
    o.max_iterations = iters;
    o.tolerance = tol;
    return o;
}

}  // namespace

TEST_CASE("Dirichlet step with zero traces and zero data") {
    const auto layout = five_widths(1);
    NnwrState st{0, make_initial_guesses(layout, InitialGuess::zero()), 0.25};
    for (const auto& f : dirichlet_step(st, layout)) CHECK(max_abs(f.values()) == 0.0);
}

TEST_CASE("Dirichlet step matches a direct subdomain solve") {
    const auto layout = chain(0, 2, {1.0}, 1.5, 0.02, 0.02, forced());
    NnwrState st{0, make_initial_guesses(layout, InitialGuess::poly_t2()), 0.25};
    const auto fields = dirichlet_step(st, layout);
    const auto grid = layout.times(0);
    const auto expect = solve_subdomain_1d(
        layout.setup(0, false), {BoundaryCondition::dirichlet(layout.physical_data(Side::left, grid, false)),
                                 BoundaryCondition::dirichlet(of_time(grid, t2))});
    CHECK(fields[0].values() == expect.values());
}

TEST_CASE("Dirichlet fields carry the imposed traces") {
    const auto layout = five_widths(1, forced());
    NnwrState st{0, make_initial_guesses(layout, InitialGuess::poly_t2()), 0.25};
    const auto fields = dirichlet_step(st, layout);
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        const auto right = ChainLayout1D::side_trace(fields[i], Side::right);
        const auto left = ChainLayout1D::side_trace(fields[i + 1], Side::left);
        const auto grid = layout.times(i);
        for (std::size_t m = 1; m < grid.size(); ++m) {
            CHECK(right.at(m) == grid[m] * grid[m]);
            CHECK(left.at(m) == grid[m] * grid[m]);
        }
    }
}

TEST_CASE("Neumann step on mono-domain restrictions vanishes") {
    const auto layout = five_widths(2, forced());
    const auto fields = restrict_mono(layout, layout.solve_mono());
    for (const auto& [l, r] : interface_flux_sums(fields, layout, FluxStencil::scheme_consistent)) {
        CHECK(l.max_abs() <= 1e-10);
        CHECK(r.max_abs() <= 1e-10);
    }
    for (const auto& phi : neumann_step(fields, layout)) CHECK(max_abs(phi.values()) <= 1e-9);
}

TEST_CASE("Neumann step of zero fields is zero") {
    const auto layout = five_widths(1);
    std::vector<SubdomainField1D> zeros;
    for (std::size_t s = 0; s < layout.subdomains(); ++s)
        zeros.push_back(uniform_in_x(layout.setup(s, true), [](double, double) { return 0.0; }));
    for (const auto& phi : neumann_step(zeros, layout)) CHECK(max_abs(phi.values()) == 0.0);
}

TEST_CASE("antisymmetric fields double the one-sided flux") {
    const auto layout = chain(-1, 1, {0.0}, 0.5, 0.05, 0.05);
    std::vector<SubdomainField1D> f{uniform_in_x(layout.setup(0, true), [](double x, double) { return x; }),
                                    uniform_in_x(layout.setup(1, true), [](double x, double) { return -x; })};
    const auto one = extract_normal_derivative(f[0], Side::right);
    const auto sums = interface_flux_sums(f, layout, FluxStencil::one_sided);
    for (std::size_t m = 0; m < one.samples(); ++m) {
        CHECK(one.at(m) == doctest::Approx(1.0));
        CHECK(sums[0].first.at(m) == doctest::Approx(2.0 * one.at(m)));
    }
}

TEST_CASE("trace update arithmetic") {
    const auto layout = chain(0, 2, {1.0}, 1, 0.05, 0.05);
    const auto grid = layout.times(0);
    NnwrState st{3, {of_time(grid, t2)}, 0.25};
    auto phis = [&](double scale) {
        return std::vector<SubdomainField1D>{
            uniform_in_x(layout.setup(0, true), [=](double, double t) { return scale * t * t; }),
            uniform_in_x(layout.setup(1, true), [=](double, double t) { return scale * t * t; })};
    };
    const auto same = update_traces(st, phis(0.0), layout, 0.25);
    CHECK(same.k == 4);
    CHECK(same.traces[0].values() == st.traces[0].values());
    CHECK(update_traces(st, phis(2.0), layout, 0.25).traces[0].max_abs() == 0.0);
    CHECK(update_traces(st, phis(0.5), layout, 1.0).traces[0].max_abs() == 0.0);
    CHECK_THROWS_AS(update_traces(st, phis(1.0), layout, 0.0), ValidationError);
    CHECK_THROWS_AS(update_traces(st, phis(1.0), layout, 1.5), ValidationError);
}

TEST_CASE("reference guess is a fixed point") {
    const auto layout = five_widths(2, forced());
    const auto mono = layout.solve_mono();
    const auto ref = interface_reference(layout, mono);
    const auto r = run_nnwr(layout, options(0.25, 10, 1e-9), ref, ref);
    CHECK(r.record.errors.size() == 1);
    CHECK(r.record.errors[0] == 0.0);
    CHECK(r.record.iterations_to_tolerance == std::optional<std::size_t>(0));

    // One forced sweep leaves the reference unchanged up to flux tolerance.
    NnwrState st{0, ref, 0.25};
    const auto next = update_traces(st, neumann_step(dirichlet_step(st, layout), layout), layout, 0.25);
    CHECK(interface_error(next.traces, ref) <= 1e-9);
}

TEST_CASE("finite-step convergence on the five-width chain") {
    {
        const auto r = run_nnwr(five_widths(1), options(0.25, 4), InitialGuess::poly_t2());
        CHECK(r.record.errors[0] > 0.5);
        CHECK(r.record.errors[2] <= 1e-9 * r.record.errors[0]);
    }
    {
        const auto r = run_nnwr(five_widths(8), options(0.25, 10), InitialGuess::poly_t2());
        CHECK(r.record.errors[9] <= 1e-9 * r.record.errors[0]);
    }
}

TEST_CASE("finite-step property for several windows") {
    for (double T : {0.5, 1.5, 2.7, 4.0}) {
        CAPTURE(T);
        const auto layout = five_widths(T);
        const auto k = static_cast<std::size_t>(theoretical_iterations(BoundMethod::nnwr_multi_1d, T, 0.5, 1));
        const auto r = run_nnwr(layout, options(0.25, k), InitialGuess::random(3));
        REQUIRE(r.record.errors.size() == k + 1);
        CHECK(r.record.errors[k] <= 1e-8 * r.record.errors[0]);
    }
}

TEST_CASE("error equations reproduce the full-data iterates") {
    const auto layout = chain(0, 3, {0.8, 2.0}, 2, 0.04, 0.04, forced());
    const auto mono = layout.solve_mono();
    const auto ref = interface_reference(layout, mono);
    const auto guess = make_initial_guesses(layout, InitialGuess::random(9));
    std::vector<SpaceTimeTrace> shifted;
    std::vector<SpaceTimeTrace> zeros;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        shifted.push_back(guess[i] - ref[i]);
        zeros.push_back(SpaceTimeTrace(ref[i].time_grid(), 1));
    }
    auto opt = options(0.3, 4);
    opt.keep_history = true;
    const auto full = run_nnwr(layout, opt, guess, ref);
    const auto err = run_nnwr(layout, opt, shifted, zeros, true);
    for (std::size_t k = 0; k < full.history.size(); ++k)
        for (std::size_t i = 0; i < ref.size(); ++i)
            CHECK((full.history[k][i] - ref[i] - err.history[k][i]).max_abs() <= 1e-11);
}

TEST_CASE("iteration count is independent of N at fixed h/T") {
    std::vector<std::size_t> counts;
    for (int n : {2, 4, 8}) {
        const double h = 4.0 / n;
        std::vector<double> cuts;
        for (int i = 1; i < n; ++i) cuts.push_back(i * h);
        const auto layout = chain(0, 4, cuts, 2 * h, 0.02, 0.02);
        const auto r = run_nnwr(layout, options(0.25, 10, 1e-8), InitialGuess::poly_t2());
        REQUIRE(r.record.iterations_to_tolerance.has_value());
        counts.push_back(*r.record.iterations_to_tolerance);
    }
    CHECK(counts[0] == counts[1]);
    CHECK(counts[1] == counts[2]);
}

TEST_CASE("mirrored problem gives mirrored traces") {
    WaveProblem1D p;
    p.u0 = [](double x) { return x * (3 - x); };
    p.g_lo = [](double t) { return t; };
    p.g_hi = [](double t) { return t; };
    const auto layout = chain(0, 3, {1, 2}, 3, 0.05, 0.05, p);
    const auto ref = interface_reference(layout, layout.solve_mono());
    const auto grid = layout.times(0);
    SpaceTimeTrace a = of_time(grid, t2);
    SpaceTimeTrace b = of_time(grid, [](double t) { return std::cos(t); });
    auto opt = options(0.3, 5);
    opt.keep_history = true;
    const auto r1 = run_nnwr(layout, opt, {a, b}, ref);
    const auto r2 = run_nnwr(layout, opt, {b, a}, ref);
    for (std::size_t k = 0; k < r1.history.size(); ++k) {
        CHECK((r1.history[k][0] - r2.history[k][1]).max_abs() <= 1e-12);
        CHECK((r1.history[k][1] - r2.history[k][0]).max_abs() <= 1e-12);
    }
}

TEST_CASE("parallel and serial runs agree bit for bit") {
    const auto layout = five_widths(3, forced());
    auto opt = options(0.25, 4);
    const auto serial = run_nnwr(layout, opt, InitialGuess::random(1));
    opt.parallel = true;
    const auto par = run_nnwr(layout, opt, InitialGuess::random(1));
    CHECK(serial.record.errors == par.record.errors);
    CHECK(par.record.seed == std::optional<std::uint64_t>(1));
}

TEST_CASE("random guesses") {
    const auto layout = five_widths(1, forced());
    const auto a = make_initial_guesses(layout, InitialGuess::random(17));
    const auto b = make_initial_guesses(layout, InitialGuess::random(17));
    const auto c = make_initial_guesses(layout, InitialGuess::random(18));
    const auto& xs = layout.partition().interfaces;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].values() == b[i].values());
        CHECK(a[i].values() != c[i].values());
        CHECK(a[i].at(0) == doctest::Approx(layout.problem().u0(xs[i + 1])));
        for (std::size_t m = 1; m < a[i].samples(); ++m) CHECK(std::abs(a[i].at(m)) <= 1.0);
    }
}

TEST_CASE("strip guesses pin the y-sides") {
    WaveProblem2D p;
    p.g_ylo = [](double x, double t) { return x + t; };
    const auto layout = strips({0.4, 0.75}, 1, 0.05, 0.16, 0.04, p);
    const auto g = make_initial_guesses(layout, InitialGuess::random(4));
    const std::size_t ny = layout.width();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = layout.partition().interfaces[i + 1];
        for (std::size_t m = 0; m < g[i].samples(); ++m) {
            CHECK(g[i].at(m, 0) == doctest::Approx(x + g[i].time_grid()[m]));
            CHECK(g[i].at(m, ny - 1) == 0.0);
        }
    }
}

TEST_CASE("three-strip finite-step behaviour") {
    const auto layout = strips({0.4, 0.75}, 2, 0.05, 0.16, 0.04);
    CHECK(layout.partition().h_min == doctest::Approx(0.25));
    const auto r = run_nnwr(layout, options(0.25, 10), InitialGuess::t_sin_y());
    const auto& e = r.record.errors;
    REQUIRE(e.size() == 11);
    CHECK(e[0] > 0.5);
    CHECK(e[5] <= 1e-3 * e[0]);
    CHECK(e[10] <= 1e-6 * e[0]);
}

TEST_CASE("run_nnwr validation") {
    const auto layout = five_widths(1);
    CHECK_THROWS_AS(run_nnwr(layout, options(0.0, 2), InitialGuess::zero()), ValidationError);
    CHECK_THROWS_AS(run_nnwr(layout, options(1.01, 2), InitialGuess::zero()), ValidationError);
    const auto single = chain(0, 1, {}, 1, 0.1, 0.1);
    NnwrState st{0, {}, 0.25};
    CHECK_THROWS_AS(dirichlet_step(st, single), ValidationError);
}
