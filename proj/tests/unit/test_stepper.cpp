#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wavewr/errors.hpp"
#include "wavewr/stepper.hpp"

using namespace wavewr;
using std::numbers::pi;

namespace {

SubdomainSetup1D interval(double lo, std::size_t cells, double dx, double T, double dt,
                          const SpaceFunction& u0 = {}, const SpaceFunction& v0 = {}, double c = 1.0) {
    SubdomainSetup1D s;
    s.grid = Grid1D{lo, dx, cells};
    s.time = TimeGrid::from_step(T, dt);
    s.c.assign(s.grid.nodes(), c);
    for (std::size_t j = 0; j < s.grid.nodes(); ++j) {
        const double x = s.grid.x(j);
        s.u0.push_back(eval_or_zero(u0, x));
        s.v0.push_back(eval_or_zero(v0, x));
    }
    return s;
}

SpaceTimeTrace series(const TimeGrid& g, std::size_t width, const std::function<double(double, std::size_t)>& f) {
    SpaceTimeTrace tr(g.times(), width);
    for (std::size_t m = 0; m < g.size(); ++m)
        for (std::size_t l = 0; l < width; ++l) tr.at(m, l) = f(g.time(m), l);
    return tr;
}

BoundarySpec dirichlet_zero(const TimeGrid& g, std::size_t width = 1) {
    return {BoundaryCondition::dirichlet(SpaceTimeTrace(g.times(), width)),
            BoundaryCondition::dirichlet(SpaceTimeTrace(g.times(), width))};
}

SubdomainSetup2D strip(double x_lo, std::size_t nx, double dx, std::size_t ny, double T, double dt,
                       const PlaneFunction& u0) {
    SubdomainSetup2D s;
    s.grid.x = Grid1D{x_lo, dx, nx};
    s.grid.y = Grid1D{0.0, pi / static_cast<double>(ny), ny};
    s.time = TimeGrid::from_step(T, dt);
    for (std::size_t i = 0; i < s.grid.x.nodes(); ++i)
        for (std::size_t l = 0; l < s.grid.y.nodes(); ++l) {
            s.u0.push_back(eval_or_zero(u0, s.grid.x.x(i), s.grid.y.x(l)));
            s.v0.push_back(0.0);
        }
    return s;
}

}  // namespace

TEST_CASE("zero data gives a zero field") {
    const auto s = interval(0, 50, 0.02, 1, 0.02);
    const auto f = solve_subdomain_1d(s, dirichlet_zero(s.time));
    for (double v : f.values()) CHECK(v == 0.0);

    const auto s2 = strip(0, 10, 0.1, 10, 0.5, 0.05, {});
    const auto f2 = solve_subdomain_2d(s2, dirichlet_zero(s2.time, s2.grid.y.nodes()));
    for (double v : f2.values()) CHECK(v == 0.0);
}

TEST_CASE("standing wave is exact at unit Courant number") {
    const auto s = interval(0, 50, 0.02, 2, 0.02, [](double x) { return std::sin(pi * x); });
    const auto f = solve_subdomain_1d(s, dirichlet_zero(s.time));
    double err = 0;
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t j = 0; j < s.grid.nodes(); ++j)
            err = std::max(err, std::abs(f.at(m, j) - std::sin(pi * s.grid.x(j)) * std::cos(pi * s.time.time(m))));
    CHECK(err <= 1e-10);
}

TEST_CASE("homogeneous Neumann cosine mode") {
    const auto s = interval(0, 50, 0.02, 2, 0.02, [](double x) { return std::cos(pi * x); });
    const BoundarySpec bc{BoundaryCondition::neumann(SpaceTimeTrace(s.time.times(), 1)),
                          BoundaryCondition::neumann(SpaceTimeTrace(s.time.times(), 1))};
    const auto f = solve_subdomain_1d(s, bc);
    double err = 0;
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t j = 0; j < s.grid.nodes(); ++j)
            err = std::max(err, std::abs(f.at(m, j) - std::cos(pi * s.grid.x(j)) * std::cos(pi * s.time.time(m))));
    CHECK(err <= 1e-10);
}

TEST_CASE("d'Alembert translation at unit Courant number") {
    auto bump = [](double x) { return std::exp(-200.0 * (x - 2.0) * (x - 2.0)); };
    const auto s = interval(0, 200, 0.02, 1.5, 0.02, bump);
    const auto f = solve_subdomain_1d(s, dirichlet_zero(s.time));
    double err = 0;
    for (std::size_t m = 0; m < s.time.size(); ++m) {
        const double t = s.time.time(m);
        for (std::size_t j = 0; j < s.grid.nodes(); ++j) {
            const double x = s.grid.x(j);
            err = std::max(err, std::abs(f.at(m, j) - 0.5 * (bump(x - t) + bump(x + t))));
        }
    }
    CHECK(err <= 1e-10);
}

TEST_CASE("Dirichlet sides match the imposed data") {
    const auto s = interval(0, 25, 0.04, 1, 0.04);
    const BoundarySpec bc{BoundaryCondition::dirichlet(series(s.time, 1, [](double t, std::size_t) { return t * t; })),
                          BoundaryCondition::dirichlet(series(s.time, 1, [](double t, std::size_t) { return std::sin(t); }))};
    const auto f = solve_subdomain_1d(s, bc);
    for (std::size_t m = 1; m < s.time.size(); ++m) {
        const double t = s.time.time(m);
        CHECK(f.at(m, 0) == t * t);
        CHECK(f.at(m, s.grid.cells) == std::sin(t));
    }
}

TEST_CASE("discrete energy is conserved below unit Courant number") {
    const double dx = 0.02, dt = 0.016;
    const auto s = interval(0, 50, dx, 3, dt, [](double x) { return x * (1 - x) * std::exp(x); },
                            [](double x) { return std::sin(3 * pi * x); });
    const auto f = solve_subdomain_1d(s, dirichlet_zero(s.time));
    const double k = s.time.dt();
    auto energy = [&](std::size_t m) {
        double e = 0;
        for (std::size_t j = 0; j + 1 < s.grid.nodes(); ++j) {
            const double vt = (f.at(m + 1, j) - f.at(m, j)) / k;
            const double g1 = (f.at(m + 1, j + 1) - f.at(m + 1, j)) / dx;
            const double g0 = (f.at(m, j + 1) - f.at(m, j)) / dx;
            e += 0.5 * dx * (vt * vt + g1 * g0);
        }
        return e;
    };
    const double e0 = energy(0);
    REQUIRE(e0 > 0);
    double worst = 0;
    for (std::size_t m = 0; m + 1 < s.time.size(); ++m) worst = std::max(worst, std::abs(energy(m) - e0) / e0);
    CHECK(worst <= 1e-8);
}

TEST_CASE("separable mode on a strip") {
    const double omega = std::sqrt(pi * pi + 1);
    auto mode = [&](double x, double y, double t) { return std::sin(pi * x) * std::sin(y) * std::cos(omega * t); };
    auto s = strip(0, 20, 0.05, 20, 1, 0.02, [&](double x, double y) { return mode(x, y, 0); });
    CHECK(s.grid.y.dx == doctest::Approx(0.157).epsilon(1e-3));
    const std::size_t ny = s.grid.y.nodes();

    auto max_err = [&](const SubdomainField2D& f) {
        double err = 0;
        for (std::size_t m = 0; m < s.time.size(); ++m)
            for (std::size_t i = 0; i < s.grid.x.nodes(); ++i)
                for (std::size_t l = 0; l < ny; ++l)
                    err = std::max(err, std::abs(f.at(m, i, l) - mode(s.grid.x.x(i), s.grid.y.x(l), s.time.time(m))));
        return err;
    };
    const auto fd = solve_subdomain_2d(s, dirichlet_zero(s.time, ny));
    CHECK(max_err(fd) <= 5e-3);

    const auto flux = series(s.time, ny, [&](double t, std::size_t l) {
        return -pi * std::sin(s.grid.y.x(l)) * std::cos(omega * t);
    });
    const BoundarySpec bc{BoundaryCondition::neumann(flux),
                          BoundaryCondition::dirichlet(SpaceTimeTrace(s.time.times(), ny))};
    const auto fn = solve_subdomain_2d(s, bc);
    CHECK(max_err(fn) <= 5e-3);
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t i = 0; i < s.grid.x.nodes(); ++i) {
            CHECK(fn.at(m, i, 0) == 0.0);
            CHECK(std::abs(fn.at(m, i, ny - 1)) <= 1e-15);
        }
}

TEST_CASE("strip error decays at second order") {
    auto run = [](std::size_t n) {
        const double omega = std::sqrt(pi * pi + 1);
        const double dx = 1.0 / static_cast<double>(n);
        auto s = strip(0, n, dx, n, 0.5, 0.4 * dx, [](double x, double y) { return std::sin(pi * x) * std::sin(y); });
        const auto f = solve_subdomain_2d(s, dirichlet_zero(s.time, s.grid.y.nodes()));
        const std::size_t m = s.time.steps;
        double err = 0;
        for (std::size_t i = 0; i < s.grid.x.nodes(); ++i)
            for (std::size_t l = 0; l < s.grid.y.nodes(); ++l)
                err = std::max(err, std::abs(f.at(m, i, l) - std::sin(pi * s.grid.x.x(i)) * std::sin(s.grid.y.x(l)) *
                                                                 std::cos(omega * 0.5)));
        return err;
    };
    const double e1 = run(10), e2 = run(20);
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);
}

TEST_CASE("one-sided flux is exact on quadratics") {
    auto s = interval(0.5, 20, 0.05, 0.2, 0.05, [](double x) { return 3 - 2 * x; });
    const auto lin = solve_subdomain_1d(s, {BoundaryCondition::dirichlet(series(s.time, 1, [](double, std::size_t) { return 2.0; })),
                                            BoundaryCondition::dirichlet(series(s.time, 1, [](double, std::size_t) { return 0.0; }))});
    const auto r = extract_normal_derivative(lin, Side::right);
    const auto l = extract_normal_derivative(lin, Side::left);
    for (std::size_t m = 0; m < s.time.size(); ++m) {
        CHECK(r.at(m) == doctest::Approx(-2.0).epsilon(1e-12));
        CHECK(l.at(m) == doctest::Approx(2.0).epsilon(1e-12));
    }

    // A field that is x^2 at every level is built directly.
    std::vector<double> vals;
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t j = 0; j < s.grid.nodes(); ++j) vals.push_back(s.grid.x(j) * s.grid.x(j));
    const SubdomainField1D quad(s, vals);
    const auto rq = extract_normal_derivative(quad, Side::right);
    const auto lq = extract_normal_derivative(quad, Side::left);
    for (std::size_t m = 0; m < s.time.size(); ++m) {
        CHECK(rq.at(m) == doctest::Approx(2.0 * s.grid.x_hi()).epsilon(1e-12));
        CHECK(lq.at(m) == doctest::Approx(-2.0 * s.grid.x_lo).epsilon(1e-12));
    }
}

TEST_CASE("standing-wave flux at the right end") {
    const auto s = interval(0, 50, 0.02, 2, 0.02, [](double x) { return std::sin(pi * x); });
    const auto f = solve_subdomain_1d(s, dirichlet_zero(s.time));
    const auto g = extract_normal_derivative(f, Side::right);
    double err = 0;
    for (std::size_t m = 0; m < s.time.size(); ++m) err = std::max(err, std::abs(g.at(m) + pi * std::cos(pi * s.time.time(m))));
    MESSAGE("one-sided flux error ", err);
    CHECK(err <= 2e-3);
}

TEST_CASE("one-sided flux error matches its truncation term") {
    // Leading error of the 3-point stencil is dx^2/3 |u_xxx| = dx^2 pi^3 / 3 at x = 1.
    for (double dx : {0.04, 0.02, 0.01}) {
        const auto n = static_cast<std::size_t>(std::lround(1.0 / dx));
        const auto s = interval(0, n, dx, 2, dx, [](double x) { return std::sin(pi * x); });
        const auto g = extract_normal_derivative(solve_subdomain_1d(s, dirichlet_zero(s.time)), Side::right);
        double err = 0;
        for (std::size_t m = 0; m < s.time.size(); ++m)
            err = std::max(err, std::abs(g.at(m) + pi * std::cos(pi * s.time.time(m))));
        const double lead = dx * dx * pi * pi * pi / 3.0;
        CHECK(err == doctest::Approx(lead).epsilon(0.02));
    }
}

TEST_CASE("scheme-consistent flux reproduces the field through Neumann data") {
    auto u0 = [](double x) { return std::sin(2 * x) + x; };
    auto v0 = [](double x) { return std::cos(x); };
    const auto big = interval(0, 60, 0.02, 1.2, 0.02, u0, v0);
    const auto ref = solve_subdomain_1d(big, dirichlet_zero(big.time));
    // Restrict to the first 30 cells and impose the consistent flux on the right.
    std::vector<double> sub;
    for (std::size_t m = 0; m < big.time.size(); ++m)
        for (std::size_t j = 0; j <= 30; ++j) sub.push_back(ref.at(m, j));
    auto small = interval(0, 30, 0.02, 1.2, 0.02, u0, v0);
    const SubdomainField1D restricted(small, sub);
    const auto flux = extract_normal_derivative(restricted, Side::right, FluxStencil::scheme_consistent);
    const auto f = solve_subdomain_1d(small, {BoundaryCondition::dirichlet(SpaceTimeTrace(small.time.times(), 1)),
                                              BoundaryCondition::neumann(flux)});
    double err = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) err = std::max(err, std::abs(f.values()[i] - sub[i]));
    CHECK(err <= 1e-12);
}

TEST_CASE("flux extraction is linear") {
    const auto s = interval(0, 20, 0.05, 0.5, 0.05);
    std::vector<double> a, b, c;
    for (std::size_t m = 0; m < s.time.size(); ++m)
        for (std::size_t j = 0; j < s.grid.nodes(); ++j) {
            const double x = s.grid.x(j), t = s.time.time(m);
            a.push_back(std::sin(x + t));
            b.push_back(x * x * x - t);
            c.push_back(2 * a.back() - 3 * b.back());
        }
    for (auto st : {FluxStencil::one_sided, FluxStencil::scheme_consistent}) {
        const auto fa = extract_normal_derivative(SubdomainField1D(s, a), Side::left, st);
        const auto fb = extract_normal_derivative(SubdomainField1D(s, b), Side::left, st);
        const auto fc = extract_normal_derivative(SubdomainField1D(s, c), Side::left, st);
        const auto d = fc - (2.0 * fa - 3.0 * fb);
        CHECK(d.max_abs() <= 1e-9);
    }
}

TEST_CASE("stepper input validation") {
    auto s = interval(0, 10, 0.1, 1, 0.1);
    SpaceTimeTrace wrong(TimeGrid::from_step(1, 0.05).times(), 1);
    CHECK_THROWS_AS(solve_subdomain_1d(s, {BoundaryCondition::dirichlet(wrong),
                                           BoundaryCondition::dirichlet(SpaceTimeTrace(s.time.times(), 1))}),
                    ValidationError);
    auto fast = interval(0, 10, 0.1, 1, 0.1, {}, {}, 1.5);
    CHECK_THROWS_AS(solve_subdomain_1d(fast, dirichlet_zero(fast.time)), ValidationError);
    auto tiny = interval(0, 1, 0.1, 1, 0.1);
    const auto f = solve_subdomain_1d(tiny, dirichlet_zero(tiny.time));
    CHECK_THROWS_AS(extract_normal_derivative(f, Side::left), ValidationError);
}
