// Acceptance driver: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance [output-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wavewr/config.hpp"
#include "wavewr/delay_oracle.hpp"
#include "wavewr/discretization.hpp"
#include "wavewr/nnwr.hpp"
#include "wavewr/partition.hpp"
#include "wavewr/runner.hpp"
#include "wavewr/scenarios.hpp"

using namespace wavewr;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

std::string iters(std::optional<std::size_t> k) { return k ? std::to_string(*k) : std::string("never"); }

// Same setup as the E1/E2 chain: (0,5) cut at 0.6, 1.2, 1.7, 4.0, c = 1, dx = dt = 0.02.
RunConfig chain_1d(double T, double theta, std::size_t iterations) {
    RunConfig c;
    c.method = RunConfig::Method::nnwr;
    c.x_lo = 0.0;
    c.x_hi = 5.0;
    c.T = T;
    c.g_lo = "t^2";
    c.g_hi = "t^2*exp(-t)";
    c.interfaces = {0.6, 1.2, 1.7, 4.0};
    c.dx = 0.02;
    c.dt = {0.02};
    c.theta = theta;
    c.max_iterations = iterations;
    c.guess = "poly-t2";
    return c;
}

RunConfig two_sub_1d(RunConfig::Method m, double T, std::size_t iterations) {
    RunConfig c;
    c.method = m;
    c.x_lo = -3.0;
    c.x_hi = 2.0;
    c.T = T;
    c.v0 = "x*exp(-x)";
    c.g_lo = "-3*exp(3)*t";
    c.g_hi = "2*t*exp(-2)";
    c.interfaces = {0.0};
    c.dx = 1.0 / 50;
    c.dt = {1.0 / 50};
    c.max_iterations = iterations;
    c.guess = "random 7";
    return c;
}

std::vector<double> squares(double T, double dt) {
    const auto n = static_cast<std::size_t>(std::llround(T / dt));
    std::vector<double> w(n + 1);
    for (std::size_t m = 0; m <= n; ++m) w[m] = (m * dt) * (m * dt);
    return w;
}

double max_abs(const std::vector<std::vector<double>>& w) {
    double m = 0;
    for (const auto& v : w)
        for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

Verdict ac1() {
    const auto short_run = execute(chain_1d(1, 0.25, 3)).record;
    const auto long_run = execute(chain_1d(8, 0.25, 10)).record;
    const double r2 = short_run.relative(2), r8 = long_run.relative(8), r9 = long_run.relative(9);
    const bool ok = r2 <= 1e-9 && r9 <= 1e-9 && r8 > 1e-6;
    return {ok, "T=1 rel(2)=" + sci(r2) + "; T=8 rel(9)=" + sci(r9) + ", rel(8)=" + sci(r8) + " (need > 1e-6)"};
}

Verdict ac2() {
    std::vector<std::pair<double, double>> at9;
    for (double th : {0.1, 0.2, 0.25, 0.3, 0.4}) at9.emplace_back(th, execute(chain_1d(8, th, 9)).record.relative(9));
    const double best = at9[2].second;
    bool ok = true;
    std::string d = "rel(9):";
    for (const auto& [th, e] : at9) {
        d += " " + fmt("%g", th) + "->" + sci(e);
        if (th != 0.25 && !(e >= 1e3 * best)) ok = false;
    }
    return {ok, d};
}

Verdict ac3() {
    const auto a = execute(two_sub_1d(RunConfig::Method::nnwr, 4, 3)).record;
    const auto b = execute(two_sub_1d(RunConfig::Method::nnwr, 10, 4)).record;
    const bool ok = a.relative(2) <= 1e-9 && b.relative(3) <= 1e-9;
    return {ok, "T=4 rel(2)=" + sci(a.relative(2)) + "; T=10 rel(3)=" + sci(b.relative(3))};
}

Verdict ac4() {
    RunConfig c;
    c.method = RunConfig::Method::nnwr;
    c.dimension = 2;
    c.T = 2.0;
    c.u0 = "x*y*(x-1)*(y-pi)*(5*x-2)*(4*x-3)";
    c.interfaces = {0.4, 0.75};
    c.dx = 0.05;
    c.dt = {0.04};
    c.dy = 0.16;
    c.theta = 0.25;
    c.max_iterations = 12;
    c.guess = "t-sin-y";
    const auto rec = execute(c).record;
    // Increases confined to the roundoff floor are not counted as increases.
    const double floor = 1e-12;
    std::size_t rises = 0, raw_rises = 0;
    for (std::size_t k = 3; k + 1 < rec.errors.size(); ++k) {
        if (rec.relative(k + 1) > rec.relative(k)) {
            ++raw_rises;
            if (rec.relative(k + 1) > floor) ++rises;
        }
    }
    const bool ok = rec.relative(5) <= 1e-3 && rec.relative(10) <= 1e-6 && rises == 0;
    return {ok, "rel(5)=" + sci(rec.relative(5)) + ", rel(10)=" + sci(rec.relative(10)) +
                    ", rises from k=3 above 1e-12: " + std::to_string(rises) + " (at roundoff: " +
                    std::to_string(raw_rises - rises) + ")"};
}

Verdict ac5() {
    const double T = 1, dt = 0.005;
    const auto ops = build_interface_operators({0.6, 0.6, 0.5, 2.3, 1.0}, 1, T);
    const std::vector<UniformTrace> w0(4, squares(T, dt));
    const double exact = max_abs(oracle_nnwr_step(w0, dt, ops, 0.25));
    const double off = max_abs(oracle_nnwr_step(w0, dt, ops, 0.3));
    return {exact == 0.0 && off > 1e-3, "theta=1/4 max|w1|=" + sci(exact) + "; theta=0.3 max|w1|=" + sci(off)};
}

// One homogeneous NNWR iteration from w0 = t^2 against the oracle step.
double oracle_gap(const std::vector<double>& widths, double T) {
    const double dx = 0.02;
    WaveProblem1D p;
    p.x_lo = 0;
    p.x_hi = 0;
    std::vector<double> cuts;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        p.x_hi += widths[i];
        if (i + 1 < widths.size()) cuts.push_back(p.x_hi);
    }
    p.T = T;
    Partition part = build_partition(p, cuts, GridSteps{dx, {dx}, 0});
    const ChainLayout1D layout(p, part);
    NnwrOptions opt;
    opt.theta = 0.25;
    opt.max_iterations = 1;
    opt.keep_history = true;
    const auto guesses = make_initial_guesses(layout, InitialGuess::poly_t2());
    std::vector<SpaceTimeTrace> zeros;
    for (const auto& g : guesses) zeros.emplace_back(g.time_grid(), 1);
    const auto run = run_nnwr(layout, opt, guesses, zeros, true);
    const auto w1 = oracle_nnwr_step(std::vector<UniformTrace>(cuts.size(), squares(T, dx)), dx,
                                     build_interface_operators(widths, 1, T), 0.25);
    double gap = 0;
    for (std::size_t i = 0; i < w1.size(); ++i)
        for (std::size_t m = 0; m < w1[i].size(); ++m) gap = std::max(gap, std::abs(w1[i][m] - run.history[1][i].at(m)));
    return gap;
}

Verdict ac6() {
    const double equal = oracle_gap({1, 1}, 3);
    // Equal widths vanish within T=3 on both sides; an unequal split exercises a nonzero trace.
    const double unequal = oracle_gap({0.6, 1.4}, 3);
    return {equal <= 1e-9 && unequal <= 1e-9, "widths {1,1}: " + sci(equal) + "; widths {0.6,1.4}: " + sci(unequal)};
}

Verdict ac7() {
    double worst = 0;
    int points = 0;
    for (double alpha : {0.5, 1.0, 2.0})
        for (double beta : {0.25, 1.0})
            for (double dt : {0.1, 2.0}) {
                const double t = beta + dt;
                worst = std::max(worst, std::abs(chi_eval(alpha, beta, t).continuous - chi_continuous_talbot(alpha, beta, t)));
                ++points;
            }
    return {points == 12 && worst <= 1e-6, std::to_string(points) + " points, max |chi - talbot| = " + sci(worst)};
}

Verdict ac8() {
    const RunConfig cfg = find_scenario("E7-nonuniform-dt").configs().front();
    const WaveProblem1D p = make_problem_1d(cfg);
    Partition part = build_partition(p, cfg.interfaces, GridSteps{cfg.dx, cfg.dt, 0});
    const ChainLayout1D layout(p, part);
    const auto mono = layout.solve_mono();

    NnwrOptions opt;
    opt.theta = 0.25;
    opt.max_iterations = 5;
    opt.keep_history = true;
    const auto run = run_nnwr(layout, opt, make_initial_guesses(layout, InitialGuess::random(42)),
                              interface_reference(layout, mono));

    // Reconstruct the subdomain solutions from the iteration-2 traces.
    const auto fields = dirichlet_step(NnwrState{2, run.history[2], 0.25}, layout);
    double scale = 0;
    for (double v : mono.values()) scale = std::max(scale, std::abs(v));
    double gap = 0;
    for (std::size_t s = 0; s < fields.size(); ++s) {
        const auto& f = fields[s];
        const auto grid = layout.times(s);
        for (std::size_t j = 0; j < f.grid().nodes(); ++j) {
            const auto ref = project_onto(ChainLayout1D::trace_at(mono, f.grid().x(j)), grid);
            for (std::size_t m = 0; m < grid.size(); ++m) gap = std::max(gap, std::abs(f.at(m, j) - ref.at(m)));
        }
    }
    const double rel = gap / scale;
    bool monotone = true;
    for (std::size_t k = 0; k < 5; ++k)
        if (run.record.errors[k + 1] > run.record.errors[k]) monotone = false;
    std::string hist = "errors:";
    for (double e : run.record.errors) hist += " " + sci(e);
    return {rel <= 5e-2 && monotone,
            "relative solution error after 2 iterations " + sci(rel) + "; " + hist};
}

Verdict ac9() {
    std::vector<std::optional<std::size_t>> counts;
    std::string d;
    for (int N : {2, 4, 8}) {
        RunConfig c;
        c.method = RunConfig::Method::nnwr;
        c.x_lo = 0;
        c.x_hi = 4;
        const double h = 4.0 / N;
        c.T = 2 * h;
        c.g_lo = "t^2";
        for (int i = 1; i < N; ++i) c.interfaces.push_back(i * h);
        c.dx = 0.02;
        c.dt = {0.02};
        c.max_iterations = 8;
        c.guess = "poly-t2";
        counts.push_back(iterations_to(execute(c).record.errors, 1e-8));
        d += (d.empty() ? "" : ", ") + std::string("N=") + std::to_string(N) + ": " + iters(counts.back());
    }
    const bool ok = counts[0] && counts[0] == counts[1] && counts[1] == counts[2];
    return {ok, "iterations to 1e-8: " + d};
}

Verdict ac10() {
    auto opt = two_sub_1d(RunConfig::Method::swr_optimized, 4, 3);
    opt.p = 0.0;
    const double r2 = execute(opt).record.relative(2);

    auto cl = two_sub_1d(RunConfig::Method::swr_classical, 4, 12);
    cl.overlap = 24;
    const auto classical = iterations_to(execute(cl).record.errors, 1e-9);
    const bool classical_ok = classical && *classical <= 6;

    bool fewer = true;
    std::string d2;
    for (const std::string sub : {"2sub", "3sub"}) {
        std::optional<std::size_t> nn, sw;
        for (const auto& c : find_scenario("E6-compare-2d").configs()) {
            if (c.name == "e6-nnwr-" + sub) nn = iterations_to(execute(c).record.errors, 1e-6);
            if (c.name == "e6-swr-optimized-" + sub) sw = iterations_to(execute(c).record.errors, 1e-6);
        }
        const bool here = nn && (!sw || *nn < *sw);
        fewer = fewer && here;
        d2 += " " + sub + " nnwr " + iters(nn) + " vs swr " + iters(sw) + ";";
    }
    const bool ok = r2 <= 1e-9 && classical_ok && fewer;
    return {ok, "optimized rel(2)=" + sci(r2) + "; classical reaches 1e-9 at " + iters(classical) +
                    " (need <= 6); E6 to 1e-6:" + d2};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict ac11(const fs::path& out) {
    std::size_t files = 0, differ = 0;
    for (const auto& sc : scenario_registry()) {
        const auto a = run_scenario(sc.name, out / "run1" / sc.name);
        const auto b = run_scenario(sc.name, out / "run2" / sc.name);
        if (a.size() != b.size()) {
            ++differ;
            continue;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            ++files;
            if (a[i].filename() != b[i].filename() || slurp(a[i]) != slurp(b[i])) ++differ;
        }
    }
    return {files > 0 && differ == 0, std::to_string(files) + " CSVs compared, " + std::to_string(differ) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
    fs::create_directories(out);
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"AC1 finite-step convergence 1D", ac1},
        {"AC2 theta sweep optimality", ac2},
        {"AC3 two-subdomain windows", ac3},
        {"AC4 finite-step 2D", ac4},
        {"AC5 oracle nilpotency", ac5},
        {"AC6 oracle-discrete equivalence", ac6},
        {"AC7 chi kernel vs Talbot", ac7},
        {"AC8 non-matching time grids", ac8},
        {"AC9 scalability", ac9},
        {"AC10 SWR baselines", ac10},
        {"AC11 determinism", [&] { return ac11(out); }},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
