#include "wavewr/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"
#include "wavewr/runner.hpp"

namespace wavewr {

namespace {

std::string tag(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

RunConfig chain_1d() {
    RunConfig c;
    c.method = RunConfig::Method::nnwr;
    c.x_lo = 0.0;
    c.x_hi = 5.0;
    c.T = 8.0;
    c.speed = "constant 1";
    c.g_lo = "t^2";
    c.g_hi = "t^2*exp(-t)";
    c.interfaces = {0.6, 1.2, 1.7, 4.0};
    c.dx = 0.02;
    c.dt = {0.02};
    c.theta = 0.25;
    c.max_iterations = 12;
    c.guess = "poly-t2";
    return c;
}

std::vector<RunConfig> theta_sweep(RunConfig base, const std::string& prefix) {
    std::vector<RunConfig> out;
    for (double th : {0.1, 0.2, 0.25, 0.3, 0.4}) {
        RunConfig c = base;
        c.theta = th;
        c.name = prefix + "-theta-" + tag(th);
        out.push_back(c);
    }
    return out;
}

std::vector<RunConfig> windows(RunConfig base, const std::string& prefix, std::vector<double> Ts) {
    std::vector<RunConfig> out;
    for (double T : Ts) {
        RunConfig c = base;
        c.theta = 0.25;
        c.T = T;
        c.name = prefix + "-T-" + tag(T);
        out.push_back(c);
    }
    return out;
}

std::vector<RunConfig> e1() { return theta_sweep(chain_1d(), "e1"); }

std::vector<RunConfig> e2() { return windows(chain_1d(), "e2", {1, 2, 4, 8}); }

std::vector<RunConfig> e3() {
    RunConfig base = chain_1d();
    base.speed = "expr (x+1)/6";
    auto out = theta_sweep(base, "e3");
    for (auto& c : windows(base, "e3", {1, 2, 4, 8})) out.push_back(c);
    return out;
}

RunConfig strip_2d() {
    RunConfig c;
    c.method = RunConfig::Method::nnwr;
    c.dimension = 2;
    c.x_lo = 0.0;
    c.x_hi = 1.0;
    c.y_hi = 3.141592653589793;
    c.T = 2.0;
    c.u0 = "x*y*(x-1)*(y-pi)*(5*x-2)*(4*x-3)";
    c.interfaces = {0.4, 0.75};
    c.dx = 0.05;
    c.dt = {0.04};
    c.dy = 0.16;
    c.max_iterations = 12;
    c.guess = "t-sin-y";
    return c;
}

std::vector<RunConfig> e4() {
    auto out = theta_sweep(strip_2d(), "e4");
    for (auto& c : windows(strip_2d(), "e4", {0.5, 1, 2, 4})) out.push_back(c);
    return out;
}

std::vector<RunConfig> e5() {
    std::vector<RunConfig> out;
    for (double T : {4.0, 10.0}) {
        RunConfig base;
        base.x_lo = -3.0;
        base.x_hi = 2.0;
        base.T = T;
        base.v0 = "x*exp(-x)";
        base.g_lo = "-3*exp(3)*t";
        base.g_hi = "2*t*exp(-2)";
        base.interfaces = {0.0};
        base.dx = 0.02;
        base.dt = {0.02};
        base.max_iterations = 12;
        base.guess = "random 7";
        const std::string suffix = "-T-" + tag(T);

        RunConfig nn = base;
        nn.method = RunConfig::Method::nnwr;
        nn.theta = 0.25;
        nn.name = "e5-nnwr" + suffix;
        RunConfig dn = base;
        dn.method = RunConfig::Method::dnwr;
        dn.theta = 0.5;
        dn.name = "e5-dnwr" + suffix;
        RunConfig cl = base;
        cl.method = RunConfig::Method::swr_classical;
        cl.overlap = 24;
        cl.max_iterations = 24;
        cl.name = "e5-swr-classical" + suffix;
        RunConfig op = base;
        op.method = RunConfig::Method::swr_optimized;
        op.p = 0.0;
        op.name = "e5-swr-optimized" + suffix;
        for (auto* c : {&nn, &dn, &cl, &op}) out.push_back(*c);
    }
    return out;
}

std::vector<RunConfig> e6() {
    std::vector<RunConfig> out;
    for (const auto& split : std::vector<std::vector<double>>{{0.6}, {0.4, 0.75}}) {
        RunConfig base;
        base.dimension = 2;
        base.x_lo = 0.0;
        base.x_hi = 1.0;
        base.T = 2.0;
        base.g_lo = "t^2*sin(y)";
        base.g_hi = "y*(y-pi)*t^3";
        base.interfaces = split;
        base.dx = 0.05;
        base.dt = {0.04};
        base.dy = 0.16;
        base.max_iterations = 15;
        base.guess = "random 11";
        const std::string suffix = "-" + std::to_string(split.size() + 1) + "sub";

        RunConfig nn = base;
        nn.method = RunConfig::Method::nnwr;
        nn.theta = 0.25;
        nn.name = "e6-nnwr" + suffix;
        out.push_back(nn);
        if (split.size() == 1) {
            RunConfig dn = base;
            dn.method = RunConfig::Method::dnwr;
            dn.theta = 0.5;
            dn.name = "e6-dnwr" + suffix;
            out.push_back(dn);
        }
        RunConfig cl = base;
        cl.method = RunConfig::Method::swr_classical;
        cl.overlap = 2;
        cl.name = "e6-swr-classical" + suffix;
        out.push_back(cl);
        RunConfig op = base;
        op.method = RunConfig::Method::swr_optimized;
        op.p = 0.0;
        op.name = "e6-swr-optimized" + suffix;
        out.push_back(op);
    }
    return out;
}

std::vector<RunConfig> e7() {
    RunConfig c;
    c.method = RunConfig::Method::nnwr;
    c.name = "e7-nnwr";
    c.x_lo = 0.0;
    c.x_hi = 6.0;
    c.T = 2.0;
    c.speed = "piecewise 0.25 2 0.5";
    c.g_lo = "t^2";
    c.g_hi = "t^3";
    c.interfaces = {2.0, 4.0};
    c.dx = 0.1;
    c.dt = {0.13, 0.039, 0.1};
    c.theta = 0.25;
    c.max_iterations = 6;
    c.guess = "random 42";
    return {c};
}

std::vector<RunConfig> e8() {
    std::vector<RunConfig> out;
    for (int N : {2, 4, 8}) {
        RunConfig c;
        c.method = RunConfig::Method::nnwr;
        c.name = "e8-N-" + std::to_string(N);
        c.x_lo = 0.0;
        c.x_hi = 4.0;
        const double h = 4.0 / N;
        c.T = 2.0 * h;
        c.g_lo = "t^2";
        for (int i = 1; i < N; ++i) c.interfaces.push_back(i * h);
        c.dx = 0.02;
        c.dt = {0.02};
        c.max_iterations = 8;
        c.tolerance = 1e-8;
        c.guess = "poly-t2";
        out.push_back(c);
    }
    return out;
}

std::vector<RunConfig> o1() {
    std::vector<RunConfig> out;
    for (double th : {0.25, 0.3}) {
        for (double T : {1.0, 2.0, 4.0}) {
            RunConfig c = chain_1d();
            c.method = RunConfig::Method::oracle_nnwr;
            c.theta = th;
            c.T = T;
            c.dt = {0.005};
            c.max_iterations = 6;
            c.name = "o1-theta-" + tag(th) + "-T-" + tag(T);
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::filesystem::path> o2(const std::filesystem::path& dir) {
    std::ostringstream csv;
    csv << "alpha,beta,t,chi,talbot,abs_diff\n";
    double worst = 0.0;
    char buf[256];
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double beta : {0.25, 1.0}) {
            for (double dt : {0.1, 2.0}) {
                const double t = beta + dt;
                const double a = chi_continuous(alpha, beta, t);
                const double b = chi_continuous_talbot(alpha, beta, t);
                worst = std::max(worst, std::abs(a - b));
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", alpha, beta, t, a, b,
                              std::abs(a - b));
                csv << buf;
            }
        }
    }
    const auto path = dir / "o2-chi-talbot.csv";
    write_file(path, csv.str());
    nlohmann::json side;
    side["csv"] = path.filename().string();
    side["talbot_nodes"] = 64;
    side["max_discrepancy"] = worst;
    side["threshold"] = 1e-6;
    write_file(dir / "o2-chi-talbot.json", side.dump(2) + "\n");
    return {path};
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
    static const std::vector<Scenario> registry{
        {"E1-theta-sweep-1d", "1D chain of five subdomains, theta sweep at T=8", e1, {}},
        {"E2-windows-1d", "1D chain, theta=1/4, windows T=1,2,4,8", e2, {}},
        {"E3-variable-c", "1D chain with c(x)=(x+1)/6: theta sweep and windows", e3, {}},
        {"E4-2d-theta", "three strips of (0,1)x(0,pi): theta sweep at T=2 and windows", e4, {}},
        {"E5-compare-1d", "DNWR, NNWR, classical and optimized SWR on (-3,2), T=4 and 10", e5, {}},
        {"E6-compare-2d", "DNWR, NNWR and SWR on strips, two and three subdomains, T=2", e6, {}},
        {"E7-nonuniform-dt", "three subdomains with different speeds and time steps", e7, {}},
        {"E8-scalability", "equal chains with h/T fixed, N=2,4,8", e8, {}},
        {"O1-oracle-1d", "delay-series oracle on the five-subdomain chain", o1, {}},
        {"O2-oracle-chi", "chi kernel against Talbot inversion on the 12-point grid", {}, o2},
    };
    return registry;
}

const Scenario& find_scenario(const std::string& name) {
    for (const auto& s : scenario_registry()) {
        if (s.name == name) return s;
    }
    throw ValidationError("unknown scenario '" + name + "' (see `list`)");
}

std::vector<std::filesystem::path> run_scenario(const std::string& name, const std::filesystem::path& dir) {
    const Scenario& s = find_scenario(name);
    if (s.custom) return s.custom(dir);
    std::vector<std::filesystem::path> out;
    for (const RunConfig& c : s.configs()) out.push_back(write_outputs(c, execute(c), dir));
    return out;
}

}  // namespace wavewr
