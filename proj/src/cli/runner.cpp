#include "wavewr/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "wavewr/bounds.hpp"
#include "wavewr/comparators.hpp"
#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"
#include "wavewr/partition.hpp"

namespace wavewr {

InitialGuess make_guess(const std::string& spec) {
    if (spec == "poly-t2") return InitialGuess::poly_t2();
    if (spec == "t-sin-y") return InitialGuess::t_sin_y();
    if (spec == "zero") return InitialGuess::zero();
    if (const auto seed = guess_seed(spec)) return InitialGuess::random(*seed);
    throw ValidationError("iteration.guess: expected poly-t2, t-sin-y, zero or random <seed>");
}

namespace {

GridSteps steps_of(const RunConfig& cfg) { return GridSteps{cfg.dx, cfg.dt, cfg.dy}; }

double h_min_of(const RunConfig& cfg) {
    std::vector<double> x{cfg.x_lo};
    x.insert(x.end(), cfg.interfaces.begin(), cfg.interfaces.end());
    x.push_back(cfg.x_hi);
    double h = INFINITY;
    for (std::size_t i = 1; i < x.size(); ++i) h = std::min(h, x[i] - x[i - 1]);
    return h;
}

nlohmann::json prediction(const RunConfig& cfg) {
    const auto c = make_speed(cfg).constant_value();
    const bool nn = cfg.method == RunConfig::Method::nnwr || cfg.method == RunConfig::Method::oracle_nnwr;
    const bool dn = cfg.method == RunConfig::Method::dnwr;
    if (!c || !(nn || dn) || cfg.interfaces.empty()) return "n/a";
    const bool two = cfg.interfaces.size() == 1;
    BoundMethod m;
    if (cfg.dimension == 2) {
        m = nn ? BoundMethod::nnwr_2d : BoundMethod::dnwr_2d;
    } else if (two) {
        m = nn ? BoundMethod::nnwr_2sub_1d : BoundMethod::dnwr_2sub_1d;
    } else {
        m = nn ? BoundMethod::nnwr_multi_1d : BoundMethod::dnwr_multi_1d;
    }
    return theoretical_iterations(m, cfg.T, h_min_of(cfg), *c);
}

template <typename Layout>
ConvergenceRecord run_layout(const RunConfig& cfg, const Layout& layout) {
    const InitialGuess guess = make_guess(cfg.guess);
    switch (cfg.method) {
        case RunConfig::Method::nnwr: {
            NnwrOptions o;
            o.theta = cfg.theta;
            o.max_iterations = cfg.max_iterations;
            o.tolerance = cfg.tolerance;
            o.parallel = cfg.parallel;
            return run_nnwr(layout, o, guess).record;
        }
        case RunConfig::Method::dnwr: {
            DnwrOptions o;
            o.theta = cfg.theta;
            o.max_iterations = cfg.max_iterations;
            o.tolerance = cfg.tolerance;
            return run_dnwr(layout, o, guess);
        }
        case RunConfig::Method::swr_classical:
        case RunConfig::Method::swr_optimized: {
            SwrConfig s;
            s.kind = cfg.method == RunConfig::Method::swr_classical ? SwrConfig::Kind::classical
                                                                    : SwrConfig::Kind::first_order;
            s.overlap = cfg.overlap;
            s.p = cfg.p;
            s.max_iterations = cfg.max_iterations;
            s.tolerance = cfg.tolerance;
            s.parallel = cfg.parallel;
            return run_swr(layout, s, guess);
        }
        case RunConfig::Method::oracle_nnwr: break;
    }
    throw SolverError("unsupported method for a discrete run");
}

ConvergenceRecord run_oracle(const RunConfig& cfg) {
    std::vector<double> xs{cfg.x_lo};
    xs.insert(xs.end(), cfg.interfaces.begin(), cfg.interfaces.end());
    xs.push_back(cfg.x_hi);
    std::vector<double> widths;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) throw ValidationError("partition.interfaces: must be strictly increasing inside the domain");
        widths.push_back(xs[i] - xs[i - 1]);
    }
    const double c = *make_speed(cfg).constant_value();
    const TimeGrid grid = TimeGrid::from_step(cfg.T, cfg.dt.front());
    const double dt = grid.dt();
    const auto ops = build_interface_operators(widths, c, cfg.T);
    const InitialGuess guess = make_guess(cfg.guess);
    std::mt19937_64 rng(guess.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<UniformTrace> w(ops.interfaces(), UniformTrace(grid.size(), 0.0));
    for (auto& tr : w) {
        for (std::size_t m = 1; m < tr.size(); ++m) {
            const double t = grid.time(m);
            switch (guess.kind) {
                case InitialGuess::Kind::poly_t2: tr[m] = t * t; break;
                case InitialGuess::Kind::random: tr[m] = uniform(rng); break;
                default: tr[m] = 0.0; break;
            }
        }
    }
    ConvergenceRecord rec;
    rec.method = "oracle-nnwr";
    rec.theta = cfg.theta;
    if (guess.kind == InitialGuess::Kind::random) rec.seed = guess.seed;
    auto norm = [&] {
        double m = 0.0;
        for (const auto& tr : w) {
            for (double v : tr) m = std::max(m, std::abs(v));
        }
        return m;
    };
    rec.errors.push_back(norm());
    rec.wall_seconds.push_back(0.0);
    for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
        w = oracle_nnwr_step(w, dt, ops, cfg.theta);
        rec.errors.push_back(norm());
        rec.wall_seconds.push_back(0.0);
        if (!rec.iterations_to_tolerance &&
            (rec.errors.back() == 0.0 || rec.errors.back() <= cfg.tolerance * rec.errors.front())) {
            rec.iterations_to_tolerance = k;
            if (cfg.tolerance > 0.0) break;
        }
    }
    return rec;
}

}  // namespace

RunOutput execute(const RunConfig& cfg) {
    cfg.validate();
    RunOutput out;
    if (cfg.method == RunConfig::Method::oracle_nnwr) {
        out.record = run_oracle(cfg);
    } else if (cfg.dimension == 1) {
        const WaveProblem1D problem = make_problem_1d(cfg);
        ChainLayout1D layout(problem, build_partition(problem, cfg.interfaces, steps_of(cfg)));
        out.record = run_layout(cfg, layout);
    } else {
        const WaveProblem2D problem = make_problem_2d(cfg);
        ChainLayout2D layout(problem, build_partition(problem, cfg.interfaces, steps_of(cfg)));
        out.record = run_layout(cfg, layout);
    }
    nlohmann::json j;
    j["config"] = to_json(cfg);
    j["seed"] = out.record.seed ? nlohmann::json(*out.record.seed) : nlohmann::json(nullptr);
    j["theoretical_iterations"] = prediction(cfg);
    j["error0"] = out.record.initial_error();
    j["iterations"] = out.record.errors.size() - 1;
    j["iterations_to_tolerance"] = out.record.iterations_to_tolerance
                                       ? nlohmann::json(*out.record.iterations_to_tolerance)
                                       : nlohmann::json(nullptr);
    out.sidecar = std::move(j);
    return out;
}

std::string format_csv(const ConvergenceRecord& rec) {
    std::string s = "iteration,error\n";
    char buf[64];
    for (std::size_t k = 0; k < rec.errors.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k, rec.errors[k]);
        s += buf;
    }
    return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SolverError("cannot write " + path.string());
    f << text;
    if (!f) throw SolverError("cannot write " + path.string());
}

std::filesystem::path write_outputs(const RunConfig& cfg, const RunOutput& out, const std::filesystem::path& dir) {
    const auto csv = dir / (cfg.name + ".csv");
    nlohmann::json side = out.sidecar;
    side["csv"] = csv.filename().string();
    write_file(csv, format_csv(out.record));
    write_file(dir / (cfg.name + ".json"), side.dump(2) + "\n");
    return csv;
}

}  // namespace wavewr
