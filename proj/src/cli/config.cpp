#include "wavewr/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "wavewr/errors.hpp"
#include "wavewr/expression.hpp"

namespace wavewr {

std::string to_string(RunConfig::Method m) {
    switch (m) {
        case RunConfig::Method::nnwr: return "nnwr";
        case RunConfig::Method::dnwr: return "dnwr";
        case RunConfig::Method::swr_classical: return "swr-classical";
        case RunConfig::Method::swr_optimized: return "swr-optimized";
        case RunConfig::Method::oracle_nnwr: return "oracle-nnwr";
    }
    return "nnwr";
}

RunConfig::Method parse_method(const std::string& s) {
    for (auto m : {RunConfig::Method::nnwr, RunConfig::Method::dnwr, RunConfig::Method::swr_classical,
                   RunConfig::Method::swr_optimized, RunConfig::Method::oracle_nnwr}) {
        if (to_string(m) == s) return m;
    }
    throw ValidationError("run.method: unknown method '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt(v[i]);
    return s;
}

class Reader {
public:
    Reader(std::string origin, int line, std::string key) : origin_(std::move(origin)), line_(line), key_(std::move(key)) {}

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << origin_ << ":" << line_ << ": " << key_ << ": " << what;
        throw ValidationError(os.str());
    }

    double number(const std::string& v) const {
        try {
            return eval_constant(v);
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }

    std::vector<double> numbers(const std::string& v) const {
        std::vector<double> out;
        for (const auto& w : words(v)) out.push_back(number(w));
        return out;
    }

    std::size_t count(const std::string& v) const {
        const double d = number(v);
        if (d < 0.0 || d != std::floor(d)) fail("expected a non-negative integer, got '" + v + "'");
        return static_cast<std::size_t>(d);
    }

    bool boolean(const std::string& v) const {
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        fail("expected true or false, got '" + v + "'");
    }

private:
    std::string origin_;
    int line_;
    std::string key_;
};

void set_key(RunConfig& c, const std::string& section, const std::string& key, const std::string& v,
             const Reader& r) {
    const std::string k = section + "." + key;
    if (k == "run.method") {
        try {
            c.method = parse_method(v);
        } catch (const ValidationError&) {
            r.fail("unknown method '" + v + "'");
        }
    } else if (k == "run.name") {
        if (v.empty() || v.find_first_of("/\\") != std::string::npos) r.fail("name must be a plain file stem");
        c.name = v;
    } else if (k == "problem.dimension") {
        const auto d = r.count(v);
        if (d != 1 && d != 2) r.fail("dimension must be 1 or 2");
        c.dimension = static_cast<int>(d);
    } else if (k == "problem.x_lo") {
        c.x_lo = r.number(v);
    } else if (k == "problem.x_hi") {
        c.x_hi = r.number(v);
    } else if (k == "problem.y_lo") {
        c.y_lo = r.number(v);
    } else if (k == "problem.y_hi") {
        c.y_hi = r.number(v);
    } else if (k == "problem.T") {
        c.T = r.number(v);
    } else if (k == "problem.speed") {
        c.speed = v;
    } else if (k == "problem.u0") {
        c.u0 = v;
    } else if (k == "problem.v0") {
        c.v0 = v;
    } else if (k == "problem.source") {
        c.source = v;
    } else if (k == "problem.g_lo") {
        c.g_lo = v;
    } else if (k == "problem.g_hi") {
        c.g_hi = v;
    } else if (k == "problem.g_ylo") {
        c.g_ylo = v;
    } else if (k == "problem.g_yhi") {
        c.g_yhi = v;
    } else if (k == "partition.interfaces") {
        c.interfaces = r.numbers(v);
    } else if (k == "partition.dx") {
        c.dx = r.number(v);
    } else if (k == "partition.dt") {
        c.dt = r.numbers(v);
    } else if (k == "partition.dy") {
        c.dy = r.number(v);
    } else if (k == "partition.overlap") {
        c.overlap = r.count(v);
    } else if (k == "iteration.theta") {
        c.theta = r.number(v);
    } else if (k == "iteration.p") {
        c.p = r.number(v);
    } else if (k == "iteration.max_iterations") {
        c.max_iterations = r.count(v);
    } else if (k == "iteration.tolerance") {
        c.tolerance = r.number(v);
    } else if (k == "iteration.guess") {
        c.guess = v;
    } else if (k == "iteration.parallel") {
        c.parallel = r.boolean(v);
    } else if (k == "output.dir") {
        c.output_dir = v;
    } else {
        r.fail("unknown key");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    static const std::vector<std::string> sections{"run", "problem", "partition", "iteration", "output"};
    RunConfig cfg;
    std::istringstream is(text);
    std::string section;
    std::map<std::string, int> seen;
    int line_no = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty() || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') Reader(origin, line_no, "section").fail("missing ']'");
            section = trim(line.substr(1, line.size() - 2));
            if (std::find(sections.begin(), sections.end(), section) == sections.end()) {
                Reader(origin, line_no, "[" + section + "]").fail("unknown section");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) Reader(origin, line_no, line).fail("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) Reader(origin, line_no, key).fail("key outside of a section");
        const std::string full = section + "." + key;
        const Reader r(origin, line_no, full);
        if (seen.count(full)) r.fail("duplicate key (first set on line " + std::to_string(seen[full]) + ")");
        seen[full] = line_no;
        set_key(cfg, section, key, value, r);
    }
    if (!seen.count("run.method")) throw ValidationError(origin + ": run.method: missing");
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_config(os.str(), path.string());
}

std::optional<std::uint64_t> guess_seed(const std::string& guess) {
    const auto w = words(guess);
    if (w.size() == 2 && w[0] == "random") {
        try {
            std::size_t used = 0;
            const unsigned long long s = std::stoull(w[1], &used);
            if (used == w[1].size()) return s;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    auto bad = [](const std::string& key, const std::string& what) { throw ValidationError(key + ": " + what); };
    if (!(x_hi > x_lo)) bad("problem.x_hi", "must exceed x_lo");
    if (dimension == 2 && !(y_hi > y_lo)) bad("problem.y_hi", "must exceed y_lo");
    if (!(T > 0.0)) bad("problem.T", "must be positive");
    if (!(dx > 0.0)) bad("partition.dx", "must be positive");
    if (dt.empty()) bad("partition.dt", "missing");
    for (double v : dt) {
        if (!(v > 0.0)) bad("partition.dt", "must be positive");
    }
    if (dt.size() != 1 && dt.size() != interfaces.size() + 1) {
        bad("partition.dt", "give one step or one per subdomain");
    }
    if (dimension == 2 && !(dy > 0.0)) bad("partition.dy", "must be positive for strips");
    if (!(theta > 0.0 && theta <= 1.0)) bad("iteration.theta", "theta out of (0,1]");
    if (p < 0.0) bad("iteration.p", "must be >= 0");
    if (tolerance < 0.0) bad("iteration.tolerance", "must be >= 0");
    const bool swr = method == Method::swr_classical || method == Method::swr_optimized;
    if (overlap > 0 && !swr) bad("partition.overlap", "overlap only applies to SWR methods");
    if (method == Method::swr_classical && overlap == 0 && dimension == 2) {
        bad("partition.overlap", "classical SWR needs a positive overlap in 2D");
    }
    if (method == Method::dnwr && interfaces.size() != 1) bad("partition.interfaces", "DNWR needs exactly one interface");
    if (method == Method::oracle_nnwr && dimension != 1) bad("problem.dimension", "the oracle run is 1D");
    if (interfaces.empty() && method != Method::nnwr) bad("partition.interfaces", "at least one interface expected");
    const auto w = words(guess);
    const bool ok = (w.size() == 1 && (w[0] == "poly-t2" || w[0] == "t-sin-y" || w[0] == "zero")) ||
                    guess_seed(guess).has_value();
    if (!ok) bad("iteration.guess", "expected poly-t2, t-sin-y, zero or random <seed>");
    if (dimension == 1 && w[0] == "t-sin-y") bad("iteration.guess", "t-sin-y needs a strip problem");
    const auto sw = words(speed);
    if (sw.empty()) bad("problem.speed", "missing");
    if (dimension == 2 && sw[0] != "constant") bad("problem.speed", "strip problems use a constant speed");
    if (method == Method::oracle_nnwr && sw[0] != "constant") bad("problem.speed", "the oracle needs a constant speed");
}

namespace {

template <typename Fn, std::size_t N>
Fn expr_fn(const std::string& text, const std::array<std::string, N>& vars, const char* key) {
    try {
        const auto e = Expression::parse(text, std::vector<std::string>(vars.begin(), vars.end()));
        if (e.is_constant() && e.eval({}) == 0.0) return Fn{};
        if constexpr (N == 1) {
            return [e](double a) { return e.eval(std::array{a}); };
        } else if constexpr (N == 2) {
            return [e](double a, double b) { return e.eval(std::array{a, b}); };
        } else {
            return [e](double a, double b, double c) { return e.eval(std::array{a, b, c}); };
        }
    } catch (const ValidationError& err) {
        throw ValidationError(std::string(key) + ": " + err.what());
    }
}

}  // namespace

SpeedProfile make_speed(const RunConfig& cfg) {
    const auto w = words(cfg.speed);
    auto bad = [&](const std::string& what) -> SpeedProfile {
        throw ValidationError("problem.speed: " + what + " in '" + cfg.speed + "'");
    };
    try {
        if (w.empty()) return bad("missing");
        if (w[0] == "constant") {
            if (w.size() != 2) return bad("expected 'constant <c>'");
            return SpeedProfile::constant(eval_constant(w[1]));
        }
        if (w[0] == "piecewise") {
            std::vector<double> vals;
            for (std::size_t i = 1; i < w.size(); ++i) vals.push_back(eval_constant(w[i]));
            if (vals.size() != cfg.interfaces.size() + 1) return bad("need one value per subdomain");
            return SpeedProfile::piecewise(cfg.interfaces, vals);
        }
        if (w[0] == "table") {
            std::vector<double> xs, cs;
            for (std::size_t i = 1; i < w.size(); ++i) {
                const auto colon = w[i].find(':');
                if (colon == std::string::npos) return bad("table entries are x:c");
                xs.push_back(eval_constant(w[i].substr(0, colon)));
                cs.push_back(eval_constant(w[i].substr(colon + 1)));
            }
            return SpeedProfile::table(xs, cs);
        }
        if (w[0] == "expr") {
            const auto e = Expression::parse(trim(cfg.speed.substr(4)), {"x"});
            const auto n = static_cast<std::size_t>(std::llround((cfg.x_hi - cfg.x_lo) / cfg.dx));
            std::vector<double> xs, cs;
            for (std::size_t j = 0; j <= std::max<std::size_t>(n, 1); ++j) {
                const double x = j == n ? cfg.x_hi : cfg.x_lo + static_cast<double>(j) * cfg.dx;
                xs.push_back(x);
                cs.push_back(e.eval(std::array{x}));
            }
            return SpeedProfile::table(xs, cs);
        }
    } catch (const ValidationError& e) {
        return bad(e.what());
    }
    return bad("unknown speed kind");
}

WaveProblem1D make_problem_1d(const RunConfig& cfg) {
    WaveProblem1D p;
    p.x_lo = cfg.x_lo;
    p.x_hi = cfg.x_hi;
    p.T = cfg.T;
    p.speed = make_speed(cfg);
    p.source = expr_fn<SpaceTimeFunction>(cfg.source, std::array<std::string, 2>{"x", "t"}, "problem.source");
    p.u0 = expr_fn<SpaceFunction>(cfg.u0, std::array<std::string, 1>{"x"}, "problem.u0");
    p.v0 = expr_fn<SpaceFunction>(cfg.v0, std::array<std::string, 1>{"x"}, "problem.v0");
    p.g_lo = expr_fn<TimeFunction>(cfg.g_lo, std::array<std::string, 1>{"t"}, "problem.g_lo");
    p.g_hi = expr_fn<TimeFunction>(cfg.g_hi, std::array<std::string, 1>{"t"}, "problem.g_hi");
    p.validate();
    return p;
}

WaveProblem2D make_problem_2d(const RunConfig& cfg) {
    WaveProblem2D p;
    p.x_lo = cfg.x_lo;
    p.x_hi = cfg.x_hi;
    p.y_lo = cfg.y_lo;
    p.y_hi = cfg.y_hi;
    p.T = cfg.T;
    const SpeedProfile s = make_speed(cfg);
    p.c = *s.constant_value();
    p.source = expr_fn<PlaneTimeFunction>(cfg.source, std::array<std::string, 3>{"x", "y", "t"}, "problem.source");
    p.u0 = expr_fn<PlaneFunction>(cfg.u0, std::array<std::string, 2>{"x", "y"}, "problem.u0");
    p.v0 = expr_fn<PlaneFunction>(cfg.v0, std::array<std::string, 2>{"x", "y"}, "problem.v0");
    p.g_xlo = expr_fn<SpaceTimeFunction>(cfg.g_lo, std::array<std::string, 2>{"y", "t"}, "problem.g_lo");
    p.g_xhi = expr_fn<SpaceTimeFunction>(cfg.g_hi, std::array<std::string, 2>{"y", "t"}, "problem.g_hi");
    p.g_ylo = expr_fn<SpaceTimeFunction>(cfg.g_ylo, std::array<std::string, 2>{"x", "t"}, "problem.g_ylo");
    p.g_yhi = expr_fn<SpaceTimeFunction>(cfg.g_yhi, std::array<std::string, 2>{"x", "t"}, "problem.g_yhi");
    p.validate();
    return p;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream os;
    os << "[run]\n"
       << "method = " << to_string(c.method) << "\n"
       << "name = " << c.name << "\n\n"
       << "[problem]\n"
       << "dimension = " << c.dimension << "\n"
       << "x_lo = " << fmt(c.x_lo) << "\n"
       << "x_hi = " << fmt(c.x_hi) << "\n";
    if (c.dimension == 2) os << "y_lo = " << fmt(c.y_lo) << "\n" << "y_hi = " << fmt(c.y_hi) << "\n";
    os << "T = " << fmt(c.T) << "\n"
       << "speed = " << c.speed << "\n"
       << "u0 = " << c.u0 << "\n"
       << "v0 = " << c.v0 << "\n"
       << "source = " << c.source << "\n"
       << "g_lo = " << c.g_lo << "\n"
       << "g_hi = " << c.g_hi << "\n";
    if (c.dimension == 2) os << "g_ylo = " << c.g_ylo << "\n" << "g_yhi = " << c.g_yhi << "\n";
    os << "\n[partition]\n"
       << "interfaces = " << fmt_list(c.interfaces) << "\n"
       << "dx = " << fmt(c.dx) << "\n"
       << "dt = " << fmt_list(c.dt) << "\n";
    if (c.dimension == 2) os << "dy = " << fmt(c.dy) << "\n";
    os << "overlap = " << c.overlap << "\n\n"
       << "[iteration]\n"
       << "theta = " << fmt(c.theta) << "\n"
       << "p = " << fmt(c.p) << "\n"
       << "max_iterations = " << c.max_iterations << "\n"
       << "tolerance = " << fmt(c.tolerance) << "\n"
       << "guess = " << c.guess << "\n"
       << "parallel = " << (c.parallel ? "true" : "false") << "\n\n"
       << "[output]\n"
       << "dir = " << c.output_dir << "\n";
    return os.str();
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["method"] = to_string(c.method);
    j["name"] = c.name;
    j["problem"] = {{"dimension", c.dimension}, {"x_lo", c.x_lo},   {"x_hi", c.x_hi},     {"y_lo", c.y_lo},
                    {"y_hi", c.y_hi},           {"T", c.T},         {"speed", c.speed},   {"u0", c.u0},
                    {"v0", c.v0},               {"source", c.source}, {"g_lo", c.g_lo},   {"g_hi", c.g_hi},
                    {"g_ylo", c.g_ylo},         {"g_yhi", c.g_yhi}};
    j["partition"] = {{"interfaces", c.interfaces}, {"dx", c.dx}, {"dt", c.dt}, {"dy", c.dy}, {"overlap", c.overlap}};
    j["iteration"] = {{"theta", c.theta},
                      {"p", c.p},
                      {"max_iterations", c.max_iterations},
                      {"tolerance", c.tolerance},
                      {"guess", c.guess},
                      {"parallel", c.parallel}};
    j["output"] = {{"dir", c.output_dir}};
    return j;
}

}  // namespace wavewr
