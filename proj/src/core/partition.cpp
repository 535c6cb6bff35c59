#include "wavewr/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavewr/errors.hpp"

namespace wavewr {

TimeGrid TimeGrid::from_step(double T, double dt) {
    if (!(T > 0.0)) throw ValidationError("time window T must be positive");
    if (!(dt > 0.0)) throw ValidationError("time step must be positive");
    const double n = std::ceil(T / dt - 1e-9);
    return TimeGrid{T, static_cast<std::size_t>(std::max(1.0, n))};
}

double TimeGrid::time(std::size_t m) const {
    return m == steps ? T : T * static_cast<double>(m) / static_cast<double>(steps);
}

std::vector<double> TimeGrid::times() const {
    std::vector<double> t(size());
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = time(m);
    return t;
}

bool Partition::uniform_dx() const {
    return std::all_of(dx.begin(), dx.end(), [&](double d) { return d == dx.front(); });
}

TimeGrid Partition::finest_time() const {
    return *std::max_element(time.begin(), time.end(),
                             [](const TimeGrid& a, const TimeGrid& b) { return a.steps < b.steps; });
}

namespace {

Partition build_chain(double x_lo, double x_hi, double T, const std::vector<double>& interior,
                      const GridSteps& steps) {
    if (!(steps.dx > 0.0)) throw ValidationError("spatial step dx must be positive");
    Partition p;
    p.interfaces.push_back(x_lo);
    for (double x : interior) {
        if (!(x > p.interfaces.back())) {
            throw ValidationError("interfaces must be strictly increasing and inside the domain");
        }
        p.interfaces.push_back(x);
    }
    if (!(x_hi > p.interfaces.back())) {
        throw ValidationError("interfaces must be strictly increasing and inside the domain");
    }
    p.interfaces.push_back(x_hi);

    const std::size_t n = p.interfaces.size() - 1;
    if (steps.dt.size() != 1 && steps.dt.size() != n) {
        throw ValidationError("expected one time step or one per subdomain");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double h = p.interfaces[i + 1] - p.interfaces[i];
        const double ratio = h / steps.dx;
        const double cells = std::round(ratio);
        if (cells < 1.0 || std::abs(ratio - cells) > 1e-9 * std::max(1.0, ratio)) {
            std::ostringstream os;
            os << "subdomain " << i + 1 << " width " << h << " is not a multiple of dx=" << steps.dx;
            throw ValidationError(os.str());
        }
        p.widths.push_back(h);
        p.dx.push_back(steps.dx);
        p.cells.push_back(static_cast<std::size_t>(cells));
        p.time.push_back(TimeGrid::from_step(T, steps.dt.size() == 1 ? steps.dt.front() : steps.dt[i]));
    }
    p.h_min = *std::min_element(p.widths.begin(), p.widths.end());
    return p;
}

[[noreturn]] void report_cfl(std::size_t sub, double dt, double max_dt) {
    std::ostringstream os;
    os.precision(12);
    os << "CFL violated on subdomain " << sub + 1 << ": dt=" << dt << " exceeds maximum admissible dt=" << max_dt;
    throw ValidationError(os.str());
}

}  // namespace

Partition build_partition(const WaveProblem1D& problem, const std::vector<double>& interior_interfaces,
                          const GridSteps& steps) {
    problem.validate();
    Partition p = build_chain(problem.x_lo, problem.x_hi, problem.T, interior_interfaces, steps);
    for (std::size_t i = 0; i < p.subdomains(); ++i) {
        const double c = problem.speed.max_on(p.interfaces[i], p.interfaces[i + 1]);
        p.speed.push_back(c);
        const double max_dt = p.dx[i] / c;
        if (p.time[i].dt() > max_dt * (1.0 + 1e-12)) report_cfl(i, p.time[i].dt(), max_dt);
    }
    return p;
}

Partition build_partition(const WaveProblem2D& problem, const std::vector<double>& interior_interfaces,
                          const GridSteps& steps) {
    problem.validate();
    if (!(steps.dy > 0.0)) throw ValidationError("spatial step dy must be positive");
    Partition p = build_chain(problem.x_lo, problem.x_hi, problem.T, interior_interfaces, steps);
    const double ly = problem.y_hi - problem.y_lo;
    p.y_lo = problem.y_lo;
    p.y_hi = problem.y_hi;
    p.y_cells = static_cast<std::size_t>(std::max(2.0, std::round(ly / steps.dy)));
    p.dy = ly / static_cast<double>(p.y_cells);
    for (std::size_t i = 0; i < p.subdomains(); ++i) {
        p.speed.push_back(problem.c);
        const double max_dt = 1.0 / (problem.c * std::sqrt(1.0 / (p.dx[i] * p.dx[i]) + 1.0 / (p.dy * p.dy)));
        if (p.time[i].dt() > max_dt * (1.0 + 1e-12)) report_cfl(i, p.time[i].dt(), max_dt);
    }
    return p;
}

}  // namespace wavewr
