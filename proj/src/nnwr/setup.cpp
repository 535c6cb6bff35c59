#include <cmath>
#include <sstream>

#include "wavewr/discretization.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

std::size_t node_index(const Grid1D& g, double x) {
    const double r = (x - g.x_lo) / g.dx;
    const double j = std::round(r);
    if (j < 0.0 || j > static_cast<double>(g.cells) || std::abs(r - j) > 1e-8) {
        std::ostringstream os;
        os << "coordinate " << x << " is not a grid node";
        throw ValidationError(os.str());
    }
    return static_cast<std::size_t>(j);
}

// ---------------------------------------------------------------- 1D

ChainLayout1D::ChainLayout1D(WaveProblem1D problem, Partition partition)
    : problem_(std::move(problem)), partition_(std::move(partition)) {
    if (partition_.is_2d()) throw ValidationError("2D partition given to a 1D layout");
    for (std::size_t s = 0; s < partition_.subdomains(); ++s) {
        full_.push_back(make_setup(partition_.interfaces[s], partition_.cells[s], partition_.dx[s],
                                   partition_.time[s], false));
        homogeneous_.push_back(make_setup(partition_.interfaces[s], partition_.cells[s], partition_.dx[s],
                                          partition_.time[s], true));
    }
}

SubdomainSetup1D ChainLayout1D::make_setup(double x_lo, std::size_t cells, double dx, const TimeGrid& time,
                                           bool homogeneous) const {
    SubdomainSetup1D s;
    s.grid = Grid1D{x_lo, dx, cells};
    s.time = time;
    const std::size_t n = s.grid.nodes();
    s.c.resize(n);
    s.u0.assign(n, 0.0);
    s.v0.assign(n, 0.0);
    const double tol = 1e-9 * dx;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = s.grid.x(j);
        if (j == 0) {
            s.c[j] = problem_.speed.at(x, +1);
        } else if (j == cells) {
            s.c[j] = problem_.speed.at(x, -1);
        } else {
            s.c[j] = std::sqrt(problem_.speed.mono_c2(x, tol));
        }
        if (!homogeneous) {
            s.u0[j] = eval_or_zero(problem_.u0, x);
            s.v0[j] = eval_or_zero(problem_.v0, x);
        }
    }
    if (!homogeneous) s.source = problem_.source;
    return s;
}

ChainLayout1D::Field ChainLayout1D::solve(std::size_t s, const BoundarySpec& bc, bool homogeneous) const {
    return solve_subdomain_1d(setup(s, homogeneous), bc);
}

SpaceTimeTrace ChainLayout1D::physical_data(Side side, const std::vector<double>& times, bool homogeneous) const {
    SpaceTimeTrace tr(times, 1);
    if (homogeneous) return tr;
    const TimeFunction& g = side == Side::left ? problem_.g_lo : problem_.g_hi;
    for (std::size_t m = 0; m < times.size(); ++m) tr.at(m) = eval_or_zero(g, times[m]);
    return tr;
}

std::vector<double> ChainLayout1D::initial_at(double x) const { return {eval_or_zero(problem_.u0, x)}; }

SpaceTimeTrace ChainLayout1D::side_trace(const Field& f, Side side) {
    return f.node_trace(side == Side::left ? 0 : f.grid().cells);
}

ChainLayout1D::Field ChainLayout1D::solve_mono(bool homogeneous) const {
    if (!partition_.uniform_dx()) throw ValidationError("mono-domain reference needs a uniform dx");
    std::size_t cells = 0;
    for (std::size_t c : partition_.cells) cells += c;
    const SubdomainSetup1D s =
        make_setup(partition_.x_lo(), cells, partition_.dx.front(), partition_.finest_time(), homogeneous);
    BoundarySpec bc{BoundaryCondition::dirichlet(physical_data(Side::left, s.time.times(), homogeneous)),
                    BoundaryCondition::dirichlet(physical_data(Side::right, s.time.times(), homogeneous))};
    return solve_subdomain_1d(s, bc);
}

SpaceTimeTrace ChainLayout1D::trace_at(const Field& mono, double x) {
    return mono.node_trace(node_index(mono.grid(), x));
}

// ---------------------------------------------------------------- 2D

ChainLayout2D::ChainLayout2D(WaveProblem2D problem, Partition partition)
    : problem_(std::move(problem)), partition_(std::move(partition)) {
    if (!partition_.is_2d()) throw ValidationError("1D partition given to a 2D layout");
    for (std::size_t s = 0; s < partition_.subdomains(); ++s) {
        full_.push_back(make_setup(partition_.interfaces[s], partition_.cells[s], partition_.dx[s],
                                   partition_.time[s], false));
        homogeneous_.push_back(make_setup(partition_.interfaces[s], partition_.cells[s], partition_.dx[s],
                                          partition_.time[s], true));
    }
}

SubdomainSetup2D ChainLayout2D::make_setup(double x_lo, std::size_t cells, double dx, const TimeGrid& time,
                                           bool homogeneous) const {
    SubdomainSetup2D s;
    s.grid = Grid2D{Grid1D{x_lo, dx, cells}, y_grid()};
    s.time = time;
    s.c = problem_.c;
    const std::size_t nx = s.grid.x.nodes();
    const std::size_t ny = s.grid.y.nodes();
    s.u0.assign(nx * ny, 0.0);
    s.v0.assign(nx * ny, 0.0);
    if (!homogeneous) {
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t l = 0; l < ny; ++l) {
                s.u0[i * ny + l] = eval_or_zero(problem_.u0, s.grid.x.x(i), s.grid.y.x(l));
                s.v0[i * ny + l] = eval_or_zero(problem_.v0, s.grid.x.x(i), s.grid.y.x(l));
            }
        }
        s.source = problem_.source;
        s.g_ylo = problem_.g_ylo;
        s.g_yhi = problem_.g_yhi;
    }
    return s;
}

ChainLayout2D::Field ChainLayout2D::solve(std::size_t s, const BoundarySpec& bc, bool homogeneous) const {
    return solve_subdomain_2d(setup(s, homogeneous), bc);
}

SpaceTimeTrace ChainLayout2D::physical_data(Side side, const std::vector<double>& times, bool homogeneous) const {
    SpaceTimeTrace tr(times, width());
    if (homogeneous) return tr;
    const SpaceTimeFunction& g = side == Side::left ? problem_.g_xlo : problem_.g_xhi;
    const Grid1D yg = y_grid();
    for (std::size_t m = 0; m < times.size(); ++m) {
        for (std::size_t l = 0; l < width(); ++l) tr.at(m, l) = eval_or_zero(g, yg.x(l), times[m]);
    }
    return tr;
}

std::vector<double> ChainLayout2D::initial_at(double x) const {
    const Grid1D yg = y_grid();
    std::vector<double> v(width());
    for (std::size_t l = 0; l < v.size(); ++l) v[l] = eval_or_zero(problem_.u0, x, yg.x(l));
    return v;
}

double ChainLayout2D::pinned_value(double x, std::size_t l, double t) const {
    return l == 0 ? eval_or_zero(problem_.g_ylo, x, t) : eval_or_zero(problem_.g_yhi, x, t);
}

SpaceTimeTrace ChainLayout2D::side_trace(const Field& f, Side side) {
    return f.column_trace(side == Side::left ? 0 : f.grid().x.cells);
}

ChainLayout2D::Field ChainLayout2D::solve_mono(bool homogeneous) const {
    if (!partition_.uniform_dx()) throw ValidationError("mono-domain reference needs a uniform dx");
    std::size_t cells = 0;
    for (std::size_t c : partition_.cells) cells += c;
    const SubdomainSetup2D s =
        make_setup(partition_.x_lo(), cells, partition_.dx.front(), partition_.finest_time(), homogeneous);
    BoundarySpec bc{BoundaryCondition::dirichlet(physical_data(Side::left, s.time.times(), homogeneous)),
                    BoundaryCondition::dirichlet(physical_data(Side::right, s.time.times(), homogeneous))};
    return solve_subdomain_2d(s, bc);
}

SpaceTimeTrace ChainLayout2D::trace_at(const Field& mono, double x) {
    return mono.column_trace(node_index(mono.grid().x, x));
}

}  // namespace wavewr
