#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavewr/errors.hpp"
#include "wavewr/stepper.hpp"

namespace wavewr {

BoundaryCondition BoundaryCondition::dirichlet(SpaceTimeTrace data) {
    data.set_kind(TraceKind::dirichlet);
    return {Kind::dirichlet, std::move(data), 0.0};
}

BoundaryCondition BoundaryCondition::neumann(SpaceTimeTrace data) {
    data.set_kind(TraceKind::flux);
    return {Kind::neumann, std::move(data), 0.0};
}

BoundaryCondition BoundaryCondition::first_order(SpaceTimeTrace data, double p) {
    if (p < 0.0) throw ValidationError("first-order transmission parameter p must be >= 0");
    data.set_kind(TraceKind::flux);
    return {Kind::first_order, std::move(data), p};
}

SubdomainField1D::SubdomainField1D(SubdomainSetup1D setup, std::vector<double> values)
    : setup_(std::move(setup)), values_(std::move(values)) {}

SpaceTimeTrace SubdomainField1D::node_trace(std::size_t j) const {
    SpaceTimeTrace tr(setup_.time.times(), 1);
    for (std::size_t m = 0; m < tr.samples(); ++m) tr.at(m) = at(m, j);
    return tr;
}

namespace {

void check_bc(const BoundaryCondition& bc, const TimeGrid& time, std::size_t width, const char* side) {
    if (bc.data.samples() != time.size() || bc.data.width() != width) {
        std::ostringstream os;
        os << side << " boundary trace does not match the subdomain time grid (" << bc.data.samples() << "x"
           << bc.data.width() << " vs " << time.size() << "x" << width << ")";
        throw ValidationError(os.str());
    }
}

}  // namespace

SubdomainField1D solve_subdomain_1d(const SubdomainSetup1D& setup, const BoundarySpec& bc) {
    const Grid1D& g = setup.grid;
    const std::size_t n = g.nodes();
    const std::size_t steps = setup.time.steps;
    if (n < 2) throw ValidationError("subdomain needs at least two nodes");
    if (setup.c.size() != n || setup.u0.size() != n || setup.v0.size() != n) {
        throw ValidationError("subdomain samples do not match the grid");
    }
    check_bc(bc.left, setup.time, 1, "left");
    check_bc(bc.right, setup.time, 1, "right");

    const double dt = setup.time.dt();
    const double dx = g.dx;
    const double cmax = *std::max_element(setup.c.begin(), setup.c.end());
    if (cmax * dt / dx > 1.0 + 1e-12) {
        std::ostringstream os;
        os.precision(12);
        os << "CFL violated: dt=" << dt << " exceeds maximum admissible dt=" << dx / cmax;
        throw ValidationError(os.str());
    }

    std::vector<double> r2(n);
    for (std::size_t j = 0; j < n; ++j) r2[j] = (setup.c[j] * dt / dx) * (setup.c[j] * dt / dx);

    std::vector<double> vals((steps + 1) * n, 0.0);
    auto level = [&](std::size_t m) { return vals.data() + m * n; };

    std::copy(setup.u0.begin(), setup.u0.end(), level(0));
    if (bc.left.kind == BoundaryCondition::Kind::dirichlet) level(0)[0] = bc.left.data.at(0);
    if (bc.right.kind == BoundaryCondition::Kind::dirichlet) level(0)[n - 1] = bc.right.data.at(0);

    std::vector<double> f(n, 0.0);
    const std::size_t J = n - 1;

    for (std::size_t m = 0; m < steps; ++m) {
        const double t = setup.time.time(m);
        for (std::size_t j = 0; j < n; ++j) f[j] = eval_or_zero(setup.source, g.x(j), t);
        const double* u = level(m);
        const double* up = m > 0 ? level(m - 1) : nullptr;
        double* un = level(m + 1);
        const bool first = m == 0;

        auto advance = [&](std::size_t j, double ul, double ur) {
            const double lap = ur - 2.0 * u[j] + ul;
            if (first) return u[j] + dt * setup.v0[j] + 0.5 * r2[j] * lap + 0.5 * dt * dt * f[j];
            return 2.0 * u[j] - up[j] + r2[j] * lap + dt * dt * f[j];
        };

        for (std::size_t j = 1; j < J; ++j) un[j] = advance(j, u[j - 1], u[j + 1]);

        // Boundary node b with inner neighbour `in`.
        auto side = [&](const BoundaryCondition& cond, std::size_t b, std::size_t in) {
            switch (cond.kind) {
                case BoundaryCondition::Kind::dirichlet:
                    un[b] = cond.data.at(m + 1);
                    return;
                case BoundaryCondition::Kind::neumann: {
                    const double ghost = u[in] + 2.0 * dx * cond.data.at(m);
                    un[b] = advance(b, ghost, u[in]);
                    return;
                }
                case BoundaryCondition::Kind::first_order: {
                    const double c = setup.c[b];
                    const double G = cond.data.at(m);
                    if (first) {
                        const double ghost = u[in] + 2.0 * dx * (G - cond.p * u[b] - setup.v0[b] / c);
                        un[b] = advance(b, ghost, u[in]);
                    } else {
                        const double q = c * dt / dx;
                        const double rhs = 2.0 * u[b] - (1.0 - q) * up[b] +
                                           r2[b] * (2.0 * u[in] - 2.0 * u[b] + 2.0 * dx * (G - cond.p * u[b])) +
                                           dt * dt * f[b];
                        un[b] = rhs / (1.0 + q);
                    }
                    return;
                }
            }
        };
        side(bc.left, 0, 1);
        side(bc.right, J, J - 1);
    }
    return SubdomainField1D(setup, std::move(vals));
}

}  // namespace wavewr
