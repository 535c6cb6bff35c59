#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavewr/errors.hpp"
#include "wavewr/stepper.hpp"

namespace wavewr {

SubdomainField2D::SubdomainField2D(SubdomainSetup2D setup, std::vector<double> values)
    : setup_(std::move(setup)), values_(std::move(values)) {}

SpaceTimeTrace SubdomainField2D::column_trace(std::size_t i) const {
    const std::size_t ny = setup_.grid.y.nodes();
    SpaceTimeTrace tr(setup_.time.times(), ny);
    for (std::size_t m = 0; m < tr.samples(); ++m) {
        for (std::size_t l = 0; l < ny; ++l) tr.at(m, l) = at(m, i, l);
    }
    return tr;
}

SubdomainField2D solve_subdomain_2d(const SubdomainSetup2D& setup, const BoundarySpec& bc) {
    const Grid2D& g = setup.grid;
    const std::size_t nx = g.x.nodes();
    const std::size_t ny = g.y.nodes();
    const std::size_t nn = nx * ny;
    const std::size_t steps = setup.time.steps;
    if (nx < 2 || ny < 3) throw ValidationError("strip needs at least 2 x-nodes and 3 y-nodes");
    if (setup.u0.size() != nn || setup.v0.size() != nn) throw ValidationError("strip samples do not match the grid");
    for (const auto* cond : {&bc.left, &bc.right}) {
        if (cond->data.samples() != setup.time.size() || cond->data.width() != ny) {
            throw ValidationError("x-side trace does not match the strip time grid or y-nodes");
        }
    }

    const double dt = setup.time.dt();
    const double dx = g.x.dx;
    const double dy = g.y.dx;
    const double c = setup.c;
    const double courant = c * dt * std::sqrt(1.0 / (dx * dx) + 1.0 / (dy * dy));
    if (courant > 1.0 + 1e-12) {
        std::ostringstream os;
        os.precision(12);
        os << "CFL violated: dt=" << dt << " exceeds maximum admissible dt="
           << 1.0 / (c * std::sqrt(1.0 / (dx * dx) + 1.0 / (dy * dy)));
        throw ValidationError(os.str());
    }
    const double rx2 = (c * dt / dx) * (c * dt / dx);
    const double ry2 = (c * dt / dy) * (c * dt / dy);

    std::vector<double> vals((steps + 1) * nn, 0.0);
    auto level = [&](std::size_t m) { return vals.data() + m * nn; };
    auto idx = [ny](std::size_t i, std::size_t l) { return i * ny + l; };

    auto impose_dirichlet = [&](std::size_t m, double* u) {
        const double t = setup.time.time(m);
        if (bc.left.kind == BoundaryCondition::Kind::dirichlet) {
            for (std::size_t l = 0; l < ny; ++l) u[idx(0, l)] = bc.left.data.at(m, l);
        }
        if (bc.right.kind == BoundaryCondition::Kind::dirichlet) {
            for (std::size_t l = 0; l < ny; ++l) u[idx(nx - 1, l)] = bc.right.data.at(m, l);
        }
        for (std::size_t i = 0; i < nx; ++i) {
            u[idx(i, 0)] = eval_or_zero(setup.g_ylo, g.x.x(i), t);
            u[idx(i, ny - 1)] = eval_or_zero(setup.g_yhi, g.x.x(i), t);
        }
    };

    std::copy(setup.u0.begin(), setup.u0.end(), level(0));
    impose_dirichlet(0, level(0));

    std::vector<double> f(nn, 0.0);
    for (std::size_t m = 0; m < steps; ++m) {
        const double t = setup.time.time(m);
        if (setup.source) {
            for (std::size_t i = 0; i < nx; ++i) {
                for (std::size_t l = 0; l < ny; ++l) f[idx(i, l)] = setup.source(g.x.x(i), g.y.x(l), t);
            }
        }
        const double* u = level(m);
        const double* up = m > 0 ? level(m - 1) : nullptr;
        double* un = level(m + 1);
        const bool first = m == 0;

        auto advance = [&](std::size_t k, double ul, double ur, double ud, double uu) {
            const double lap = rx2 * (ur - 2.0 * u[k] + ul) + ry2 * (uu - 2.0 * u[k] + ud);
            if (first) return u[k] + dt * setup.v0[k] + 0.5 * lap + 0.5 * dt * dt * f[k];
            return 2.0 * u[k] - up[k] + lap + dt * dt * f[k];
        };

        for (std::size_t i = 1; i + 1 < nx; ++i) {
            for (std::size_t l = 1; l + 1 < ny; ++l) {
                const std::size_t k = idx(i, l);
                un[k] = advance(k, u[k - ny], u[k + ny], u[k - 1], u[k + 1]);
            }
        }

        auto side = [&](const BoundaryCondition& cond, std::size_t ib, std::size_t iin) {
            if (cond.kind == BoundaryCondition::Kind::dirichlet) return;
            for (std::size_t l = 1; l + 1 < ny; ++l) {
                const std::size_t k = idx(ib, l);
                const std::size_t kin = idx(iin, l);
                const double G = cond.data.at(m, l);
                if (cond.kind == BoundaryCondition::Kind::neumann) {
                    un[k] = advance(k, u[kin] + 2.0 * dx * G, u[kin], u[k - 1], u[k + 1]);
                } else if (first) {
                    const double ghost = u[kin] + 2.0 * dx * (G - cond.p * u[k] - setup.v0[k] / c);
                    un[k] = advance(k, ghost, u[kin], u[k - 1], u[k + 1]);
                } else {
                    const double q = c * dt / dx;
                    const double rhs = 2.0 * u[k] - (1.0 - q) * up[k] +
                                       rx2 * (2.0 * u[kin] - 2.0 * u[k] + 2.0 * dx * (G - cond.p * u[k])) +
                                       ry2 * (u[k + 1] - 2.0 * u[k] + u[k - 1]) + dt * dt * f[k];
                    un[k] = rhs / (1.0 + q);
                }
            }
        };
        side(bc.left, 0, 1);
        side(bc.right, nx - 1, nx - 2);
        impose_dirichlet(m + 1, un);
    }
    return SubdomainField2D(setup, std::move(vals));
}

}  // namespace wavewr
