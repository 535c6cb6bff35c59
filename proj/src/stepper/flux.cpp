#include <cmath>

#include "wavewr/errors.hpp"
#include "wavewr/stepper.hpp"

namespace wavewr {

namespace {

// Second time difference at level m; level 0 uses the Taylor start so that the
// ghost-node first step is inverted exactly.
template <typename At>
double second_time_difference(At at, std::size_t m, double dt, double v0) {
    if (m == 0) return 2.0 * (at(1) - at(0) - dt * v0) / (dt * dt);
    return (at(m + 1) - 2.0 * at(m) + at(m - 1)) / (dt * dt);
}

template <typename At>
double time_derivative(At at, std::size_t m, std::size_t steps, double dt, double v0) {
    if (m == 0) return v0;
    if (m == steps) return (at(m) - at(m - 1)) / dt;
    return (at(m + 1) - at(m - 1)) / (2.0 * dt);
}

// The last level has no successor; extend the flux linearly.
void extrapolate_last(SpaceTimeTrace& tr) {
    const std::size_t M = tr.samples() - 1;
    for (std::size_t l = 0; l < tr.width(); ++l) {
        tr.at(M, l) = M >= 2 ? 2.0 * tr.at(M - 1, l) - tr.at(M - 2, l) : tr.at(M - 1, l);
    }
}

}  // namespace

SpaceTimeTrace extract_normal_derivative(const SubdomainField1D& field, Side side, FluxStencil stencil) {
    const Grid1D& g = field.grid();
    const std::size_t n = g.nodes();
    if (n < (stencil == FluxStencil::one_sided ? 3u : 2u)) throw ValidationError("too few nodes for flux extraction");
    const double dx = g.dx;
    const double dt = field.time().dt();
    const std::size_t b = side == Side::left ? 0 : n - 1;
    const std::size_t i1 = side == Side::left ? 1 : n - 2;
    const std::size_t i2 = n < 3 ? i1 : (side == Side::left ? 2 : n - 3);
    const SubdomainSetup1D& s = field.setup();

    SpaceTimeTrace tr(field.time().times(), 1, TraceKind::flux);
    const std::size_t M = field.time().steps;
    if (stencil == FluxStencil::one_sided) {
        for (std::size_t m = 0; m <= M; ++m) {
            tr.at(m) = (3.0 * field.at(m, b) - 4.0 * field.at(m, i1) + field.at(m, i2)) / (2.0 * dx);
        }
        return tr;
    }
    const double c2 = s.c[b] * s.c[b];
    const double xb = g.x(b);
    auto at = [&](std::size_t m) { return field.at(m, b); };
    for (std::size_t m = 0; m < M; ++m) {
        const double f = eval_or_zero(s.source, xb, field.time().time(m));
        tr.at(m) = (field.at(m, b) - field.at(m, i1)) / dx +
                   dx / (2.0 * c2) * (second_time_difference(at, m, dt, s.v0[b]) - f);
    }
    extrapolate_last(tr);
    return tr;
}

SpaceTimeTrace extract_normal_derivative(const SubdomainField2D& field, Side side, FluxStencil stencil) {
    const Grid2D& g = field.grid();
    const std::size_t nx = g.x.nodes();
    const std::size_t ny = g.y.nodes();
    if (nx < (stencil == FluxStencil::one_sided ? 3u : 2u)) throw ValidationError("too few nodes for flux extraction");
    const double dx = g.x.dx;
    const double dy = g.y.dx;
    const double dt = field.time().dt();
    const std::size_t b = side == Side::left ? 0 : nx - 1;
    const std::size_t i1 = side == Side::left ? 1 : nx - 2;
    const std::size_t i2 = nx < 3 ? i1 : (side == Side::left ? 2 : nx - 3);
    const SubdomainSetup2D& s = field.setup();
    const std::size_t M = field.time().steps;

    SpaceTimeTrace tr(field.time().times(), ny, TraceKind::flux);
    auto one_sided = [&](std::size_t m, std::size_t l) {
        return (3.0 * field.at(m, b, l) - 4.0 * field.at(m, i1, l) + field.at(m, i2, l)) / (2.0 * dx);
    };
    if (stencil == FluxStencil::one_sided) {
        for (std::size_t m = 0; m <= M; ++m) {
            for (std::size_t l = 0; l < ny; ++l) tr.at(m, l) = one_sided(m, l);
        }
        return tr;
    }
    const double c2 = s.c * s.c;
    const double xb = g.x.x(b);
    for (std::size_t m = 0; m < M; ++m) {
        const double t = field.time().time(m);
        tr.at(m, 0) = one_sided(m, 0);
        tr.at(m, ny - 1) = one_sided(m, ny - 1);
        for (std::size_t l = 1; l + 1 < ny; ++l) {
            auto at = [&](std::size_t mm) { return field.at(mm, b, l); };
            const double dyy =
                (field.at(m, b, l + 1) - 2.0 * field.at(m, b, l) + field.at(m, b, l - 1)) / (dy * dy);
            const double f = s.source ? s.source(xb, g.y.x(l), t) : 0.0;
            const double v0 = s.v0[b * ny + l];
            tr.at(m, l) = (field.at(m, b, l) - field.at(m, i1, l)) / dx +
                          dx / (2.0 * c2) * (second_time_difference(at, m, dt, v0) - c2 * dyy - f);
        }
    }
    extrapolate_last(tr);
    return tr;
}

SpaceTimeTrace first_order_datum(const SubdomainField1D& field, std::size_t j, int normal, double c, double p) {
    const std::size_t n = field.grid().nodes();
    if (j == 0 || j + 1 >= n) throw ValidationError("first-order datum needs an interior node");
    const double dx = field.grid().dx;
    const double dt = field.time().dt();
    const std::size_t M = field.time().steps;
    const double v0 = field.setup().v0[j];
    SpaceTimeTrace tr(field.time().times(), 1, TraceKind::flux);
    auto at = [&](std::size_t m) { return field.at(m, j); };
    for (std::size_t m = 0; m <= M; ++m) {
        const double dudx = (field.at(m, j + 1) - field.at(m, j - 1)) / (2.0 * dx);
        tr.at(m) = normal * dudx + time_derivative(at, m, M, dt, v0) / c + p * field.at(m, j);
    }
    return tr;
}

SpaceTimeTrace first_order_datum(const SubdomainField2D& field, std::size_t i, int normal, double c, double p) {
    const std::size_t nx = field.grid().x.nodes();
    const std::size_t ny = field.grid().y.nodes();
    if (i == 0 || i + 1 >= nx) throw ValidationError("first-order datum needs an interior column");
    const double dx = field.grid().x.dx;
    const double dt = field.time().dt();
    const std::size_t M = field.time().steps;
    SpaceTimeTrace tr(field.time().times(), ny, TraceKind::flux);
    for (std::size_t l = 0; l < ny; ++l) {
        const double v0 = field.setup().v0[i * ny + l];
        auto at = [&](std::size_t m) { return field.at(m, i, l); };
        for (std::size_t m = 0; m <= M; ++m) {
            const double dudx = (field.at(m, i + 1, l) - field.at(m, i - 1, l)) / (2.0 * dx);
            tr.at(m, l) = normal * dudx + time_derivative(at, m, M, dt, v0) / c + p * field.at(m, i, l);
        }
    }
    return tr;
}

}  // namespace wavewr
