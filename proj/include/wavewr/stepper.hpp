#pragma once

#include <cstddef>
#include <vector>

#include "wavewr/partition.hpp"
#include "wavewr/problem.hpp"
#include "wavewr/trace.hpp"

namespace wavewr {

/// Uniform node grid x_j = x_lo + j dx, j = 0..cells.
struct Grid1D {
    double x_lo = 0.0;
    double dx = 1.0;
    std::size_t cells = 1;

    std::size_t nodes() const { return cells + 1; }
    double x(std::size_t j) const { return j == cells ? x_hi() : x_lo + static_cast<double>(j) * dx; }
    double x_hi() const { return x_lo + static_cast<double>(cells) * dx; }
};

/// Tensor grid of a strip: x-nodes by y-nodes, y-sides always Dirichlet.
struct Grid2D {
    Grid1D x;
    Grid1D y;
    std::size_t nodes() const { return x.nodes() * y.nodes(); }
};

/// Condition on one x-side of a subdomain. `data` lives on the subdomain's own
/// time grid (width 1 in 1D, the y-node count in 2D).
///  - dirichlet:   u = data
///  - neumann:     outward normal derivative du/dn = data
///  - first_order: du/dn + (1/c) du/dt + p u = data
struct BoundaryCondition {
    enum class Kind { dirichlet, neumann, first_order };
    Kind kind = Kind::dirichlet;
    SpaceTimeTrace data;
    double p = 0.0;

    static BoundaryCondition dirichlet(SpaceTimeTrace data);
    static BoundaryCondition neumann(SpaceTimeTrace data);
    static BoundaryCondition first_order(SpaceTimeTrace data, double p);
};

struct BoundarySpec {
    BoundaryCondition left;
    BoundaryCondition right;
};

/// Everything but the x-side conditions for one 1D subdomain solve.
struct SubdomainSetup1D {
    Grid1D grid;
    TimeGrid time;
    std::vector<double> c;   ///< speed at each node
    std::vector<double> u0;  ///< initial displacement at each node
    std::vector<double> v0;  ///< initial velocity at each node
    SpaceTimeFunction source;
};

struct SubdomainSetup2D {
    Grid2D grid;
    TimeGrid time;
    double c = 1.0;
    std::vector<double> u0;  ///< node index i * ny_nodes + l
    std::vector<double> v0;
    PlaneTimeFunction source;
    SpaceTimeFunction g_ylo;  ///< (x, t)
    SpaceTimeFunction g_yhi;
};

/// Displacement u[m][j] on a subdomain. Keeps its setup so fluxes can be
/// formed consistently with the scheme.
class SubdomainField1D {
public:
    SubdomainField1D(SubdomainSetup1D setup, std::vector<double> values);

    const SubdomainSetup1D& setup() const { return setup_; }
    const Grid1D& grid() const { return setup_.grid; }
    const TimeGrid& time() const { return setup_.time; }
    double at(std::size_t m, std::size_t j) const { return values_[m * setup_.grid.nodes() + j]; }
    const std::vector<double>& values() const { return values_; }
    /// Time series at node j as a trace over this field's time grid.
    SpaceTimeTrace node_trace(std::size_t j) const;

private:
    SubdomainSetup1D setup_;
    std::vector<double> values_;
};

class SubdomainField2D {
public:
    SubdomainField2D(SubdomainSetup2D setup, std::vector<double> values);

    const SubdomainSetup2D& setup() const { return setup_; }
    const Grid2D& grid() const { return setup_.grid; }
    const TimeGrid& time() const { return setup_.time; }
    double at(std::size_t m, std::size_t i, std::size_t l) const {
        return values_[(m * setup_.grid.x.nodes() + i) * setup_.grid.y.nodes() + l];
    }
    const std::vector<double>& values() const { return values_; }
    /// Column x = x_i over all y-nodes and times.
    SpaceTimeTrace column_trace(std::size_t i) const;

private:
    SubdomainSetup2D setup_;
    std::vector<double> values_;
};

/// Explicit leapfrog on one interval. The first step uses the Taylor formula
/// with u_tt replaced by the PDE; Neumann and first-order sides use a ghost node.
SubdomainField1D solve_subdomain_1d(const SubdomainSetup1D& setup, const BoundarySpec& bc);

/// 5-point leapfrog on one strip.
SubdomainField2D solve_subdomain_2d(const SubdomainSetup2D& setup, const BoundarySpec& bc);

enum class Side { left, right };

enum class FluxStencil {
    /// (3u_J - 4u_{J-1} + u_{J-2}) / (2dx) with the outward sign.
    one_sided,
    /// Flux that, imposed through the ghost-node Neumann condition, reproduces
    /// the field exactly: (u_J - u_{J-1})/dx + dx/(2c^2) (D_tt u_J - [c^2 D_yy u_J] - f).
    scheme_consistent,
};

/// Outward normal derivative on one x-side at every time level (and y-node).
SpaceTimeTrace extract_normal_derivative(const SubdomainField1D& field, Side side,
                                         FluxStencil stencil = FluxStencil::one_sided);
SpaceTimeTrace extract_normal_derivative(const SubdomainField2D& field, Side side,
                                         FluxStencil stencil = FluxStencil::one_sided);

/// Data B u = du/dn + (1/c) du/dt + p u of a field at interior node j, with the
/// outward normal of the receiving subdomain given by `normal` (+1 or -1).
/// Uses the same differences as the ghost-node imposition so that exact data
/// reproduce the field.
SpaceTimeTrace first_order_datum(const SubdomainField1D& field, std::size_t j, int normal, double c, double p);
SpaceTimeTrace first_order_datum(const SubdomainField2D& field, std::size_t i, int normal, double c, double p);

}  // namespace wavewr
