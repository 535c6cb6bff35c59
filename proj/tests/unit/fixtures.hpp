#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "wavewr/discretization.hpp"
#include "wavewr/partition.hpp"
#include "wavewr/problem.hpp"

namespace fixtures {

using namespace wavewr;

inline ChainLayout1D chain(double lo, double hi, std::vector<double> interfaces, double T, double dx, double dt,
                           WaveProblem1D p = {}) {
    p.x_lo = lo;
    p.x_hi = hi;
    p.T = T;
    Partition part = build_partition(p, interfaces, GridSteps{dx, {dt}, 0});
    return ChainLayout1D(std::move(p), std::move(part));
}

/// Chain (0,5) cut at 0.6, 1.2, 1.7, 4.0 with c = 1 at unit Courant number.
inline ChainLayout1D five_widths(double T, WaveProblem1D p = {}) {
    return chain(0, 5, {0.6, 1.2, 1.7, 4.0}, T, 0.02, 0.02, std::move(p));
}

inline WaveProblem1D forced() {
    WaveProblem1D p;
    p.u0 = [](double x) { return std::sin(x) * x; };
    p.v0 = [](double x) { return std::exp(-x); };
    p.source = [](double x, double t) { return x * t; };
    p.g_lo = [](double t) { return t * t; };
    p.g_hi = [](double t) { return std::sin(2 * t); };
    return p;
}

inline ChainLayout2D strips(std::vector<double> interfaces, double T, double dx, double dy, double dt,
                            WaveProblem2D p = {}) {
    p.x_lo = 0;
    p.x_hi = 1;
    p.y_lo = 0;
    p.y_hi = std::numbers::pi;
    p.T = T;
    Partition part = build_partition(p, interfaces, GridSteps{dx, {dt}, dy});
    return ChainLayout2D(std::move(p), std::move(part));
}

inline double max_abs(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace fixtures
