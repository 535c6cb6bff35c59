#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace wavewr {

using TimeFunction = std::function<double(double t)>;
using SpaceFunction = std::function<double(double x)>;
using SpaceTimeFunction = std::function<double(double x, double t)>;
using PlaneFunction = std::function<double(double x, double y)>;
using PlaneTimeFunction = std::function<double(double x, double y, double t)>;

/// Wave speed c(x) on an interval: a constant, per-region constants, or a
/// sampled table interpolated linearly.
class SpeedProfile {
public:
    enum class Kind { constant, piecewise, table };

    static SpeedProfile constant(double c);
    /// `breakpoints` are the interior region boundaries; values.size() == breakpoints.size() + 1.
    static SpeedProfile piecewise(std::vector<double> breakpoints, std::vector<double> values);
    static SpeedProfile table(std::vector<double> x, std::vector<double> c);

    Kind kind() const { return kind_; }
    std::optional<double> constant_value() const;

    /// Speed at x. For piecewise profiles, `side` < 0 selects the left limit at a
    /// breakpoint and `side` > 0 the right limit.
    double at(double x, int side = 0) const;

    /// Squared speed used by a mono-domain stencil at node x. At a piecewise
    /// breakpoint this is the harmonic mean of the two one-sided c^2 values,
    /// which is what the flux-continuity interface condition produces.
    double mono_c2(double x, double tol) const;

    double min_value() const;
    double max_value() const;
    /// Largest speed over [a, b].
    double max_on(double a, double b) const;

    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return cs_; }

private:
    Kind kind_ = Kind::constant;
    std::vector<double> xs_;
    std::vector<double> cs_;
};

/// Second-order wave equation u_tt - c(x)^2 u_xx = f on (x_lo, x_hi) x (0, T).
struct WaveProblem1D {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double T = 1.0;
    SpeedProfile speed = SpeedProfile::constant(1.0);
    SpaceTimeFunction source;  ///< empty means f = 0
    SpaceFunction u0;          ///< empty means 0
    SpaceFunction v0;          ///< empty means 0
    TimeFunction g_lo;         ///< Dirichlet data at x_lo; empty means 0
    TimeFunction g_hi;         ///< Dirichlet data at x_hi; empty means 0

    void validate() const;
};

/// u_tt - c^2 (u_xx + u_yy) = f on a rectangle, Dirichlet data on all four sides.
struct WaveProblem2D {
    double x_lo = 0.0;
    double x_hi = 1.0;
    double y_lo = 0.0;
    double y_hi = 3.141592653589793;
    double T = 1.0;
    double c = 1.0;
    PlaneTimeFunction source;
    PlaneFunction u0;
    PlaneFunction v0;
    SpaceTimeFunction g_xlo;  ///< (y, t) on x = x_lo
    SpaceTimeFunction g_xhi;  ///< (y, t) on x = x_hi
    SpaceTimeFunction g_ylo;  ///< (x, t) on y = y_lo
    SpaceTimeFunction g_yhi;  ///< (x, t) on y = y_hi

    void validate() const;
};

/// Evaluate an optional function, treating an empty one as zero.
template <typename F, typename... Args>
double eval_or_zero(const F& f, Args... args) {
    return f ? f(args...) : 0.0;
}

}  // namespace wavewr
