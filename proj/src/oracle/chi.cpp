#include <cmath>
#include <numbers>

#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

namespace {

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive(F f, double a, double fa, double m, double fm, double b, double fb, double whole, double tol,
                int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double bessel_j1(double z, double tol) {
    const double pi = std::numbers::pi;
    auto f = [z](double phi) { return std::cos(z * std::sin(phi) - phi); };
    // Split once so the initial estimate is not fooled by symmetric integrands.
    const double a = 0.0, b = pi, m = 0.5 * pi;
    const double fa = f(a), fm = f(m), fb = f(b);
    const double lm = 0.25 * pi, rm = 0.75 * pi;
    const double flm = f(lm), frm = f(rm);
    const double left = adaptive(f, a, fa, lm, flm, m, fm, simpson(a, fa, flm, m, fm), 0.5 * tol * pi, 40);
    const double right = adaptive(f, m, fm, rm, frm, b, fb, simpson(m, fm, frm, b, fb), 0.5 * tol * pi, 40);
    return (left + right) / pi;
}

double chi_continuous(double alpha, double beta, double t) {
    if (alpha < 0.0 || !(beta > 0.0) || t < 0.0) throw ValidationError("chi needs alpha >= 0, beta > 0, t >= 0");
    if (t < beta || alpha == 0.0) return 0.0;
    if (t == beta) return -alpha * alpha * beta / 2.0;
    const double r = std::sqrt(t * t - beta * beta);
    return -alpha * beta / r * bessel_j1(alpha * r);
}

ChiValue chi_eval(double alpha, double beta, double t) {
    return {beta, chi_continuous(alpha, beta, t), t == beta && alpha > 0.0};
}

}  // namespace wavewr
