#include <cmath>

#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

namespace {

void check_traces(const std::vector<UniformTrace>& w, double dt, const InterfaceOperators& ops) {
    if (!(dt > 0.0)) throw ValidationError("oracle trace step must be positive");
    if (w.size() != ops.interfaces()) throw ValidationError("one trace per interface expected");
    for (const auto& tr : w) {
        if (tr.size() != w.front().size() || tr.empty()) throw ValidationError("oracle traces must share one grid");
    }
}

// w(t_m - d) with w = 0 for t <= 0.
double shifted(const UniformTrace& w, std::size_t m, double steps) {
    const double x = static_cast<double>(m) - steps;
    if (x <= 0.0) return 0.0;
    const auto lo = static_cast<std::size_t>(std::floor(x));
    const double f = x - static_cast<double>(lo);
    if (f == 0.0 || lo + 1 >= w.size()) return w[lo];
    return (1.0 - f) * w[lo] + f * w[lo + 1];
}

// Shift in grid steps: exact when delay / dt is an integer.
double shift_steps(const Rational& delay, double dt) {
    if (const auto q = to_rational(dt)) {
        const Rational r = delay / *q;
        if (r.is_integer()) return static_cast<double>(r.num());
    }
    return delay.to_double() / dt;
}

}  // namespace

UniformTrace apply_series(const DelaySeries& s, const UniformTrace& w, double dt) {
    UniformTrace out(w.size(), 0.0);
    for (const auto& term : s.terms()) {
        const double k = term.coeff.to_double();
        const double n = shift_steps(term.delay, dt);
        if (n == 0.0) {
            for (std::size_t m = 0; m < w.size(); ++m) out[m] += k * w[m];
            continue;
        }
        for (std::size_t m = 0; m < w.size(); ++m) out[m] += k * shifted(w, m, n);
    }
    return out;
}

std::vector<UniformTrace> oracle_nnwr_step(const std::vector<UniformTrace>& w, double dt,
                                           const InterfaceOperators& ops, double theta) {
    check_traces(w, dt, ops);
    const std::size_t n = ops.interfaces();
    std::vector<UniformTrace> out = w;
    for (std::size_t i = 0; i < n; ++i) {
        UniformTrace sum(w[i].size(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const UniformTrace part = apply_series(ops.at(i, j), w[j], dt);
            for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += part[m];
        }
        for (std::size_t m = 0; m < sum.size(); ++m) out[i][m] = w[i][m] - theta * sum[m];
    }
    return out;
}

namespace {

// a [w(t - rho) H(t - rho) + int_rho^t chi(alpha, rho, tau) w(t - tau) dtau].
UniformTrace apply_term_2d(const DelayTerm& term, const UniformTrace& w, double dt, double alpha) {
    const double a = term.coeff.to_double();
    const double rho = term.delay.to_double();
    const double n = shift_steps(term.delay, dt);
    UniformTrace out(w.size(), 0.0);
    if (rho == 0.0) {
        // The zero-delay unit term carries no kernel.
        for (std::size_t m = 0; m < w.size(); ++m) out[m] = a * w[m];
        return out;
    }
    std::vector<double> chi(w.size(), 0.0);
    for (std::size_t q = 0; q < w.size(); ++q) {
        const double tau = static_cast<double>(q) * dt;
        if (static_cast<double>(q) >= n) chi[q] = chi_continuous(alpha, rho, tau);
    }
    const double chi_rho = chi_continuous(alpha, rho, rho);
    for (std::size_t m = 0; m < w.size(); ++m) {
        const double span = static_cast<double>(m) - n;  // (t_m - rho) / dt
        if (span <= 0.0) continue;
        // Nodes u_j = j dt for j dt <= t_m - rho, then the endpoint u = t_m - rho
        // where tau = rho.
        const auto J = static_cast<std::size_t>(std::floor(span));
        double integral = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
            integral += 0.5 * dt * (chi[m - j] * w[j] + chi[m - j - 1] * w[j + 1]);
        }
        const double rest = (span - static_cast<double>(J)) * dt;
        if (rest > 0.0) {
            const double w_end = shifted(w, m, n);
            integral += 0.5 * rest * (chi[m - J] * w[J] + chi_rho * w_end);
        }
        out[m] = a * (shifted(w, m, n) + integral);
    }
    return out;
}

}  // namespace

std::vector<UniformTrace> oracle_nnwr_step_2d_mode(const std::vector<UniformTrace>& w, double dt,
                                                   const InterfaceOperators& ops, double alpha, double theta) {
    check_traces(w, dt, ops);
    if (alpha < 0.0) throw ValidationError("mode frequency must be >= 0");
    const std::size_t n = ops.interfaces();
    std::vector<UniformTrace> out = w;
    for (std::size_t i = 0; i < n; ++i) {
        UniformTrace sum(w[i].size(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            UniformTrace part(w[j].size(), 0.0);
            for (const auto& term : ops.at(i, j).terms()) {
                const UniformTrace t = apply_term_2d(term, w[j], dt, alpha);
                for (std::size_t m = 0; m < part.size(); ++m) part[m] += t[m];
            }
            for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += part[m];
        }
        for (std::size_t m = 0; m < sum.size(); ++m) out[i][m] = w[i][m] - theta * sum[m];
    }
    return out;
}

}  // namespace wavewr
