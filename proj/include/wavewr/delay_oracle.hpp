#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "wavewr/rational.hpp"

namespace wavewr {

struct DelayTerm {
    Rational delay;
    Rational coeff;
    bool operator==(const DelayTerm&) const = default;
};

/// Finite signed sum of time shifts, sum_k coeff_k e^{-delay_k s} in the
/// Laplace variable, truncated at a horizon: terms with delay > t_max are
/// dropped. Terms are kept sorted by delay with no duplicates and no zero
/// coefficients.
class DelaySeries {
public:
    static constexpr std::size_t default_term_cap = 1'000'000;

    explicit DelaySeries(Rational t_max);
    DelaySeries(Rational t_max, std::vector<DelayTerm> terms);

    static DelaySeries identity(Rational t_max) { return DelaySeries(t_max, {{Rational(0), Rational(1)}}); }

    const std::vector<DelayTerm>& terms() const { return terms_; }
    const Rational& t_max() const { return t_max_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    /// Coefficient of the zero delay (0 if absent).
    Rational zero_delay_coeff() const;

    /// sum coeff e^{-delay s}.
    double evaluate(double s) const;
    std::complex<double> evaluate(std::complex<double> s) const;

    bool operator==(const DelaySeries&) const = default;

private:
    Rational t_max_;
    std::vector<DelayTerm> terms_;
};

/// Delays multiply as Laplace exponentials: delays add, coefficients multiply.
/// The result uses the smaller horizon. Throws SolverError past `cap` terms.
DelaySeries series_mul(const DelaySeries& a, const DelaySeries& b,
                       std::size_t cap = DelaySeries::default_term_cap);
DelaySeries series_add(const DelaySeries& a, const DelaySeries& b);
DelaySeries series_scale(const DelaySeries& a, Rational k);

/// h / c as an exact rational; throws ValidationError when either is not
/// representable (denominator above 10^6).
Rational delay_unit(double h, double c);

/// Expansions in q = e^{-2hs/c}, truncated at T_max:
///   1/sinh(hs/c) = 2 sum_m e^{-(2m+1)hs/c}
///   coth(hs/c)   = 1 + 2 sum_{m>=1} e^{-2mhs/c}
///   1/cosh(hs/c) = 2 sum_m (-1)^m e^{-(2m+1)hs/c}
///   tanh(hs/c)   = 1 + 2 sum_{m>=1} (-1)^m e^{-2mhs/c}
DelaySeries series_reciprocal_sinh(double h, double c, double T_max);
DelaySeries series_coth(double h, double c, double T_max);
DelaySeries series_reciprocal_cosh(double h, double c, double T_max);
DelaySeries series_tanh(double h, double c, double T_max);

/// Interface recurrence of NNWR on a chain with constant speed: one sweep maps
/// the interface traces w to w - theta M w. Entry (i, j) of M is a delay series;
/// its zero-delay part is 4 on the diagonal and 0 elsewhere.
class InterfaceOperators {
public:
    InterfaceOperators(std::size_t interfaces, std::vector<DelaySeries> entries);

    std::size_t interfaces() const { return n_; }
    const DelaySeries& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
    /// Coefficients in the form w^k = -1/4 (t_ii w_i + t_{i,i+-1} w_{i+-1} - t_{i,i+-2} w_{i+-2}):
    /// the diagonal without its zero-delay 4, the second off-diagonals negated.
    DelaySeries paper_form(std::size_t i, std::size_t j) const;

private:
    std::size_t n_;
    std::vector<DelaySeries> m_;
};

/// Assembled from the Laplace-domain subdomain solutions. widths has N >= 2
/// entries. Checks t_{i,i+2} = t_{i+2,i} everywhere and t_{i,i+1} = -t_{i+1,i}
/// between interior rows; throws SolverError on a mismatch.
InterfaceOperators build_interface_operators(const std::vector<double>& widths, double c, double T_max);

/// Samples of a trace at t_m = m dt, m = 0..M.
using UniformTrace = std::vector<double>;

/// sum coeff w(t - delay) H(t - delay): exact index shifts when delay / dt is an
/// integer, linear interpolation otherwise. The trace is taken as 0 for t <= 0.
UniformTrace apply_series(const DelaySeries& s, const UniformTrace& w, double dt);

/// w^k = w^{k-1} - theta M w^{k-1}.
std::vector<UniformTrace> oracle_nnwr_step(const std::vector<UniformTrace>& w, double dt,
                                           const InterfaceOperators& ops, double theta);

/// Bessel function of the first kind, order 1, from its integral
/// representation on [0, pi] by adaptive Simpson quadrature.
double bessel_j1(double z, double tol = 1e-10);

/// chi = L^{-1} e^{-beta sqrt(s^2 + alpha^2)} = delta(t - beta) + continuous part.
struct ChiValue {
    double shift_at;
    double continuous;
    /// t == beta: continuous holds the one-sided limit -alpha^2 beta / 2.
    bool at_limit = false;
};
ChiValue chi_eval(double alpha, double beta, double t);

/// The continuous part alone, with the limit at t == beta.
double chi_continuous(double alpha, double beta, double t);

/// Numerical inverse Laplace transform on the Weideman-Trefethen cotangent
/// contour with `nodes` points.
double talbot_inverse(const std::function<std::complex<double>(std::complex<double>)>& F, double t,
                      std::size_t nodes = 64);

/// Continuous part of chi by Talbot inversion of the smooth remainder
/// 1 - exp(beta (s - sqrt(s^2 + alpha^2))).
double chi_continuous_talbot(double alpha, double beta, double t, std::size_t nodes = 64);

/// Mode-n sweep of the strip recurrence: every delay term (rho, a) acts as
/// a [w(t - rho) H(t - rho) + int_rho^t chi_cont(alpha, rho, tau) w(t - tau) dtau]
/// with trapezoid quadrature on the trace grid. alpha = c n.
std::vector<UniformTrace> oracle_nnwr_step_2d_mode(const std::vector<UniformTrace>& w, double dt,
                                                   const InterfaceOperators& ops, double alpha, double theta);

}  // namespace wavewr
