#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

namespace {

std::vector<DelayTerm> normalized(std::map<Rational, Rational> merged, const Rational& t_max) {
    std::vector<DelayTerm> out;
    out.reserve(merged.size());
    for (auto& [d, k] : merged) {
        if (d > t_max || k == Rational(0)) continue;
        out.push_back({d, k});
    }
    return out;
}

}  // namespace

DelaySeries::DelaySeries(Rational t_max) : t_max_(t_max) {
    if (t_max_ <= Rational(0)) throw ValidationError("delay series horizon must be positive");
}

DelaySeries::DelaySeries(Rational t_max, std::vector<DelayTerm> terms) : DelaySeries(t_max) {
    std::map<Rational, Rational> merged;
    for (const auto& t : terms) {
        if (t.delay < Rational(0)) throw ValidationError("negative delay in a delay series");
        merged[t.delay] = merged[t.delay] + t.coeff;
    }
    terms_ = normalized(std::move(merged), t_max_);
}

Rational DelaySeries::zero_delay_coeff() const {
    if (!terms_.empty() && terms_.front().delay == Rational(0)) return terms_.front().coeff;
    return Rational(0);
}

double DelaySeries::evaluate(double s) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coeff.to_double() * std::exp(-t.delay.to_double() * s);
    return sum;
}

std::complex<double> DelaySeries::evaluate(std::complex<double> s) const {
    std::complex<double> sum = 0.0;
    for (const auto& t : terms_) sum += t.coeff.to_double() * std::exp(-t.delay.to_double() * s);
    return sum;
}

DelaySeries series_mul(const DelaySeries& a, const DelaySeries& b, std::size_t cap) {
    const Rational t_max = std::min(a.t_max(), b.t_max());
    std::map<Rational, Rational> merged;
    for (const auto& x : a.terms()) {
        if (x.delay > t_max) break;
        for (const auto& y : b.terms()) {
            const Rational d = x.delay + y.delay;
            if (d > t_max) break;
            merged[d] = merged[d] + x.coeff * y.coeff;
            if (merged.size() > cap) {
                std::ostringstream os;
                os << "delay series product exceeds " << cap << " terms; reduce the horizon";
                throw SolverError(os.str());
            }
        }
    }
    return DelaySeries(t_max, [&] {
        std::vector<DelayTerm> v;
        for (auto& [d, k] : merged) v.push_back({d, k});
        return v;
    }());
}

DelaySeries series_add(const DelaySeries& a, const DelaySeries& b) {
    std::vector<DelayTerm> all = a.terms();
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return DelaySeries(std::min(a.t_max(), b.t_max()), std::move(all));
}

DelaySeries series_scale(const DelaySeries& a, Rational k) {
    std::vector<DelayTerm> all = a.terms();
    for (auto& t : all) t.coeff = t.coeff * k;
    return DelaySeries(a.t_max(), std::move(all));
}

Rational delay_unit(double h, double c) {
    if (!(h > 0.0) || !(c > 0.0)) throw ValidationError("width and speed must be positive");
    const auto hr = to_rational(h);
    const auto cr = to_rational(c);
    if (hr && cr) return *hr / *cr;
    if (const auto q = to_rational(h / c)) return *q;
    std::ostringstream os;
    os << "h/c = " << h / c << " has no rational representation with denominator <= 1e6";
    throw ValidationError(os.str());
}

namespace {

Rational horizon(double T_max) {
    if (!(T_max > 0.0)) throw ValidationError("delay series horizon must be positive");
    if (const auto r = to_rational(T_max)) return *r;
    // Round the horizon up so no admissible term is lost.
    return Rational(static_cast<std::int64_t>(std::ceil(T_max * 1e6)), 1'000'000);
}

// sum over m of coeff(m) e^{-(first + m step) s}.
DelaySeries geometric(Rational first, Rational step, Rational t_max, std::int64_t lead,
                      std::int64_t (*coeff)(std::int64_t)) {
    std::vector<DelayTerm> terms;
    if (lead != 0) terms.push_back({Rational(0), Rational(lead)});
    for (std::int64_t m = 0;; ++m) {
        const Rational d = first + step * Rational(m);
        if (d > t_max) break;
        terms.push_back({d, Rational(coeff(m))});
        if (terms.size() > DelaySeries::default_term_cap) throw SolverError("delay series exceeds the term cap");
    }
    return DelaySeries(t_max, std::move(terms));
}

std::int64_t two(std::int64_t) { return 2; }
std::int64_t alternating(std::int64_t m) { return m % 2 == 0 ? 2 : -2; }
std::int64_t alternating_from_one(std::int64_t m) { return m % 2 == 0 ? -2 : 2; }

}  // namespace

DelaySeries series_reciprocal_sinh(double h, double c, double T_max) {
    const Rational a = delay_unit(h, c);
    return geometric(a, a * Rational(2), horizon(T_max), 0, two);
}

DelaySeries series_coth(double h, double c, double T_max) {
    const Rational a = delay_unit(h, c);
    return geometric(a * Rational(2), a * Rational(2), horizon(T_max), 1, two);
}

DelaySeries series_reciprocal_cosh(double h, double c, double T_max) {
    const Rational a = delay_unit(h, c);
    return geometric(a, a * Rational(2), horizon(T_max), 0, alternating);
}

DelaySeries series_tanh(double h, double c, double T_max) {
    const Rational a = delay_unit(h, c);
    return geometric(a * Rational(2), a * Rational(2), horizon(T_max), 1, alternating_from_one);
}

}  // namespace wavewr
