#include <sstream>

#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

InterfaceOperators::InterfaceOperators(std::size_t interfaces, std::vector<DelaySeries> entries)
    : n_(interfaces), m_(std::move(entries)) {
    if (m_.size() != n_ * n_) throw ValidationError("operator table must be square");
}

DelaySeries InterfaceOperators::paper_form(std::size_t i, std::size_t j) const {
    const DelaySeries& m = at(i, j);
    if (i == j) return series_add(m, DelaySeries(m.t_max(), {{Rational(0), Rational(-4)}}));
    if (i == j + 2 || j == i + 2) return series_scale(m, Rational(-1));
    return m;
}

namespace {

// Linear combination sum_j a_j w_j with delay-series weights.
using Combo = std::vector<DelaySeries>;

Combo zero_combo(std::size_t n, Rational t_max) { return Combo(n, DelaySeries(t_max)); }

Combo scaled(const DelaySeries& s, const Combo& c) {
    Combo out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(series_mul(s, x));
    return out;
}

void accumulate(Combo& into, const Combo& c) {
    for (std::size_t j = 0; j < c.size(); ++j) into[j] = series_add(into[j], c[j]);
}

}  // namespace

InterfaceOperators build_interface_operators(const std::vector<double>& widths, double c, double T_max) {
    const std::size_t N = widths.size();
    if (N < 2) throw ValidationError("interface operators need at least two subdomains");
    const std::size_t n = N - 1;
    std::vector<DelaySeries> coth, csch, tanh;
    for (double h : widths) {
        coth.push_back(series_coth(h, c, T_max));
        csch.push_back(series_reciprocal_sinh(h, c, T_max));
        tanh.push_back(series_tanh(h, c, T_max));
    }
    const Rational t_max = coth.front().t_max();

    // Flux jump at interface i (between subdomains i and i+1, 0-based), in
    // units of s/c: (coth_i + coth_{i+1}) w_i - csch_i w_{i-1} - csch_{i+1} w_{i+1}.
    std::vector<Combo> E(n, zero_combo(n, t_max));
    for (std::size_t i = 0; i < n; ++i) {
        E[i][i] = series_add(coth[i], coth[i + 1]);
        if (i > 0) E[i][i - 1] = series_scale(csch[i], Rational(-1));
        if (i + 1 < n) E[i][i + 1] = series_scale(csch[i + 1], Rational(-1));
    }

    // Neumann correction values at interface i from the left subdomain i and
    // the right subdomain i+1.
    std::vector<DelaySeries> entries;
    entries.reserve(n * n);
    std::vector<Combo> rows(n, zero_combo(n, t_max));
    for (std::size_t i = 0; i < n; ++i) {
        Combo& row = rows[i];
        if (i == 0) {
            accumulate(row, scaled(tanh[0], E[0]));
        } else {
            accumulate(row, scaled(coth[i], E[i]));
            accumulate(row, scaled(csch[i], E[i - 1]));
        }
        if (i + 1 == n) {
            accumulate(row, scaled(tanh[N - 1], E[i]));
        } else {
            accumulate(row, scaled(coth[i + 1], E[i]));
            accumulate(row, scaled(csch[i + 1], E[i + 1]));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) entries.push_back(rows[i][j]);
    }
    InterfaceOperators ops(n, std::move(entries));

    auto fail = [](const char* what, std::size_t i, std::size_t j) {
        std::ostringstream os;
        os << "interface operator " << what << " violated at (" << i << ", " << j << ")";
        throw SolverError(os.str());
    };
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (!(ops.at(i, i + 2) == ops.at(i + 2, i))) fail("symmetry", i, i + 2);
    }
    for (std::size_t i = 1; i + 2 < n; ++i) {
        if (!(ops.at(i, i + 1) == series_scale(ops.at(i + 1, i), Rational(-1)))) fail("antisymmetry", i, i + 1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (ops.at(i, i).zero_delay_coeff() != Rational(4)) fail("zero-delay diagonal", i, i);
    }
    return ops;
}

}  // namespace wavewr
