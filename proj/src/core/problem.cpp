#include "wavewr/problem.hpp"

#include <algorithm>
#include <cmath>

#include "wavewr/errors.hpp"

namespace wavewr {

SpeedProfile SpeedProfile::constant(double c) {
    if (!(c > 0.0)) throw ValidationError("wave speed must be strictly positive");
    SpeedProfile s;
    s.kind_ = Kind::constant;
    s.cs_ = {c};
    return s;
}

SpeedProfile SpeedProfile::piecewise(std::vector<double> breakpoints, std::vector<double> values) {
    if (values.size() != breakpoints.size() + 1) {
        throw ValidationError("piecewise speed needs one value per region");
    }
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()) ||
        std::adjacent_find(breakpoints.begin(), breakpoints.end()) != breakpoints.end()) {
        throw ValidationError("piecewise speed breakpoints must be strictly increasing");
    }
    for (double c : values) {
        if (!(c > 0.0)) throw ValidationError("wave speed must be strictly positive");
    }
    SpeedProfile s;
    s.kind_ = Kind::piecewise;
    s.xs_ = std::move(breakpoints);
    s.cs_ = std::move(values);
    return s;
}

SpeedProfile SpeedProfile::table(std::vector<double> x, std::vector<double> c) {
    if (x.size() != c.size() || x.size() < 2) {
        throw ValidationError("speed table needs at least two (x, c) pairs");
    }
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) throw ValidationError("speed table abscissae must be strictly increasing");
    }
    for (double v : c) {
        if (!(v > 0.0)) throw ValidationError("wave speed must be strictly positive");
    }
    SpeedProfile s;
    s.kind_ = Kind::table;
    s.xs_ = std::move(x);
    s.cs_ = std::move(c);
    return s;
}

std::optional<double> SpeedProfile::constant_value() const {
    if (kind_ == Kind::constant) return cs_.front();
    if (std::all_of(cs_.begin(), cs_.end(), [&](double c) { return c == cs_.front(); })) {
        return cs_.front();
    }
    return std::nullopt;
}

double SpeedProfile::at(double x, int side) const {
    switch (kind_) {
        case Kind::constant:
            return cs_.front();
        case Kind::piecewise: {
            std::size_t region = 0;
            for (double b : xs_) {
                if (x > b || (x == b && side > 0)) {
                    ++region;
                } else {
                    break;
                }
            }
            return cs_[region];
        }
        case Kind::table: {
            if (x <= xs_.front()) return cs_.front();
            if (x >= xs_.back()) return cs_.back();
            const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
            const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
            const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
            return (1.0 - w) * cs_[i - 1] + w * cs_[i];
        }
    }
    return cs_.front();
}

double SpeedProfile::mono_c2(double x, double tol) const {
    if (kind_ == Kind::piecewise) {
        for (double b : xs_) {
            if (std::abs(x - b) <= tol) {
                const double cl = at(b, -1);
                const double cr = at(b, +1);
                return 2.0 / (1.0 / (cl * cl) + 1.0 / (cr * cr));
            }
        }
    }
    const double c = at(x);
    return c * c;
}

double SpeedProfile::min_value() const { return *std::min_element(cs_.begin(), cs_.end()); }

double SpeedProfile::max_value() const { return *std::max_element(cs_.begin(), cs_.end()); }

double SpeedProfile::max_on(double a, double b) const {
    switch (kind_) {
        case Kind::constant:
            return cs_.front();
        case Kind::piecewise: {
            double m = 0.0;
            for (std::size_t r = 0; r < cs_.size(); ++r) {
                const double lo = r == 0 ? -INFINITY : xs_[r - 1];
                const double hi = r == xs_.size() ? INFINITY : xs_[r];
                if (hi > a && lo < b) m = std::max(m, cs_[r]);
            }
            return m;
        }
        case Kind::table: {
            double m = std::max(at(a), at(b));
            for (std::size_t i = 0; i < xs_.size(); ++i) {
                if (xs_[i] > a && xs_[i] < b) m = std::max(m, cs_[i]);
            }
            return m;
        }
    }
    return max_value();
}

void WaveProblem1D::validate() const {
    if (!(x_lo < x_hi)) throw ValidationError("problem domain requires x_lo < x_hi");
    if (!(T > 0.0)) throw ValidationError("time window T must be positive");
    if (!(speed.min_value() > 0.0)) throw ValidationError("wave speed must be strictly positive");
}

void WaveProblem2D::validate() const {
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw ValidationError("degenerate rectangle");
    if (!(T > 0.0)) throw ValidationError("time window T must be positive");
    if (!(c > 0.0)) throw ValidationError("wave speed must be strictly positive");
}

}  // namespace wavewr
