#include "wavewr/trace.hpp"

#include <algorithm>
#include <cmath>

#include "wavewr/errors.hpp"

namespace wavewr {

SpaceTimeTrace::SpaceTimeTrace(std::vector<double> time_grid, std::size_t width, TraceKind kind)
    : time_(std::move(time_grid)), width_(width), values_(time_.size() * width, 0.0), kind_(kind) {
    for (std::size_t m = 1; m < time_.size(); ++m) {
        if (!(time_[m] > time_[m - 1])) throw ValidationError("trace time grid must be strictly increasing");
    }
}

SpaceTimeTrace::SpaceTimeTrace(std::vector<double> time_grid, std::size_t width, std::vector<double> values,
                               TraceKind kind)
    : SpaceTimeTrace(std::move(time_grid), width, kind) {
    if (values.size() != values_.size()) throw ValidationError("trace values do not match the time grid");
    values_ = std::move(values);
}

double SpaceTimeTrace::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool SpaceTimeTrace::same_shape(const SpaceTimeTrace& o) const {
    return width_ == o.width_ && time_.size() == o.time_.size();
}

SpaceTimeTrace& SpaceTimeTrace::operator+=(const SpaceTimeTrace& o) {
    if (!same_shape(o)) throw SolverError("trace shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

SpaceTimeTrace& SpaceTimeTrace::operator-=(const SpaceTimeTrace& o) {
    if (!same_shape(o)) throw SolverError("trace shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

SpaceTimeTrace& SpaceTimeTrace::operator*=(double a) {
    for (double& v : values_) v *= a;
    return *this;
}

SpaceTimeTrace operator+(SpaceTimeTrace a, const SpaceTimeTrace& b) { return a += b; }
SpaceTimeTrace operator-(SpaceTimeTrace a, const SpaceTimeTrace& b) { return a -= b; }
SpaceTimeTrace operator*(double s, SpaceTimeTrace a) { return a *= s; }

double interface_error(std::span<const SpaceTimeTrace> iterate, std::span<const SpaceTimeTrace> reference) {
    if (iterate.size() != reference.size()) throw SolverError("interface count mismatch in error norm");
    double err = 0.0;
    for (std::size_t i = 0; i < iterate.size(); ++i) {
        const auto& a = iterate[i].values();
        const auto& b = reference[i].values();
        if (!iterate[i].same_shape(reference[i])) throw SolverError("trace shape mismatch in error norm");
        for (std::size_t k = 0; k < a.size(); ++k) err = std::max(err, std::abs(a[k] - b[k]));
    }
    return err;
}

}  // namespace wavewr

#include "wavewr/record.hpp"

namespace wavewr {

double ConvergenceRecord::relative(std::size_t k) const {
    const double e0 = initial_error();
    return e0 > 0.0 ? errors.at(k) / e0 : errors.at(k);
}

std::optional<std::size_t> iterations_to(const std::vector<double>& errors, double rel_tol) {
    if (errors.empty()) return std::nullopt;
    const double e0 = errors.front();
    for (std::size_t k = 0; k < errors.size(); ++k) {
        if (errors[k] <= rel_tol * e0) return k;
    }
    return std::nullopt;
}

}  // namespace wavewr
