#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavewr {

enum class TraceKind { dirichlet, flux };

/// A function of time sampled on an interface. In 1D each sample is a scalar
/// (width 1); on a 2D strip interface each sample is a vector over y-nodes.
class SpaceTimeTrace {
public:
    SpaceTimeTrace() = default;
    SpaceTimeTrace(std::vector<double> time_grid, std::size_t width, TraceKind kind = TraceKind::dirichlet);
    SpaceTimeTrace(std::vector<double> time_grid, std::size_t width, std::vector<double> values,
                   TraceKind kind = TraceKind::dirichlet);

    const std::vector<double>& time_grid() const { return time_; }
    std::size_t samples() const { return time_.size(); }
    std::size_t width() const { return width_; }
    TraceKind kind() const { return kind_; }
    void set_kind(TraceKind k) { kind_ = k; }

    double& at(std::size_t m, std::size_t l = 0) { return values_[m * width_ + l]; }
    double at(std::size_t m, std::size_t l = 0) const { return values_[m * width_ + l]; }
    std::span<const double> sample(std::size_t m) const { return {values_.data() + m * width_, width_}; }
    std::span<double> sample(std::size_t m) { return {values_.data() + m * width_, width_}; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double max_abs() const;
    bool same_shape(const SpaceTimeTrace& o) const;

    SpaceTimeTrace& operator+=(const SpaceTimeTrace& o);
    SpaceTimeTrace& operator-=(const SpaceTimeTrace& o);
    SpaceTimeTrace& operator*=(double a);

private:
    std::vector<double> time_;
    std::size_t width_ = 1;
    std::vector<double> values_;
    TraceKind kind_ = TraceKind::dirichlet;
};

SpaceTimeTrace operator+(SpaceTimeTrace a, const SpaceTimeTrace& b);
SpaceTimeTrace operator-(SpaceTimeTrace a, const SpaceTimeTrace& b);
SpaceTimeTrace operator*(double s, SpaceTimeTrace a);

/// Max-norm over interfaces, y-nodes and samples of iterate - reference.
double interface_error(std::span<const SpaceTimeTrace> iterate, std::span<const SpaceTimeTrace> reference);

}  // namespace wavewr
