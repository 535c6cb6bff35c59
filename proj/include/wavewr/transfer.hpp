#pragma once

#include <cstddef>
#include <vector>

#include "wavewr/trace.hpp"

namespace wavewr {

/// Piecewise-linear resampling weights from one time grid onto another.
/// Each target sample t maps to src[lo] * (1 - w) + src[lo + 1] * w.
class TimeProjection {
public:
    struct Weight {
        std::size_t lo;
        double w;  ///< weight of lo + 1, in [0, 1]
    };

    TimeProjection(std::vector<double> src, std::vector<double> dst, std::vector<Weight> weights);

    const std::vector<double>& source_grid() const { return src_; }
    const std::vector<double>& target_grid() const { return dst_; }
    const std::vector<Weight>& weights() const { return weights_; }
    bool is_identity() const { return identity_; }

private:
    std::vector<double> src_;
    std::vector<double> dst_;
    std::vector<Weight> weights_;
    bool identity_ = false;
};

/// One merge-style sweep over both grids. Both must be strictly increasing and
/// span the same [0, T] (endpoint tolerance 1e-12 relative).
TimeProjection build_projection(const std::vector<double>& src, const std::vector<double>& dst);

SpaceTimeTrace project_trace(const TimeProjection& p, const SpaceTimeTrace& trace);

/// Convenience: resample `trace` onto `dst`, returning it unchanged when the grids coincide.
SpaceTimeTrace project_onto(const SpaceTimeTrace& trace, const std::vector<double>& dst);

}  // namespace wavewr
