#include <algorithm>
#include <cmath>

#include "wavewr/errors.hpp"
#include "wavewr/transfer.hpp"

namespace wavewr {

TimeProjection::TimeProjection(std::vector<double> src, std::vector<double> dst, std::vector<Weight> weights)
    : src_(std::move(src)), dst_(std::move(dst)), weights_(std::move(weights)) {
    identity_ = src_ == dst_;
}

namespace {

void check_grid(const std::vector<double>& g, const char* which) {
    if (g.size() < 2) throw ValidationError(std::string(which) + " grid needs at least two samples");
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (!(g[i] > g[i - 1])) throw ValidationError(std::string(which) + " grid must be strictly increasing");
    }
}

}  // namespace

TimeProjection build_projection(const std::vector<double>& src, const std::vector<double>& dst) {
    check_grid(src, "source");
    check_grid(dst, "target");
    const double span = std::max(std::abs(src.back()), 1.0);
    if (std::abs(src.front() - dst.front()) > 1e-12 * span || std::abs(src.back() - dst.back()) > 1e-12 * span) {
        throw ValidationError("projection grids do not span the same time window");
    }
    std::vector<TimeProjection::Weight> weights;
    weights.reserve(dst.size());
    std::size_t lo = 0;
    for (double t : dst) {
        while (lo + 2 < src.size() && src[lo + 1] <= t) ++lo;
        const double a = src[lo];
        const double b = src[lo + 1];
        double w = (t - a) / (b - a);
        w = std::clamp(w, 0.0, 1.0);
        weights.push_back({lo, w});
    }
    return TimeProjection(src, dst, std::move(weights));
}

SpaceTimeTrace project_trace(const TimeProjection& p, const SpaceTimeTrace& trace) {
    if (trace.time_grid().size() != p.source_grid().size()) {
        throw SolverError("trace is not sampled on the projection's source grid");
    }
    if (p.is_identity()) return trace;
    SpaceTimeTrace out(p.target_grid(), trace.width(), trace.kind());
    const auto& ws = p.weights();
    for (std::size_t m = 0; m < ws.size(); ++m) {
        const auto a = trace.sample(ws[m].lo);
        const auto b = trace.sample(ws[m].lo + 1);
        const double w = ws[m].w;
        auto o = out.sample(m);
        for (std::size_t l = 0; l < o.size(); ++l) o[l] = (1.0 - w) * a[l] + w * b[l];
    }
    return out;
}

SpaceTimeTrace project_onto(const SpaceTimeTrace& trace, const std::vector<double>& dst) {
    if (trace.time_grid() == dst) return trace;
    return project_trace(build_projection(trace.time_grid(), dst), trace);
}

}  // namespace wavewr
