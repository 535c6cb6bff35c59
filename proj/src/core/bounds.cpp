#include "wavewr/bounds.hpp"

#include <cmath>
#include <string>

#include "wavewr/errors.hpp"
#include "wavewr/rational.hpp"

namespace wavewr {

namespace {

struct Row {
    int factor;
    bool strict;
};

Row row_of(BoundMethod m) {
    switch (m) {
        case BoundMethod::nnwr_2sub_1d: return {4, false};
        case BoundMethod::nnwr_multi_1d: return {2, false};
        case BoundMethod::nnwr_2d: return {2, true};
        case BoundMethod::dnwr_2sub_1d: return {2, false};
        case BoundMethod::dnwr_multi_1d: return {1, false};
        case BoundMethod::dnwr_2d: return {1, true};
    }
    throw ValidationError("unknown method");
}

}  // namespace

BoundMethod parse_bound_method(std::string_view tag) {
    if (tag == "nnwr-multi-1d") return BoundMethod::nnwr_multi_1d;
    if (tag == "nnwr-2sub-1d") return BoundMethod::nnwr_2sub_1d;
    if (tag == "nnwr-2d") return BoundMethod::nnwr_2d;
    if (tag == "dnwr-2sub-1d") return BoundMethod::dnwr_2sub_1d;
    if (tag == "dnwr-multi-1d") return BoundMethod::dnwr_multi_1d;
    if (tag == "dnwr-2d") return BoundMethod::dnwr_2d;
    throw ValidationError("unknown method tag '" + std::string(tag) + "'");
}

std::string_view to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::nnwr_multi_1d: return "nnwr-multi-1d";
        case BoundMethod::nnwr_2sub_1d: return "nnwr-2sub-1d";
        case BoundMethod::nnwr_2d: return "nnwr-2d";
        case BoundMethod::dnwr_2sub_1d: return "dnwr-2sub-1d";
        case BoundMethod::dnwr_multi_1d: return "dnwr-multi-1d";
        case BoundMethod::dnwr_2d: return "dnwr-2d";
    }
    return "?";
}

std::int64_t theoretical_iterations(BoundMethod method, double T, double h_min, double c) {
    if (!(T > 0.0) || !(h_min > 0.0) || !(c > 0.0)) {
        throw ValidationError("T, h_min and c must be positive");
    }
    const Row row = row_of(method);
    // q = T c / (factor h_min); need least k with q <= k (or q < k).
    const auto rt = to_rational(T);
    const auto rh = to_rational(h_min);
    const auto rc = to_rational(c);
    std::int64_t k = 0;
    bool exact = false;
    if (rt && rh && rc) {
        try {
            const Rational q = (*rt * *rc) / (Rational(row.factor) * *rh);
            k = row.strict ? q.floor() + 1 : q.ceil();
            exact = true;
        } catch (const SolverError&) {
            exact = false;
        }
    }
    if (!exact) {
        const double q = T * c / (row.factor * h_min);
        k = row.strict ? static_cast<std::int64_t>(std::floor(q + 1e-12)) + 1
                       : static_cast<std::int64_t>(std::ceil(q - 1e-12));
    }
    if (k < 1) k = 1;
    return k + 1;
}

std::optional<double> predict_vanishing(double h_min, double c, double theta, std::int64_t k) {
    if (theta != 0.25) return std::nullopt;
    return 2.0 * static_cast<double>(k) * h_min / c;
}

}  // namespace wavewr
