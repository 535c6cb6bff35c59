#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace wavewr {

/// Rows of the finite-step table: which method, how many subdomains, 1D or 2D.
enum class BoundMethod { nnwr_multi_1d, nnwr_2sub_1d, nnwr_2d, dnwr_2sub_1d, dnwr_multi_1d, dnwr_2d };

BoundMethod parse_bound_method(std::string_view tag);
std::string_view to_string(BoundMethod m);

/// Iterations guaranteed by the finite-step theorems: k + 1, where k is the
/// least integer with T <= factor * k * h_min / c (strict for the 2D rows).
/// Ties are decided in exact rational arithmetic when T, h_min and c are
/// representable; otherwise a 1e-12 absolute slack is used.
std::int64_t theoretical_iterations(BoundMethod method, double T, double h_min, double c);

/// Zero horizon 2 k h_min / c of the k-th NNWR iterate; none unless theta = 1/4.
std::optional<double> predict_vanishing(double h_min, double c, double theta, std::int64_t k);

}  // namespace wavewr
