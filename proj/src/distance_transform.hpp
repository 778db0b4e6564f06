#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eigenbound::geometry::detail {

/// Exact squared Euclidean distance transform on an nx-by-ny grid, in units
/// of grid cells. Cells with `sites[i] != 0` are feature cells (distance 0).
/// Separable lower-envelope algorithm: one 1D pass along rows, one along
/// columns. Returns +inf everywhere when there are no sites.
std::vector<double> squared_edt(std::span<const std::uint8_t> sites, int nx, int ny);

/// Squared distance transform of a single 1D line of sampled costs.
void squared_edt_1d(std::span<const double> f, std::span<double> d);

} // namespace eigenbound::geometry::detail
