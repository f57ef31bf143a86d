#pragma once

#include <vector>

namespace oscgauss {

/// Minimum-cost perfect assignment on a square cost matrix (Hungarian
/// algorithm, O(n^3)). Returns assignment[row] = column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace oscgauss
