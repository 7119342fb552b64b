#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace debunk {

struct TransportPlan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> flow;  // rows x cols, row-major
  double cost = 0.0;
  std::size_t pivots = 0;

  double at(std::size_t i, std::size_t j) const { return flow[i * cols + j]; }
};

// Exact balanced transportation problem
//   min sum_ij cost_ij * x_ij  s.t.  row sums = supply, column sums = demand, x >= 0
// by the transportation simplex (north-west corner start, MODI potentials).
// Degenerate bases are kept as spanning trees with zero-flow cells, and the
// pivot rule falls back to Bland's rule so degenerate pivots cannot cycle.
// Supply and demand must be non-negative with equal totals (up to rounding;
// the residual is absorbed by the last basic cell).
TransportPlan solve_transport(std::span<const double> supply, std::span<const double> demand,
                              std::span<const double> cost);

}  // namespace debunk
