#include "debunk/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "debunk/error.hpp"

namespace debunk {
namespace {

struct Basis {
  std::size_t m, n;
  std::vector<char> basic;  // m x n
  std::vector<double> x;    // m x n

  std::size_t id(std::size_t i, std::size_t j) const { return i * n + j; }
};

// Row nodes are 0..m-1, column nodes m..m+n-1; basic cells are tree edges.
std::vector<std::vector<std::size_t>> adjacency(const Basis& b) {
  std::vector<std::vector<std::size_t>> adj(b.m + b.n);
  for (std::size_t i = 0; i < b.m; ++i)
    for (std::size_t j = 0; j < b.n; ++j)
      if (b.basic[b.id(i, j)]) {
        adj[i].push_back(b.m + j);
        adj[b.m + j].push_back(i);
      }
  return adj;
}

void potentials(const Basis& b, std::span<const double> cost, std::vector<double>& u,
                std::vector<double>& v) {
  auto adj = adjacency(b);
  std::vector<char> seen(b.m + b.n, 0);
  std::vector<std::size_t> stack{0};
  u.assign(b.m, 0.0);
  v.assign(b.n, 0.0);
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t next : adj[node]) {
      if (seen[next]) continue;
      seen[next] = 1;
      if (node < b.m) {
        std::size_t j = next - b.m;
        v[j] = cost[b.id(node, j)] - u[node];
      } else {
        std::size_t j = node - b.m;
        u[next] = cost[b.id(next, j)] - v[j];
      }
      stack.push_back(next);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error("transportation basis is not a spanning tree");
}

// Tree path from column node of the entering cell to its row node, as a list
// of cells in path order.
std::vector<std::pair<std::size_t, std::size_t>> tree_path(const Basis& b, std::size_t row,
                                                           std::size_t col) {
  auto adj = adjacency(b);
  const std::size_t start = b.m + col, goal = row;
  std::vector<std::size_t> parent(b.m + b.n, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> queue{start};
  parent[start] = start;
  for (std::size_t q = 0; q < queue.size() && parent[goal] == std::numeric_limits<std::size_t>::max();
       ++q) {
    for (std::size_t next : adj[queue[q]])
      if (parent[next] == std::numeric_limits<std::size_t>::max()) {
        parent[next] = queue[q];
        queue.push_back(next);
      }
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t node = goal; node != start; node = parent[node]) {
    std::size_t prev = parent[node];
    std::size_t r = node < b.m ? node : prev;
    std::size_t c = (node < b.m ? prev : node) - b.m;
    cells.emplace_back(r, c);
  }
  std::reverse(cells.begin(), cells.end());  // now starts at the column node
  return cells;
}

}  // namespace

TransportPlan solve_transport(std::span<const double> supply, std::span<const double> demand,
                              std::span<const double> cost) {
  const std::size_t m = supply.size(), n = demand.size();
  if (m == 0 || n == 0) throw Error("transport problem needs at least one source and sink");
  if (cost.size() != m * n) throw Error("cost matrix has the wrong shape");
  double total_s = 0, total_d = 0, scale = 0;
  for (double s : supply) {
    if (!(s >= 0)) throw Error("negative or NaN supply");
    total_s += s;
  }
  for (double d : demand) {
    if (!(d >= 0)) throw Error("negative or NaN demand");
    total_d += d;
  }
  if (std::abs(total_s - total_d) > 1e-9 * std::max(1.0, total_s))
    throw Error("unbalanced transport problem");
  for (double c : cost) {
    if (!std::isfinite(c)) throw Error("non-finite cost");
    scale = std::max(scale, std::abs(c));
  }
  const double tol = 1e-12 * std::max(1.0, scale);

  Basis b{m, n, std::vector<char>(m * n, 0), std::vector<double>(m * n, 0.0)};
  {
    std::vector<double> r(supply.begin(), supply.end()), c(demand.begin(), demand.end());
    std::size_t i = 0, j = 0;
    while (true) {
      double x = std::min(r[i], c[j]);
      if (i == m - 1 && j == n - 1) x = std::max(r[i], c[j]);
      b.basic[b.id(i, j)] = 1;
      b.x[b.id(i, j)] = std::max(x, 0.0);
      if (i == m - 1 && j == n - 1) break;
      bool row_done = r[i] <= c[j];
      r[i] -= x;
      c[j] -= x;
      if (i == m - 1)
        ++j;
      else if (j == n - 1)
        ++i;
      else if (row_done)
        ++i;
      else
        ++j;
    }
  }

  TransportPlan plan;
  plan.rows = m;
  plan.cols = n;
  std::vector<double> u, v;
  const std::size_t dantzig_limit = 20 * (m + n) + 50;
  const std::size_t hard_limit = 100000 + 200 * m * n * (m + n);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > hard_limit) throw Error("transportation simplex failed to converge");
    potentials(b, cost, u, v);
    const bool bland = iter >= dantzig_limit;
    std::size_t ei = m, ej = n;
    double best = -tol;
    for (std::size_t i = 0; i < m && !(bland && ei < m); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (b.basic[b.id(i, j)]) continue;
        double d = cost[b.id(i, j)] - u[i] - v[j];
        if (d < best) {
          best = d;
          ei = i;
          ej = j;
          if (bland) break;
        }
      }
    if (ei == m) break;

    auto path = tree_path(b, ei, ej);
    // Signs alternate along the cycle; cells at even positions of the path
    // (counting from the column end) lose flow.
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave = path.size();
    for (std::size_t k = 0; k < path.size(); k += 2) {
      auto [r, c] = path[k];
      double x = b.x[b.id(r, c)];
      if (x < theta || (x == theta && leave < path.size() &&
                        std::pair(r, c) < path[leave])) {
        theta = x;
        leave = k;
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto [r, c] = path[k];
      double& x = b.x[b.id(r, c)];
      x = (k % 2 == 0) ? std::max(0.0, x - theta) : x + theta;
    }
    auto [lr, lc] = path[leave];
    b.basic[b.id(lr, lc)] = 0;
    b.x[b.id(lr, lc)] = 0.0;
    b.basic[b.id(ei, ej)] = 1;
    b.x[b.id(ei, ej)] = theta;
    ++plan.pivots;
  }

  plan.flow = b.x;
  plan.cost = 0.0;
  for (std::size_t k = 0; k < m * n; ++k) plan.cost += plan.flow[k] * cost[k];
  return plan;
}

}  // namespace debunk
