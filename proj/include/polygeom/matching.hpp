#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "polygeom/error.hpp"
#include "polygeom/poly.hpp"

namespace polygeom {

// Minimum-cost perfect assignment (Hungarian method, O(n^3)). cost is n x n
// row-major; returns the column assigned to each row.
inline std::vector<std::size_t> min_cost_assignment(std::span<const double> cost, std::size_t n) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), way_cost(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(way_cost.begin(), way_cost.end(), kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < way_cost[j]) {
          way_cost[j] = cur;
          way[j] = j0;
        }
        if (way_cost[j] < delta) {
          delta = way_cost[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          way_cost[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

/// Largest pair distance under the assignment minimizing total distance.
inline double matching_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidInput, "matching_distance: multisets differ in size");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i * n + j] = std::abs(a[i] - b[j]);
  const auto assign = min_cost_assignment(cost, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost[i * n + assign[i]]);
  return worst;
}

}  // namespace polygeom
