#pragma once

// Reference minimum-weight perfect matching by exhaustive pairing, used as
// the oracle for the blossom implementation. Independent of the production
// code path on purpose.

#include <functional>
#include <limits>
#include <vector>

#include "colorsim/matching.hpp"

namespace colorsim::testing {

inline double brute_force_mwpm(int n, const std::vector<WeightedEdge>& edges,
                               std::vector<std::pair<int, int>>* best_pairs = nullptr) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, -1.0));
  for (const auto& e : edges) {
    if (w[e.u][e.v] < 0 || e.weight < w[e.u][e.v]) w[e.u][e.v] = w[e.v][e.u] = e.weight;
  }
  std::vector<int> mate(n, -1);
  std::vector<std::pair<int, int>> cur, best;
  double best_w = std::numeric_limits<double>::infinity();

  std::function<void(double)> rec = [&](double acc) {
    int u = -1;
    for (int i = 0; i < n; ++i)
      if (mate[i] < 0) {
        u = i;
        break;
      }
    if (u < 0) {
      if (acc < best_w) {
        best_w = acc;
        best = cur;
      }
      return;
    }
    for (int v = u + 1; v < n; ++v) {
      if (mate[v] >= 0 || w[u][v] < 0) continue;
      if (acc + w[u][v] >= best_w) continue;
      mate[u] = v;
      mate[v] = u;
      cur.push_back({u, v});
      rec(acc + w[u][v]);
      cur.pop_back();
      mate[u] = mate[v] = -1;
    }
  };
  rec(0.0);
  if (best_pairs) *best_pairs = best;
  return best_w;
}

}  // namespace colorsim::testing
