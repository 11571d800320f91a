#pragma once

#include <cstdint>
#include <vector>

namespace colorsim {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // u < v, sorted
  double total_weight = 0.0;
};

// Exact minimum-weight perfect matching on a general graph, primal-dual
// blossom algorithm over integer-scaled weights. Nodes are 0..num_nodes-1;
// num_nodes must be even and a perfect matching must exist, otherwise a
// structural error is thrown.
//
// canonical_ties additionally selects the lexicographically smallest pair
// set among all optima by re-solving with forced edges; it costs O(n)
// extra solves, so decoders run with it off (their tie handling only needs
// determinism, which the plain solve provides).
Matching mwpm(int num_nodes, const std::vector<WeightedEdge>& edges, bool canonical_ties = true);

// Reusable solver with internal buffers for hot loops.
class BlossomSolver {
 public:
  // Weights are pre-scaled non-negative integers.
  struct IntEdge {
    int u, v;
    std::int64_t w;
  };

  // Returns matched partner per node and the total weight, minimizing the
  // sum over perfect matchings. Throws if none exists.
  std::int64_t solve(int num_nodes, const std::vector<IntEdge>& edges,
                     std::vector<int>& mate_out);

 private:
  struct EdgeCell {
    int u = 0, v = 0;
    std::int64_t w = 0;
  };
  int n_ = 0, n_x_ = 0;
  std::vector<std::vector<EdgeCell>> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, vis_;
  std::vector<int> s_;
  std::vector<std::vector<int>> flower_, flower_from_;
  std::vector<int> queue_;
  std::size_t q_head_ = 0;
  int vis_stamp_ = 0;

  std::int64_t e_delta(const EdgeCell& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }
  void update_slack(int u, int x);
  void set_slack(int x);
  void q_push(int x);
  void set_st(int x, int b);
  int get_pr(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int get_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const EdgeCell& e);
  bool grow_phase();
};

}  // namespace colorsim
