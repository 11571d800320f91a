#include "colorsim/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace colorsim {

namespace {
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
}

// Primal-dual weighted blossom algorithm, O(n^3) flavor: maintains dual
// labels on nodes and blossom cycles, grows alternating trees from exposed
// nodes over tight edges, and adjusts duals when stuck. Maximizes the
// total weight; the caller converts minimization by flipping weights
// against a constant large enough that perfect matchings dominate.
void BlossomSolver::update_slack(int u, int x) {
  if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
}

void BlossomSolver::set_slack(int x) {
  slack_[x] = 0;
  for (int u = 1; u <= n_; ++u)
    if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
}

void BlossomSolver::q_push(int x) {
  if (x <= n_) {
    queue_.push_back(x);
  } else {
    for (int t : flower_[x]) q_push(t);
  }
}

void BlossomSolver::set_st(int x, int b) {
  st_[x] = b;
  if (x > n_)
    for (int t : flower_[x]) set_st(t, b);
}

int BlossomSolver::get_pr(int b, int xr) {
  int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                            flower_[b].begin());
  if (pr % 2 == 1) {
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    return static_cast<int>(flower_[b].size()) - pr;
  }
  return pr;
}

void BlossomSolver::set_match(int u, int v) {
  match_[u] = g_[u][v].v;
  if (u > n_) {
    EdgeCell e = g_[u][v];
    int xr = flower_from_[u][e.u];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
  }
}

void BlossomSolver::augment(int u, int v) {
  while (true) {
    int xnv = st_[match_[u]];
    set_match(u, v);
    if (!xnv) return;
    set_match(xnv, st_[pa_[xnv]]);
    u = st_[pa_[xnv]];
    v = xnv;
  }
}

int BlossomSolver::get_lca(int u, int v) {
  for (++vis_stamp_; u || v; std::swap(u, v)) {
    if (u == 0) continue;
    if (vis_[u] == vis_stamp_) return u;
    vis_[u] = vis_stamp_;
    u = st_[match_[u]];
    if (u) u = st_[pa_[u]];
  }
  return 0;
}

void BlossomSolver::add_blossom(int u, int lca, int v) {
  int b = n_ + 1;
  while (b <= n_x_ && st_[b]) ++b;
  if (b > n_x_) ++n_x_;
  lab_[b] = 0;
  s_[b] = 0;
  match_[b] = match_[lca];
  flower_[b].clear();
  flower_[b].push_back(lca);
  for (int x = u, y; x != lca; x = st_[pa_[y]]) {
    flower_[b].push_back(x);
    flower_[b].push_back(y = st_[match_[x]]);
    q_push(y);
  }
  std::reverse(flower_[b].begin() + 1, flower_[b].end());
  for (int x = v, y; x != lca; x = st_[pa_[y]]) {
    flower_[b].push_back(x);
    flower_[b].push_back(y = st_[match_[x]]);
    q_push(y);
  }
  set_st(b, b);
  for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
  for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
  for (int xs : flower_[b]) {
    for (int x = 1; x <= n_x_; ++x)
      if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
        g_[b][x] = g_[xs][x];
        g_[x][b] = g_[x][xs];
      }
    for (int x = 1; x <= n_; ++x)
      if (flower_from_[xs][x]) flower_from_[b][x] = xs;
  }
  set_slack(b);
}

void BlossomSolver::expand_blossom(int b) {
  for (int t : flower_[b]) set_st(t, t);
  int xr = flower_from_[b][g_[b][pa_[b]].u];
  int pr = get_pr(b, xr);
  for (int i = 0; i < pr; i += 2) {
    int xs = flower_[b][i];
    int xns = flower_[b][i + 1];
    pa_[xs] = g_[xns][xs].u;
    s_[xs] = 1;
    s_[xns] = 0;
    slack_[xs] = 0;
    set_slack(xns);
    q_push(xns);
  }
  s_[xr] = 1;
  pa_[xr] = pa_[b];
  for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
    int xs = flower_[b][i];
    s_[xs] = -1;
    set_slack(xs);
  }
  st_[b] = 0;
}

bool BlossomSolver::on_found_edge(const EdgeCell& e) {
  int u = st_[e.u];
  int v = st_[e.v];
  if (s_[v] == -1) {
    pa_[v] = e.u;
    s_[v] = 1;
    int nu = st_[match_[v]];
    slack_[v] = slack_[nu] = 0;
    s_[nu] = 0;
    q_push(nu);
  } else if (s_[v] == 0) {
    int lca = get_lca(u, v);
    if (!lca) {
      augment(u, v);
      augment(v, u);
      return true;
    }
    add_blossom(u, lca, v);
  }
  return false;
}

bool BlossomSolver::grow_phase() {
  std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
  std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
  std::fill(pa_.begin(), pa_.begin() + n_x_ + 1, 0);
  queue_.clear();
  q_head_ = 0;
  for (int x = 1; x <= n_x_; ++x)
    if (st_[x] == x && !match_[x]) {
      pa_[x] = 0;
      s_[x] = 0;
      q_push(x);
    }
  if (queue_.empty()) return false;

  while (true) {
    while (q_head_ < queue_.size()) {
      int u = queue_[q_head_++];
      if (s_[st_[u]] == 1) continue;
      for (int v = 1; v <= n_; ++v) {
        if (g_[u][v].w > 0 && st_[u] != st_[v]) {
          if (e_delta(g_[u][v]) == 0) {
            if (on_found_edge(g_[u][v])) return true;
          } else {
            update_slack(u, st_[v]);
          }
        }
      }
    }
    std::int64_t d = kInf;
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && slack_[x]) {
        if (s_[x] == -1)
          d = std::min(d, e_delta(g_[slack_[x]][x]));
        else if (s_[x] == 0)
          d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
      }
    // Once a dual label on an S-vertex would reach zero, leaving that
    // vertex exposed is optimal. With the perfect-matching weight shift
    // this fires only when no perfect matching exists.
    for (int u = 1; u <= n_; ++u) {
      if (s_[st_[u]] == 0) {
        if (lab_[u] <= d) return false;
        lab_[u] -= d;
      } else if (s_[st_[u]] == 1) {
        lab_[u] += d;
      }
    }
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b) {
        if (s_[b] == 0) lab_[b] += d * 2;
        else if (s_[b] == 1) lab_[b] -= d * 2;
      }

    queue_.clear();
    q_head_ = 0;
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
          e_delta(g_[slack_[x]][x]) == 0) {
        if (on_found_edge(g_[slack_[x]][x])) return true;
      }
    for (int b = n_ + 1; b <= n_x_; ++b)
      if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
  }
}

std::int64_t BlossomSolver::solve(int num_nodes, const std::vector<IntEdge>& edges,
                                  std::vector<int>& mate_out) {
  n_ = num_nodes;
  int cap = n_ * 3 / 2 + 2;
  n_x_ = n_;
  if (static_cast<int>(g_.size()) < cap) {
    g_.resize(cap);
    for (auto& row : g_) row.resize(cap);
    lab_.resize(cap);
    match_.resize(cap);
    slack_.resize(cap);
    st_.resize(cap);
    pa_.resize(cap);
    vis_.resize(cap);
    s_.resize(cap);
    flower_.resize(cap);
    flower_from_.resize(cap);
    for (auto& row : flower_from_) row.resize(cap);
  }
  for (int i = 0; i < cap; ++i) {
    lab_[i] = 0;
    match_[i] = slack_[i] = st_[i] = pa_[i] = vis_[i] = 0;
    s_[i] = -1;
    flower_[i].clear();
    std::fill(flower_from_[i].begin(), flower_from_[i].begin() + cap, 0);
  }
  vis_stamp_ = 0;

  for (int u = 1; u <= n_; ++u)
    for (int v = 1; v <= n_; ++v) g_[u][v] = {u, v, 0};

  // Shift weights so that maximizing favors perfect matchings: internal
  // weight K - w with K beyond any achievable advantage of dropping edges.
  std::int64_t wmax = 0;
  for (const auto& e : edges) wmax = std::max(wmax, e.w);
  std::int64_t shift = wmax * (n_ / 2 + 1) + 1;
  for (const auto& e : edges) {
    int u = e.u + 1, v = e.v + 1;
    if (u == v) continue;
    std::int64_t w = shift - e.w;
    if (w > g_[u][v].w) {
      g_[u][v].w = g_[v][u].w = w;
    }
  }
  for (int u = 1; u <= n_; ++u) {
    st_[u] = u;
    flower_from_[u][u] = u;
  }
  std::int64_t init = 0;
  for (int u = 1; u <= n_; ++u)
    for (int v = 1; v <= n_; ++v) init = std::max(init, g_[u][v].w);
  for (int u = 1; u <= n_; ++u) lab_[u] = init;

  int matched = 0;
  while (grow_phase()) ++matched;

  mate_out.assign(n_, -1);
  std::int64_t total = 0;
  for (int u = 1; u <= n_; ++u) {
    if (match_[u]) {
      mate_out[u - 1] = match_[u] - 1;
      if (u < match_[u]) {
        if (g_[u][match_[u]].w == 0)
          throw std::logic_error("mwpm: matched along a missing edge");
        total += shift - g_[u][match_[u]].w;
      }
    }
  }
  for (int u = 0; u < n_; ++u)
    if (mate_out[u] < 0) throw std::runtime_error("mwpm: no perfect matching exists");
  return total;
}

namespace {

struct ScaledProblem {
  std::vector<BlossomSolver::IntEdge> edges;
  double scale = 1.0;
};

ScaledProblem scale_edges(const std::vector<WeightedEdge>& edges) {
  double wmax = 0.0;
  for (const auto& e : edges) {
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw std::invalid_argument("mwpm: weights must be finite and nonnegative");
    wmax = std::max(wmax, e.weight);
  }
  // Quantize to 44 fractional-ish bits below the largest weight.
  double scale = wmax > 0.0 ? std::ldexp(1.0, 44 - std::ilogb(wmax + 1.0)) : 1.0;
  ScaledProblem out;
  out.scale = scale;
  out.edges.reserve(edges.size());
  for (const auto& e : edges)
    out.edges.push_back({e.u, e.v, static_cast<std::int64_t>(std::llround(e.weight * scale))});
  return out;
}

double exact_pair_weight(const std::vector<WeightedEdge>& edges,
                         const std::vector<std::pair<int, int>>& pairs) {
  // Recompute the total from the cheapest original edge per matched pair.
  double total = 0.0;
  for (auto [u, v] : pairs) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : edges) {
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) best = std::min(best, e.weight);
    }
    total += best;
  }
  return total;
}

}  // namespace

Matching mwpm(int num_nodes, const std::vector<WeightedEdge>& edges, bool canonical_ties) {
  if (num_nodes % 2 != 0)
    throw std::runtime_error("mwpm: odd node count admits no perfect matching");
  Matching result;
  if (num_nodes == 0) return result;

  ScaledProblem sp = scale_edges(edges);
  BlossomSolver solver;
  std::vector<int> mate;
  std::int64_t best = solver.solve(num_nodes, sp.edges, mate);

  if (!canonical_ties) {
    for (int u = 0; u < num_nodes; ++u)
      if (u < mate[u]) result.pairs.push_back({u, mate[u]});
  } else {
    // Fix pairs in lexicographic order, keeping optimality after each pick.
    std::vector<bool> used(num_nodes, false);
    std::vector<std::int64_t> weight_of(static_cast<std::size_t>(num_nodes) * num_nodes,
                                        -1);
    for (const auto& e : sp.edges) {
      auto at = [&](int a, int b) -> std::int64_t& {
        return weight_of[static_cast<std::size_t>(a) * num_nodes + b];
      };
      if (at(e.u, e.v) < 0 || e.w < at(e.u, e.v)) at(e.u, e.v) = at(e.v, e.u) = e.w;
    }
    std::int64_t fixed_weight = 0;
    std::int64_t remaining = best;
    for (int u = 0; u < num_nodes; ++u) {
      if (used[u]) continue;
      for (int v = u + 1; v < num_nodes; ++v) {
        if (used[v]) continue;
        std::int64_t w_uv = weight_of[static_cast<std::size_t>(u) * num_nodes + v];
        if (w_uv < 0) continue;
        // Relabel the residual graph without u, v and solve it.
        std::vector<int> relabel(num_nodes, -1);
        int m = 0;
        for (int x = 0; x < num_nodes; ++x)
          if (!used[x] && x != u && x != v) relabel[x] = m++;
        std::vector<BlossomSolver::IntEdge> rest;
        for (const auto& e : sp.edges)
          if (relabel[e.u] >= 0 && relabel[e.v] >= 0)
            rest.push_back({relabel[e.u], relabel[e.v], e.w});
        std::int64_t sub = 0;
        bool feasible = true;
        if (m > 0) {
          try {
            std::vector<int> mate2;
            sub = solver.solve(m, rest, mate2);
          } catch (const std::exception&) {
            feasible = false;
          }
        }
        if (feasible && fixed_weight + w_uv + sub == best) {
          used[u] = used[v] = true;
          fixed_weight += w_uv;
          remaining = sub;
          result.pairs.push_back({u, v});
          break;
        }
      }
      if (!used[u]) throw std::logic_error("mwpm: canonical tie-break failed to fix a pair");
    }
    (void)remaining;
  }

  std::sort(result.pairs.begin(), result.pairs.end());
  result.total_weight = exact_pair_weight(edges, result.pairs);
  return result;
}

}  // namespace colorsim
