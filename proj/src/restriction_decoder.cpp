#include "colorsim/restriction_decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace colorsim {

namespace {

constexpr double kInfDist = std::numeric_limits<double>::infinity();
constexpr double kIntScale = 16777216.0;  // 2^24

// CSS-frame probabilities at one qubit: the Hadamard mask folds into the
// channel by swapping the X and Z rates.
PauliProbs css_frame_probs(const StabilizerCode& code, const NoiseChannel& ch, int q) {
  PauliProbs pr = ch.probs_at(q);
  if (code.deformation.masked(q)) std::swap(pr[0], pr[2]);
  return pr;
}

double sector_flip_prob(const PauliProbs& pr, int sector) {
  return sector == 0 ? pr[2] + pr[1] : pr[0] + pr[1];
}

struct DijkstraScratch {
  std::vector<double> dist;
  std::vector<int> parent_edge, parent_node;
};

void dijkstra(const std::vector<std::vector<std::pair<int, int>>>& adj,
              const std::vector<double>& qubit_weight, int src, DijkstraScratch& out) {
  int n = static_cast<int>(adj.size());
  out.dist.assign(n, kInfDist);
  out.parent_edge.assign(n, -1);
  out.parent_node.assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  out.dist[src] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > out.dist[u]) continue;
    for (auto [to, qubit] : adj[u]) {
      double nd = d + qubit_weight[qubit];
      if (nd < out.dist[to]) {
        out.dist[to] = nd;
        out.parent_edge[to] = qubit;
        out.parent_node[to] = u;
        heap.push({nd, to});
      }
    }
  }
}

}  // namespace

RestrictionDecoder::RestrictionDecoder(const StabilizerCode& code, const NoiseChannel& channel,
                                       bool ensemble, FaceColor shared_color)
    : code_(code), channel_(channel) {
  const Lattice& lat = code_.lattice;
  if (!lat.is_color_code())
    throw std::invalid_argument("restriction decoder: color-code lattice required");
  open_boundaries_ = lat.boundary.kind == BoundaryKind::kOpenTriangular;

  qubit_face_of_color_.assign(code_.n, {-1, -1, -1});
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    int ci = static_cast<int>(lat.faces[f].color);
    for (int q : lat.faces[f].qubits) {
      if (qubit_face_of_color_[q][ci] != -1)
        throw std::invalid_argument("restriction decoder: same-color faces share a qubit");
      qubit_face_of_color_[q][ci] = static_cast<int>(f);
    }
  }

  log_penalty_.resize(code_.n);
  for (int q = 0; q < code_.n; ++q) {
    PauliProbs pr = css_frame_probs(code_, channel_, q);
    double p_i = std::max(1e-300, 1.0 - pr[0] - pr[1] - pr[2]);
    double comps[4] = {p_i, pr[0], pr[2], pr[1]};  // order I, X, Z, Y
    for (unsigned c = 0; c < 4; ++c)
      log_penalty_[q][c] = std::log(p_i) - std::log(std::max(1e-300, comps[c]));
  }

  std::vector<FaceColor> shared_list;
  if (ensemble)
    shared_list = {FaceColor::kRed, FaceColor::kGreen, FaceColor::kBlue};
  else
    shared_list = {shared_color};

  for (FaceColor shared : shared_list) {
    Pass pass;
    pass.shared = shared;
    int oi = 0;
    for (FaceColor c : {FaceColor::kRed, FaceColor::kGreen, FaceColor::kBlue})
      if (c != shared) pass.others[oi++] = c;
    for (int sector = 0; sector < 2; ++sector) {
      Sector& sec = pass.sectors[sector];
      sec.flip_prob.resize(code_.n);
      sec.move_weight.resize(code_.n);
      for (int q = 0; q < code_.n; ++q) {
        double p = sector_flip_prob(css_frame_probs(code_, channel_, q), sector);
        if (p >= 0.5)
          throw std::invalid_argument("restriction decoder: flip marginal at or above 1/2");
        sec.flip_prob[q] = p;
        sec.move_weight[q] = log_odds_weight(p);
      }
      for (int r = 0; r < 2; ++r) {
        sec.restrictions[r].colors = {shared, pass.others[r]};
        build_restriction(pass, sec, sec.restrictions[r]);
      }
    }
    passes_.push_back(std::move(pass));
  }
}

void RestrictionDecoder::build_restriction(const Pass&, Sector& sec, Restriction& res) const {
  const Lattice& lat = code_.lattice;
  res.face_node.assign(lat.faces.size(), -1);
  res.node_face.clear();
  int next = 0;
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    if (lat.faces[f].color == res.colors[0] || lat.faces[f].color == res.colors[1]) {
      res.face_node[f] = next++;
      res.node_face.push_back(static_cast<int>(f));
    }
  }
  if (open_boundaries_) {
    res.virt[0] = next++;
    res.virt[1] = next++;
  }
  res.num_nodes = next;

  res.adj.assign(res.num_nodes, {});
  for (int q = 0; q < code_.n; ++q) {
    int ends[2];
    for (int side = 0; side < 2; ++side) {
      int f = qubit_face_of_color_[q][static_cast<int>(res.colors[side])];
      if (f >= 0)
        ends[side] = res.face_node[f];
      else if (open_boundaries_)
        ends[side] = res.virt[side];
      else
        throw std::logic_error("restriction decoder: periodic qubit missing a face color");
    }
    res.adj[ends[0]].push_back({ends[1], q});
    res.adj[ends[1]].push_back({ends[0], q});
  }
  // Deterministic relaxation order favors low qubit ids on ties.
  for (auto& lst : res.adj) std::sort(lst.begin(), lst.end(), [](auto a, auto b) {
    return a.second < b.second;
  });

  res.dist.assign(res.num_nodes, {});
  res.parent_edge.assign(res.num_nodes, {});
  res.parent_node.assign(res.num_nodes, {});
  DijkstraScratch scratch;
  for (int src = 0; src < res.num_nodes; ++src) {
    dijkstra(res.adj, sec.move_weight, src, scratch);
    res.dist[src] = scratch.dist;
    res.parent_edge[src] = scratch.parent_edge;
    res.parent_node[src] = scratch.parent_node;
  }
}

std::vector<int> RestrictionDecoder::matched_path(const Restriction& res, int from,
                                                  int to) const {
  std::vector<int> qubits;
  int cur = to;
  while (cur != from) {
    int pe = res.parent_edge[from][cur];
    if (pe < 0) throw std::logic_error("restriction decoder: broken shortest-path tree");
    qubits.push_back(pe);
    cur = res.parent_node[from][cur];
  }
  return qubits;
}

void RestrictionDecoder::decode_sector(const Pass& pass, int sector, const Syndrome& s,
                                       BitVec& support,
                                       const std::vector<double>* conditional_weights) const {
  const Sector& sec = pass.sectors[sector];
  const Lattice& lat = code_.lattice;
  int shared_ci = static_cast<int>(pass.shared);
  const std::vector<double>& lift_weights =
      conditional_weights ? *conditional_weights : sec.move_weight;

  // tau[v][key]: parity of matched-chain traversals of the triangulation
  // edge between shared-color face v (-1 for the boundary) and the face
  // given by key = (other color index, face id or -1 for its boundary).
  std::map<int, std::map<std::pair<int, int>, int>> tau;

  for (int r = 0; r < 2; ++r) {
    const Restriction& res = sec.restrictions[r];
    int other_ci = static_cast<int>(res.colors[1]);

    std::vector<int> anyons;
    for (std::size_t f = 0; f < lat.faces.size(); ++f) {
      if (res.face_node[f] < 0) continue;
      std::size_t gen = 2 * f + (sector == 0 ? 0 : 1);
      if (s.bits.get(gen)) anyons.push_back(res.face_node[f]);
    }
    int k = static_cast<int>(anyons.size());
    if (k == 0) continue;

    // Distances and path trees: cached marginal tables, or per-anyon
    // searches when decoding with conditional weights.
    std::vector<DijkstraScratch> trees;
    if (conditional_weights) {
      trees.resize(k);
      for (int i = 0; i < k; ++i)
        dijkstra(res.adj, *conditional_weights, anyons[i], trees[i]);
    }
    auto dist_of = [&](int i, int node) {
      return conditional_weights ? trees[i].dist[node] : res.dist[anyons[i]][node];
    };
    auto path_of = [&](int i, int to) {
      if (!conditional_weights) return matched_path(res, anyons[i], to);
      std::vector<int> qubits;
      int cur = to;
      while (cur != anyons[i]) {
        int pe = trees[i].parent_edge[cur];
        if (pe < 0) throw std::logic_error("restriction decoder: broken conditional path");
        qubits.push_back(pe);
        cur = trees[i].parent_node[cur];
      }
      return qubits;
    };

    std::vector<double> bd(k, kInfDist);
    if (open_boundaries_) {
      for (int i = 0; i < k; ++i)
        bd[i] = std::min(dist_of(i, res.virt[0]), dist_of(i, res.virt[1]));
    } else if (k % 2 != 0) {
      throw std::logic_error("restriction decoder: odd anyon count on a periodic lattice");
    }

    int nodes = k + ((k % 2) ? 1 : 0);
    std::vector<BlossomSolver::IntEdge> edges;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        double d = dist_of(i, anyons[j]);
        if (open_boundaries_) d = std::min(d, bd[i] + bd[j]);
        if (d == kInfDist) continue;
        edges.push_back({i, j, static_cast<std::int64_t>(std::llround(d * kIntScale))});
      }
      if (k % 2) {
        if (!open_boundaries_) throw std::logic_error("restriction decoder: parity");
        edges.push_back({i, k, static_cast<std::int64_t>(std::llround(bd[i] * kIntScale))});
      }
    }
    BlossomSolver solver;
    std::vector<int> mate;
    solver.solve(nodes, edges, mate);

    auto add_chain = [&](const std::vector<int>& qubits) {
      for (int q : qubits) {
        int rv = qubit_face_of_color_[q][shared_ci];
        int nk = qubit_face_of_color_[q][other_ci];
        tau[rv][{other_ci, nk}] ^= 1;
      }
    };
    auto boundary_path = [&](int node_i) {
      int target = dist_of(node_i, res.virt[0]) <= dist_of(node_i, res.virt[1]) ? res.virt[0]
                                                                                : res.virt[1];
      add_chain(path_of(node_i, target));
    };

    for (int i = 0; i < k; ++i) {
      int j = mate[i];
      if (j < i) continue;
      if (j == k) {
        boundary_path(i);
        continue;
      }
      double direct = dist_of(i, anyons[j]);
      if (open_boundaries_ && bd[i] + bd[j] < direct) {
        boundary_path(i);
        boundary_path(j);
      } else {
        add_chain(path_of(i, anyons[j]));
      }
    }
  }

  // Lift: at every shared-color face touched by matched chains, pick a
  // local qubit set reproducing the chain traversal parities on every
  // REAL neighboring face. Virtual faces are unmeasured so their keys
  // impose nothing; at a real face the set's own parity must also match
  // the face's syndrome bit.
  for (const auto& [v, keys] : tau) {
    std::vector<int> unknowns;
    if (v >= 0) {
      unknowns = lat.faces[v].qubits;
    } else {
      // Boundary lift: seed with qubits on a traversed real face, then
      // close over shared real faces so helper qubits stay available.
      std::vector<char> in(code_.n, 0);
      std::vector<int> frontier;
      for (int q = 0; q < code_.n; ++q) {
        if (qubit_face_of_color_[q][shared_ci] != -1) continue;
        for (int c = 0; c < 2; ++c) {
          int ci = static_cast<int>(pass.others[c]);
          int face = qubit_face_of_color_[q][ci];
          if (face < 0 || in[q]) continue;
          auto it = keys.find({ci, face});
          if (it != keys.end() && (it->second & 1)) {
            in[q] = 1;
            frontier.push_back(q);
          }
        }
      }
      while (!frontier.empty()) {
        int q = frontier.back();
        frontier.pop_back();
        unknowns.push_back(q);
        for (int c = 0; c < 2; ++c) {
          int face = qubit_face_of_color_[q][static_cast<int>(pass.others[c])];
          if (face < 0) continue;
          for (int q2 : lat.faces[face].qubits) {
            if (in[q2] || qubit_face_of_color_[q2][shared_ci] != -1) continue;
            in[q2] = 1;
            frontier.push_back(q2);
          }
        }
      }
      std::sort(unknowns.begin(), unknowns.end());
    }
    if (unknowns.empty()) {
      for (const auto& [key, parity] : keys)
        if ((parity & 1) && key.second >= 0)
          throw std::logic_error("restriction decoder: unliftable chain parity");
      continue;
    }

    // Constraint rows: every real (other color, face) pair seen from the
    // unknown qubits, with parity from tau (0 when untouched), plus the
    // syndrome parity of the lifted face itself.
    std::map<std::pair<int, int>, int> row_of;
    for (int q : unknowns)
      for (FaceColor oc : pass.others) {
        int ci = static_cast<int>(oc);
        auto key = std::make_pair(ci, qubit_face_of_color_[q][ci]);
        if (key.second >= 0 && !row_of.count(key)) {
          int id = static_cast<int>(row_of.size());
          row_of[key] = id;
        }
      }
    std::size_t num_rows = row_of.size() + (v >= 0 ? 1 : 0);
    BinaryMatrix a(num_rows, unknowns.size());
    BitVec rhs(num_rows);
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
      int q = unknowns[col];
      for (FaceColor oc : pass.others) {
        int ci = static_cast<int>(oc);
        auto key = std::make_pair(ci, qubit_face_of_color_[q][ci]);
        if (key.second >= 0) a.set(row_of.at(key), col, true);
      }
    }
    for (const auto& [key, row] : row_of) {
      auto it = keys.find(key);
      rhs.set(row, it != keys.end() && (it->second & 1));
    }
    if (v >= 0) {
      std::size_t parity_row = row_of.size();
      for (std::size_t col = 0; col < unknowns.size(); ++col) a.set(parity_row, col, true);
      std::size_t gen = 2 * static_cast<std::size_t>(v) + (sector == 0 ? 0 : 1);
      rhs.set(parity_row, s.bits.get(gen));
    }
    auto particular = gf2_solve(a, rhs);
    if (!particular) throw std::logic_error("restriction decoder: lifting system unsolvable");

    // Minimize the weighted size of the local set over the solution coset.
    std::vector<BitVec> kern = kernel_basis(a);
    if (kern.size() > 20) throw std::logic_error("restriction decoder: lifting coset too large");
    const auto& weights = lift_weights;
    BitVec best = *particular;
    double best_cost = 0.0;
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (best.get(c)) best_cost += weights[unknowns[c]];
    std::uint64_t combos = std::uint64_t{1} << kern.size();
    for (std::uint64_t m = 1; m < combos; ++m) {
      BitVec cand = *particular;
      for (std::size_t j = 0; j < kern.size(); ++j)
        if ((m >> j) & 1) cand ^= kern[j];
      double cost = 0.0;
      for (std::size_t c = 0; c < unknowns.size(); ++c)
        if (cand.get(c)) cost += weights[unknowns[c]];
      if (cost < best_cost) {
        best_cost = cost;
        best = cand;
      }
    }
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (best.get(c)) support.flip(unknowns[c]);
  }
}

std::pair<BitVec, BitVec> RestrictionDecoder::decode_pass(const Pass& pass,
                                                          const Syndrome& s) const {
  BitVec zpart(code_.n), xpart(code_.n);
  decode_sector(pass, 0, s, zpart, nullptr);
  // Second stage: X-sector flip odds conditioned on the Z support, so Y
  // correlations pull the X chains onto the qubits already carrying Z.
  std::vector<double> cond(code_.n);
  for (int q = 0; q < code_.n; ++q) {
    PauliProbs pr = css_frame_probs(code_, channel_, q);
    double p_i = std::max(0.0, 1.0 - pr[0] - pr[1] - pr[2]);
    double prob;
    if (zpart.get(q)) {
      double denom = pr[2] + pr[1];
      prob = denom > 0.0 ? pr[1] / denom : 0.0;
    } else {
      double denom = p_i + pr[0];
      prob = denom > 0.0 ? pr[0] / denom : 0.0;
    }
    if (prob >= 0.5) prob = 0.5 - 1e-12;
    cond[q] = log_odds_weight(prob);
  }
  decode_sector(pass, 1, s, xpart, &cond);
  return {xpart, zpart};
}

DecodeResult RestrictionDecoder::decode(const Syndrome& s) {
  if (s.bits.size() != code_.generators.size())
    throw std::invalid_argument("restriction decoder: syndrome length mismatch");

  BitVec best_x, best_z;
  double best_cost = kInfDist;
  for (const Pass& pass : passes_) {
    auto [xpart, zpart] = decode_pass(pass, s);
    double cost = 0.0;
    for (int q = 0; q < code_.n; ++q) {
      unsigned c =
          static_cast<unsigned>(xpart.get(q)) | (static_cast<unsigned>(zpart.get(q)) << 1);
      // log_penalty_ rows are ordered I, X, Z, Y; map the (x, z) bits.
      static constexpr unsigned kPenaltyIndex[4] = {0, 1, 2, 3};
      if (c) cost += log_penalty_[q][kPenaltyIndex[c]];
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_x = xpart;
      best_z = zpart;
    }
  }

  DecodeResult res;
  res.correction = PauliOperator(code_.n);
  res.correction.x = best_x;
  res.correction.z = best_z;
  // Back to the deformed frame.
  const auto& mask = code_.deformation.pattern.words();
  auto& xw = res.correction.x.words();
  auto& zw = res.correction.z.words();
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t xs = xw[w], zs = zw[w], m = mask[w];
    xw[w] = (xs & ~m) | (zs & m);
    zw[w] = (zs & ~m) | (xs & m);
  }
  if (!(syndrome_of(code_, res.correction).bits == s.bits))
    throw std::logic_error("restriction decoder: correction does not reproduce the syndrome");
  return res;
}

std::vector<SyndromeGraph> RestrictionDecoder::build_graphs(const Syndrome& s) const {
  std::vector<SyndromeGraph> out;
  const Lattice& lat = code_.lattice;
  const Pass& pass = passes_.front();
  for (int sector = 0; sector < 2; ++sector) {
    const Sector& sec = pass.sectors[sector];
    for (int r = 0; r < 2; ++r) {
      const Restriction& res = sec.restrictions[r];
      SyndromeGraph graph;
      std::vector<int> anyons;
      for (std::size_t f = 0; f < lat.faces.size(); ++f) {
        if (res.face_node[f] < 0) continue;
        std::size_t gen = 2 * f + (sector == 0 ? 0 : 1);
        if (s.bits.get(gen)) {
          anyons.push_back(res.face_node[f]);
          graph.nodes.push_back({static_cast<int>(gen), false});
        }
      }
      int k = static_cast<int>(anyons.size());
      int bnodes = open_boundaries_ ? 2 : 0;
      for (int b = 0; b < bnodes; ++b) graph.nodes.push_back({-1, true});
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          double d = res.dist[anyons[i]][anyons[j]];
          if (d == kInfDist) continue;
          graph.edges.push_back({i, j, d, matched_path(res, anyons[i], anyons[j])});
        }
        for (int b = 0; b < bnodes; ++b) {
          double d = res.dist[anyons[i]][res.virt[b]];
          if (d == kInfDist) continue;
          graph.edges.push_back({i, k + b, d, matched_path(res, anyons[i], res.virt[b])});
        }
      }
      if (bnodes == 2) graph.edges.push_back({k, k + 1, 0.0, {}});
      out.push_back(std::move(graph));
    }
  }
  return out;
}

std::vector<SyndromeGraph> build_restricted_graphs(const StabilizerCode& code,
                                                   const NoiseChannel& channel,
                                                   const Syndrome& s) {
  RestrictionDecoder dec(code, channel, false);
  return dec.build_graphs(s);
}

SurfaceMatchingDecoder::SurfaceMatchingDecoder(const StabilizerCode& code,
                                               const NoiseChannel& channel)
    : code_(code), channel_(channel) {
  const Lattice& lat = code_.lattice;
  if (lat.kind != LatticeKind::kSquareSurface)
    throw std::invalid_argument("surface decoder: square surface lattice required");

  for (int sector = 0; sector < 2; ++sector) {
    Sector& sec = sectors_[sector];
    sec.move_weight.resize(code_.n);
    for (int q = 0; q < code_.n; ++q) {
      double p = sector_flip_prob(css_frame_probs(code_, channel_, q), sector);
      if (p >= 0.5) throw std::invalid_argument("surface decoder: flip marginal at or above 1/2");
      sec.move_weight[q] = log_odds_weight(p);
    }
    FaceRole role = sector == 0 ? FaceRole::kXType : FaceRole::kZType;
    sec.gen_node.assign(code_.generators.size(), -1);
    int next = 0;
    for (std::size_t g = 0; g < lat.faces.size(); ++g) {
      if (lat.faces[g].role == role) {
        sec.gen_node[g] = next++;
        sec.node_gen.push_back(static_cast<int>(g));
      }
    }
    sec.virt = next++;
    sec.num_nodes = next;

    std::vector<std::vector<std::pair<int, int>>> adj(sec.num_nodes);
    for (int q = 0; q < code_.n; ++q) {
      std::vector<int> ends;
      for (int f : lat.qubit_faces[q])
        if (sec.gen_node[f] >= 0) ends.push_back(sec.gen_node[f]);
      while (ends.size() < 2) ends.push_back(sec.virt);
      if (ends.size() != 2)
        throw std::logic_error("surface decoder: qubit touches more than two checks per sector");
      if (ends[0] == ends[1]) continue;
      adj[ends[0]].push_back({ends[1], q});
      adj[ends[1]].push_back({ends[0], q});
    }
    for (auto& lst : adj)
      std::sort(lst.begin(), lst.end(), [](auto a, auto b) { return a.second < b.second; });

    sec.dist.assign(sec.num_nodes, {});
    sec.parent_edge.assign(sec.num_nodes, {});
    sec.parent_node.assign(sec.num_nodes, {});
    DijkstraScratch scratch;
    for (int src = 0; src < sec.num_nodes; ++src) {
      dijkstra(adj, sec.move_weight, src, scratch);
      sec.dist[src] = scratch.dist;
      sec.parent_edge[src] = scratch.parent_edge;
      sec.parent_node[src] = scratch.parent_node;
    }
  }
}

DecodeResult SurfaceMatchingDecoder::decode(const Syndrome& s) {
  if (s.bits.size() != code_.generators.size())
    throw std::invalid_argument("surface decoder: syndrome length mismatch");
  BitVec parts[2] = {BitVec(code_.n), BitVec(code_.n)};

  for (int sector = 0; sector < 2; ++sector) {
    const Sector& sec = sectors_[sector];
    std::vector<int> anyons;
    for (std::size_t g = 0; g < code_.generators.size(); ++g)
      if (sec.gen_node[g] >= 0 && s.bits.get(g)) anyons.push_back(sec.gen_node[g]);
    int k = static_cast<int>(anyons.size());
    if (k == 0) continue;

    std::vector<double> bd(k);
    for (int i = 0; i < k; ++i) bd[i] = sec.dist[anyons[i]][sec.virt];
    int nodes = k + ((k % 2) ? 1 : 0);
    std::vector<BlossomSolver::IntEdge> edges;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        double d = std::min(sec.dist[anyons[i]][anyons[j]], bd[i] + bd[j]);
        edges.push_back({i, j, static_cast<std::int64_t>(std::llround(d * kIntScale))});
      }
      if (k % 2)
        edges.push_back({i, k, static_cast<std::int64_t>(std::llround(bd[i] * kIntScale))});
    }
    BlossomSolver solver;
    std::vector<int> mate;
    solver.solve(nodes, edges, mate);

    auto walk = [&](int from, int to) {
      int cur = to;
      while (cur != from) {
        parts[sector].flip(sec.parent_edge[from][cur]);
        cur = sec.parent_node[from][cur];
      }
    };
    for (int i = 0; i < k; ++i) {
      int j = mate[i];
      if (j < i) continue;
      if (j == k) {
        walk(anyons[i], sec.virt);
      } else if (bd[i] + bd[j] < sec.dist[anyons[i]][anyons[j]]) {
        walk(anyons[i], sec.virt);
        walk(anyons[j], sec.virt);
      } else {
        walk(anyons[i], anyons[j]);
      }
    }
  }

  DecodeResult res;
  res.correction = PauliOperator(code_.n);
  res.correction.x = parts[1];
  res.correction.z = parts[0];
  const auto& mask = code_.deformation.pattern.words();
  auto& xw = res.correction.x.words();
  auto& zw = res.correction.z.words();
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t xs = xw[w], zs = zw[w], m = mask[w];
    xw[w] = (xs & ~m) | (zs & m);
    zw[w] = (zs & ~m) | (xs & m);
  }
  if (!(syndrome_of(code_, res.correction).bits == s.bits))
    throw std::logic_error("surface decoder: correction does not reproduce the syndrome");
  return res;
}

}  // namespace colorsim
