#include "colorsim/infinite_bias_decoder.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace colorsim {

namespace {
constexpr double kBig = std::numeric_limits<double>::infinity();
}

InfiniteBiasDecoder::InfiniteBiasDecoder(const StabilizerCode& code, const NoiseChannel& channel)
    : code_(code), channel_(channel) {
  if (!channel_.is_uniform() || !channel_.eta.infinite)
    throw std::invalid_argument("infinite-bias decoder: pure dephasing channel required");
  if (!code_.lattice.is_color_code() || !code_.deformation.pattern.any())
    throw std::invalid_argument("infinite-bias decoder: stripe-deformed color code required");

  qubit_weight_.resize(code_.n);
  for (int q = 0; q < code_.n; ++q) qubit_weight_[q] = log_odds_weight(channel_.p);

  build_pass(true);
  build_pass(false);
}

// Chains of one qubit type. Face f checks the parity of its same-type
// qubits: the X positions of one of the two face generators, depending on
// which type is masked.
void InfiniteBiasDecoder::build_pass(bool masked_type) {
  const Lattice& lat = code_.lattice;
  std::vector<int> type_qubits;
  std::vector<int> position(code_.n, -1);
  for (int q = 0; q < code_.n; ++q)
    if (code_.deformation.masked(q) == masked_type) type_qubits.push_back(q);

  // Window per face: same-type members. Masked qubits are checked by the
  // deformed dual generator (2f + 1), unmasked by the primal (2f).
  struct RawWindow {
    int gen;
    std::vector<int> members;
    FaceColor color;
  };
  std::vector<RawWindow> raw;
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    RawWindow w;
    w.gen = static_cast<int>(2 * f + (masked_type ? 1 : 0));
    w.color = lat.faces[f].color;
    for (int q : lat.faces[f].qubits)
      if (code_.deformation.masked(q) == masked_type) w.members.push_back(q);
    if (w.members.empty()) {
      always_zero_gens_.push_back(w.gen);
      continue;
    }
    if (w.members.size() > 3)
      throw std::invalid_argument("infinite-bias decoder: face checks more than 3 same-type qubits");
    raw.push_back(std::move(w));
  }

  std::vector<Chain> chains;
  if (lat.boundary.kind == BoundaryKind::kOpenTriangular) {
    // Open lattices: a stripe domain is a fixed band of the stripe
    // coordinate; order its qubits by row.
    std::map<int, std::vector<int>> by_domain;
    for (int q : type_qubits) {
      int m = lat.stripe_coordinate(q);
      int dom = m >= 0 ? m / 3 : -((-m + 2) / 3);
      by_domain[dom].push_back(q);
    }
    for (auto& [dom, qs] : by_domain) {
      std::sort(qs.begin(), qs.end(), [&](int a, int b) {
        return lat.qubits[a].a < lat.qubits[b].a;
      });
      Chain c;
      c.qubits = qs;
      chains.push_back(std::move(c));
    }
  } else {
    // Periodic lattices: consecutive chain qubits share two windows; walk
    // the resulting cycles.
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& w : raw)
      for (std::size_t i = 0; i < w.members.size(); ++i)
        for (std::size_t j = i + 1; j < w.members.size(); ++j) {
          int a = std::min(w.members[i], w.members[j]);
          int b = std::max(w.members[i], w.members[j]);
          pair_count[{a, b}] += 1;
        }
    std::vector<std::vector<int>> adj(code_.n);
    for (const auto& [pr, count] : pair_count) {
      if (count >= 2) {
        adj[pr.first].push_back(pr.second);
        adj[pr.second].push_back(pr.first);
      }
    }
    for (int q : type_qubits) {
      std::sort(adj[q].begin(), adj[q].end());
      if (adj[q].size() != 2)
        throw std::invalid_argument("infinite-bias decoder: stripe chains are not cycles");
    }
    std::vector<char> seen(code_.n, 0);
    for (int q : type_qubits) {
      if (seen[q]) continue;
      Chain c;
      c.cyclic = true;
      int prev = -1, cur = q;
      while (true) {
        c.qubits.push_back(cur);
        seen[cur] = 1;
        int next = -1;
        for (int nb : adj[cur])
          if (nb != prev && !seen[nb]) next = nb;
        if (next < 0) break;
        prev = cur;
        cur = next;
      }
      chains.push_back(std::move(c));
    }
  }

  // Attach windows as contiguous runs in chain coordinates.
  for (Chain& chain : chains) {
    int n_ch = static_cast<int>(chain.qubits.size());
    for (int pos = 0; pos < n_ch; ++pos) position[chain.qubits[pos]] = pos;
    for (const auto& w : raw) {
      if (position[w.members[0]] < 0) continue;
      std::vector<int> pos;
      for (int q : w.members) pos.push_back(position[q]);
      std::sort(pos.begin(), pos.end());
      int size = static_cast<int>(pos.size());
      int first = pos[0];
      bool contiguous = (pos.back() - pos[0] == size - 1);
      if (!contiguous && chain.cyclic && pos[0] == 0 && pos.back() == n_ch - 1) {
        // Window straddles the wrap: start just after the break.
        int brk = 0;
        while (brk + 1 < size && pos[brk + 1] == pos[brk] + 1) ++brk;
        first = pos[(brk + 1) % size];
        contiguous = true;
        for (int i = 0; i < size; ++i)
          if (std::find(pos.begin(), pos.end(), (first + i) % n_ch) == pos.end())
            contiguous = false;
      }
      if (!contiguous)
        throw std::invalid_argument("infinite-bias decoder: face support is not a chain window");
      chain.windows.push_back({w.gen, first, size, w.color});
    }
    for (int pos = 0; pos < n_ch; ++pos) position[chain.qubits[pos]] = -1;
    std::sort(chain.windows.begin(), chain.windows.end(),
              [](const Window& a, const Window& b) { return a.first < b.first; });
  }

  chains_[masked_type ? 0 : 1] = std::move(chains);

  // Every raw window must have landed on exactly one chain.
  std::size_t attached = 0;
  for (const Chain& c : chains_[masked_type ? 0 : 1]) attached += c.windows.size();
  if (attached != raw.size())
    throw std::logic_error("infinite-bias decoder: window bookkeeping failed");
}

// Exact minimum-weight assignment on one chain: a sweep keeping the last
// two decisions as state. Checks are contiguous windows of 1..3 qubits;
// on cyclic chains the two seam values are fixed up front and windows
// spanning the seam are settled at the end. Equivalent to decoding every
// repetition structure along the stripe symmetries at once, and never
// weaker than matching the two symmetry families in sequence.
void InfiniteBiasDecoder::decode_chain(const Chain& chain, const Syndrome& s,
                                       BitVec& support) const {
  int n_ch = static_cast<int>(chain.qubits.size());
  auto weight = [&](int pos) { return qubit_weight_[chain.qubits[pos]]; };
  auto sbit = [&](const Window* w) { return static_cast<int>(s.bits.get(w->gen)); };

  if (n_ch == 1) {
    int parity = -1;
    for (const Window& w : chain.windows) {
      int want = sbit(&w);
      if (parity >= 0 && parity != want)
        throw std::invalid_argument("infinite-bias decoder: malformed syndrome on a chain");
      parity = want;
    }
    int value = parity < 0 ? 0 : parity;
    if (value && weight(0) > 0 && parity < 0) value = 0;
    if (value) support.flip(chain.qubits[0]);
    return;
  }

  std::vector<std::vector<const Window*>> ending(n_ch);
  std::vector<const Window*> seam;
  for (const Window& w : chain.windows) {
    int last = w.first + w.size - 1;
    if (last < n_ch)
      ending[last].push_back(&w);
    else
      seam.push_back(&w);  // cyclic window across the wrap point
  }
  if (!seam.empty() && !chain.cyclic)
    throw std::logic_error("infinite-bias decoder: window overruns an open chain");

  auto window_parity = [&](const Window* w, auto value_at) {
    int parity = 0;
    for (int i = 0; i < w->size; ++i) parity ^= value_at((w->first + i) % n_ch);
    return parity;
  };

  double best_total = kBig;
  std::vector<int> best_err;
  int seeds = chain.cyclic ? 4 : 1;
  for (int seed = 0; seed < seeds; ++seed) {
    // For cyclic chains fix (e0, e1); open chains sweep all starts inside
    // the DP itself (seed loop runs once with free init states).
    std::vector<std::array<double, 4>> cost(n_ch, {kBig, kBig, kBig, kBig});
    std::vector<std::array<int, 4>> from(n_ch, {-1, -1, -1, -1});

    for (int e0 = 0; e0 < 2; ++e0) {
      if (chain.cyclic && e0 != (seed >> 1)) continue;
      bool ok0 = true;
      for (const Window* w : ending[0])
        if ((e0 != 0) != (sbit(w) != 0)) ok0 = false;
      if (!ok0) continue;
      for (int e1 = 0; e1 < 2; ++e1) {
        if (chain.cyclic && e1 != (seed & 1)) continue;
        bool ok1 = true;
        for (const Window* w : ending[1]) {
          int parity = (w->size >= 2 ? e0 : 0) ^ e1;
          if (parity != sbit(w)) ok1 = false;
        }
        if (!ok1) continue;
        double c = (e0 ? weight(0) : 0.0) + (e1 ? weight(1) : 0.0);
        int st = 2 * e0 + e1;
        if (c < cost[1][st]) cost[1][st] = c;
      }
    }

    for (int h = 2; h < n_ch; ++h) {
      for (int prev = 0; prev < 4; ++prev) {
        if (cost[h - 1][prev] == kBig) continue;
        int e2 = prev >> 1, e1 = prev & 1;
        for (int e0 = 0; e0 < 2; ++e0) {
          bool ok = true;
          for (const Window* w : ending[h]) {
            int parity = e0;
            if (w->size >= 2) parity ^= e1;
            if (w->size >= 3) parity ^= e2;
            if (parity != sbit(w)) ok = false;
          }
          if (!ok) continue;
          double c = cost[h - 1][prev] + (e0 ? weight(h) : 0.0);
          int st = 2 * e1 + e0;
          if (c < cost[h][st]) {
            cost[h][st] = c;
            from[h][st] = prev;
          }
        }
      }
    }

    for (int st = 0; st < 4; ++st) {
      if (cost[n_ch - 1][st] == kBig) continue;
      if (chain.cyclic) {
        // Settle the seam windows with the fixed (e0, e1) seed.
        int e_last = st & 1, e_prev = st >> 1;
        int e0 = seed >> 1, e1 = seed & 1;
        bool ok = true;
        for (const Window* w : seam) {
          int parity = window_parity(w, [&](int pos) {
            if (pos == 0) return e0;
            if (pos == 1) return e1;
            if (pos == n_ch - 1) return e_last;
            if (pos == n_ch - 2) return e_prev;
            throw std::logic_error("infinite-bias decoder: seam window too wide");
            return 0;
          });
          if (parity != sbit(w)) ok = false;
        }
        if (!ok) continue;
      }
      if (cost[n_ch - 1][st] < best_total) {
        best_total = cost[n_ch - 1][st];
        // Backtrack.
        std::vector<int> err(n_ch, 0);
        int cur = st;
        for (int h = n_ch - 1; h >= 1; --h) {
          err[h] = cur & 1;
          int prev = from[h][cur];
          if (h == 1) {
            err[0] = cur >> 1;
            break;
          }
          cur = prev;
        }
        best_err = std::move(err);
      }
    }
  }
  if (best_err.empty())
    throw std::invalid_argument("infinite-bias decoder: malformed syndrome on a chain");
  for (int pos = 0; pos < n_ch; ++pos)
    if (best_err[pos]) support.flip(chain.qubits[pos]);
}

DecodeResult InfiniteBiasDecoder::decode(const Syndrome& s) {
  if (s.bits.size() != code_.generators.size())
    throw std::invalid_argument("infinite-bias decoder: syndrome length mismatch");
  for (int g : always_zero_gens_)
    if (s.bits.get(g))
      throw std::invalid_argument("infinite-bias decoder: syndrome outside the dephasing sector");

  BitVec support(code_.n);
  for (int pass = 0; pass < 2; ++pass) {
    for (const Chain& chain : chains_[pass]) {
      decode_chain(chain, s, support);
    }
  }
  DecodeResult res;
  res.correction = PauliOperator(code_.n);
  res.correction.z = support;
  if (!(syndrome_of(code_, res.correction).bits == s.bits))
    throw std::logic_error("infinite-bias decoder: correction does not reproduce the syndrome");
  return res;
}

}  // namespace colorsim
