#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "colorsim/code.hpp"
#include "colorsim/matching.hpp"
#include "colorsim/noise.hpp"
#include "colorsim/syndrome.hpp"

namespace colorsim {

// Weighted graph handed to the matching engine: flipped checks of two
// colors plus boundary nodes, edges carrying the qubit chains realizing
// them.
struct SyndromeGraphNode {
  int check = -1;  // generator index, or -1 for a boundary node
  bool is_boundary = false;
};

struct SyndromeGraphEdge {
  int u = 0, v = 0;
  double weight = 0.0;
  std::vector<int> path_qubits;
};

struct SyndromeGraph {
  std::vector<SyndromeGraphNode> nodes;
  std::vector<SyndromeGraphEdge> edges;
};

// Matching-based color-code decoder: anyons of each error sector are
// matched on two color-restricted lattices and the matched chains are
// lifted back to a qubit correction at the shared-color faces.
//
// Decoding happens in the undeformed frame: the code's Hadamard mask is
// folded into per-qubit flip marginals, so one engine serves the CSS and
// the deformed codes alike.
//
// A single shared color occasionally routes a matching around the wrong
// side of a boundary; by default the decoder therefore runs one pass per
// shared color and keeps the highest-probability correction.
class RestrictionDecoder : public Decoder {
 public:
  RestrictionDecoder(const StabilizerCode& code, const NoiseChannel& channel,
                     bool ensemble = true, FaceColor shared_color = FaceColor::kRed);

  DecodeResult decode(const Syndrome& s) override;
  std::string name() const override { return "restriction"; }

  // The four restricted graphs of the primary pass for a syndrome (sector
  // order: Z then X; restriction order: shared+first other color, then
  // shared+second), with the full edge set materialized. Intended for
  // debugging and export.
  std::vector<SyndromeGraph> build_graphs(const Syndrome& s) const;

  const StabilizerCode& code() const { return code_; }

 private:
  struct Restriction {
    std::array<FaceColor, 2> colors;
    std::vector<int> face_node;  // face index -> node id or -1
    std::vector<int> node_face;
    int virt[2] = {-1, -1};
    int num_nodes = 0;
    // move graph: node -> (neighbor node, qubit realizing the move)
    std::vector<std::vector<std::pair<int, int>>> adj;
    std::vector<std::vector<double>> dist;
    std::vector<std::vector<int>> parent_edge;
    std::vector<std::vector<int>> parent_node;
  };

  struct Sector {
    std::vector<double> flip_prob;
    std::vector<double> move_weight;
    std::array<Restriction, 2> restrictions;
  };

  // One shared-color decoding pass.
  struct Pass {
    FaceColor shared;
    std::array<FaceColor, 2> others;
    std::array<Sector, 2> sectors;  // 0: Z-part anyons, 1: X-part anyons
  };

  void build_restriction(const Pass& pass, Sector& sec, Restriction& res) const;
  std::vector<int> matched_path(const Restriction& res, int from, int to) const;
  // When conditional_weights is set, matching distances and the lift costs
  // come from per-decode shortest paths under those weights instead of the
  // cached marginal-weight tables.
  void decode_sector(const Pass& pass, int sector, const Syndrome& s, BitVec& support,
                     const std::vector<double>* conditional_weights) const;
  // Whole-pass decode in the undeformed frame; returns (x part, z part).
  // The X sector runs after the Z sector with weights conditioned on the
  // chosen Z support, which routes the X chains along likely Y sites.
  std::pair<BitVec, BitVec> decode_pass(const Pass& pass, const Syndrome& s) const;

  StabilizerCode code_;
  NoiseChannel channel_;
  bool open_boundaries_ = false;
  std::vector<std::array<int, 3>> qubit_face_of_color_;  // -1 when missing
  std::vector<std::array<double, 4>> log_penalty_;       // -log p(c)/p(I), css frame
  std::vector<Pass> passes_;
};

// Restricted graphs of a fresh single-pass decoder; convenience form for
// exports and debugging.
std::vector<SyndromeGraph> build_restricted_graphs(const StabilizerCode& code,
                                                   const NoiseChannel& channel,
                                                   const Syndrome& s);

// Standard two-sector matching decoder for the square surface codes (CSS
// or deformed), same weight rule, no lifting.
class SurfaceMatchingDecoder : public Decoder {
 public:
  SurfaceMatchingDecoder(const StabilizerCode& code, const NoiseChannel& channel);

  DecodeResult decode(const Syndrome& s) override;
  std::string name() const override { return "surface-matching"; }

 private:
  struct Sector {
    std::vector<int> gen_node;
    std::vector<int> node_gen;
    int virt = -1;
    int num_nodes = 0;
    std::vector<double> move_weight;
    std::vector<std::vector<double>> dist;
    std::vector<std::vector<int>> parent_edge;
    std::vector<std::vector<int>> parent_node;
  };

  StabilizerCode code_;
  NoiseChannel channel_;
  std::array<Sector, 2> sectors_;
};

}  // namespace colorsim
