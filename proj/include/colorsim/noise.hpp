#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "colorsim/pauli.hpp"
#include "colorsim/rng.hpp"

namespace colorsim {

struct DeformationSpec;  // code.hpp

// Noise bias eta = p_Z / (p_X + p_Y). Pure dephasing is kept as an exact
// tag rather than a large float.
struct Bias {
  double value = 0.5;
  bool infinite = false;

  static Bias finite(double v) { return {v, false}; }
  static Bias inf() { return {0.0, true}; }

  std::string to_string() const;
  static Bias parse(const std::string& s);

  friend bool operator==(const Bias&, const Bias&) = default;
};

// Per-qubit probabilities (p_X, p_Y, p_Z).
using PauliProbs = std::array<double, 3>;

// (p_X, p_Y, p_Z) for total error rate p and bias eta, with p_X = p_Y.
PauliProbs channel_probs(double p, Bias eta);

// Independent Pauli noise. Uniform across qubits unless per_qubit is set.
struct NoiseChannel {
  double p = 0.0;
  Bias eta = Bias::finite(0.5);
  std::vector<PauliProbs> per_qubit;  // empty means uniform

  static NoiseChannel uniform(double p, Bias eta);

  bool is_uniform() const { return per_qubit.empty(); }
  PauliProbs probs_at(std::size_t q) const {
    return per_qubit.empty() ? channel_probs(p, eta) : per_qubit[q];
  }
  // Probability of the 2-bit Pauli code (0=I,1=X,2=Z,3=Y) at qubit q.
  double prob_of(std::size_t q, unsigned code) const {
    PauliProbs pr = probs_at(q);
    switch (code) {
      case 0: return 1.0 - pr[0] - pr[1] - pr[2];
      case 1: return pr[0];
      case 2: return pr[2];
      default: return pr[1];
    }
  }
};

// One i.i.d. sample from the channel; deterministic given the stream state.
PauliOperator sample_error(const NoiseChannel& ch, std::size_t n, CounterRng& rng);

// Channel with p_X and p_Z exchanged exactly on masked qubits. Simulating a
// Hadamard-deformed code on its undeformed parent is equivalent to running
// the parent under this channel.
NoiseChannel effective_permuted_channel(const NoiseChannel& ch, const DeformationSpec& mask,
                                        std::size_t n);

// -log(q / (1 - q)) with q clamped to [1e-300, 1 - 1e-16] so infinite-bias
// channels yield large finite weights.
double log_odds_weight(double q);

}  // namespace colorsim
