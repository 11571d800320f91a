#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "colorsim/code.hpp"
#include "colorsim/noise.hpp"
#include "colorsim/rng.hpp"
#include "colorsim/syndrome.hpp"

namespace colorsim {

enum class DecoderKind { kExactML, kRestriction, kInfiniteBias, kSurfaceMatching };

const char* to_string(DecoderKind k);
DecoderKind decoder_kind_from_string(const std::string& s);

std::unique_ptr<Decoder> make_decoder(DecoderKind kind, const StabilizerCode& code,
                                      const NoiseChannel& channel);

struct TrialRecord {
  std::uint64_t trial_index = 0;
  int error_weight = 0;
  int syndrome_weight = 0;
  bool success = false;
  int residual_class = 0;
};

// One sample-decode-classify round. Asserts that the correction restores
// the code space; success means the residual acts trivially on every
// logical pair.
TrialRecord run_trial(const StabilizerCode& code, const NoiseChannel& channel, Decoder& decoder,
                      std::uint64_t trial_index, std::uint64_t seed,
                      std::uint64_t stream_salt = 0);

struct SweepConfig {
  std::vector<StabilizerCode> codes;
  std::vector<std::string> code_labels;
  std::vector<int> code_sizes;  // reported distance / linear size per code
  std::vector<double> p_grid;
  Bias eta = Bias::finite(0.5);
  DecoderKind decoder = DecoderKind::kRestriction;
  std::uint64_t max_trials = 1000000;
  std::uint64_t target_failures = 5000;  // 0 disables early stop
  std::uint64_t seed = 1;
  int workers = 0;  // 0 = hardware concurrency
};

struct PointStats {
  std::string code_label;
  int size = 0;
  double p = 0.0;
  Bias eta;
  DecoderKind decoder = DecoderKind::kRestriction;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double p_l = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  // Extra bookkeeping for persistence.
  std::string family;
  Rational kappa{0, 1};
  Rational phi{0, 1};
  int dims[2] = {0, 0};
};

struct TrialStatistics {
  std::vector<PointStats> points;
};

// Monte Carlo sweep over (code, p) points. Trial randomness depends only
// on (seed, point index, trial index), so results are identical for any
// worker count; the stop rule is evaluated on fixed chunk boundaries.
TrialStatistics run_sweep(const SweepConfig& cfg);

// 95% Wilson score interval.
void wilson_interval(std::uint64_t failures, std::uint64_t trials, double& lo, double& hi);

}  // namespace colorsim
