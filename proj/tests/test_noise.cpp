#include <doctest.h>

#include <cmath>

#include "colorsim/code.hpp"
#include "colorsim/noise.hpp"

using namespace colorsim;

TEST_CASE("channel_probs at the named points") {
  auto depol = channel_probs(0.3, Bias::finite(0.5));
  CHECK(depol[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(depol[1] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(depol[2] == doctest::Approx(0.1).epsilon(1e-14));

  auto deph = channel_probs(0.3, Bias::inf());
  CHECK(deph[0] == 0.0);
  CHECK(deph[1] == 0.0);
  CHECK(deph[2] == 0.3);

  auto biased = channel_probs(0.25, Bias::finite(50));
  CHECK(biased[0] == doctest::Approx(0.25 / 102.0).epsilon(1e-14));
  CHECK(biased[1] == doctest::Approx(0.25 / 102.0).epsilon(1e-14));
  CHECK(biased[2] == doctest::Approx(12.5 / 51.0).epsilon(1e-14));
}

TEST_CASE("channel probabilities recover p and eta") {
  for (double p : {0.01, 0.2, 0.6}) {
    for (double eta : {0.5, 1.0, 3.0, 42.0, 30000.0}) {
      auto pr = channel_probs(p, Bias::finite(eta));
      CHECK(pr[0] + pr[1] + pr[2] == doctest::Approx(p).epsilon(1e-12));
      CHECK(pr[2] / (pr[0] + pr[1]) == doctest::Approx(eta).epsilon(1e-12));
    }
    auto pr = channel_probs(p, Bias::inf());
    CHECK(pr[0] + pr[1] + pr[2] == doctest::Approx(p).epsilon(1e-15));
    CHECK(pr[0] == 0.0);
  }
  CHECK_THROWS(channel_probs(-0.1, Bias::finite(1)));
  CHECK_THROWS(channel_probs(1.1, Bias::finite(1)));
  CHECK_THROWS(channel_probs(0.1, Bias::finite(0.3)));
}

TEST_CASE("sampler hits the degenerate limits") {
  CounterRng rng(1, 0);
  NoiseChannel none = NoiseChannel::uniform(0.0, Bias::finite(0.5));
  for (int t = 0; t < 20; ++t) CHECK(sample_error(none, 12, rng).is_identity());

  NoiseChannel full = NoiseChannel::uniform(1.0, Bias::inf());
  for (int t = 0; t < 20; ++t) {
    PauliOperator e = sample_error(full, 12, rng);
    CHECK(e.weight() == 12);
    CHECK_FALSE(e.x.any());
  }
}

TEST_CASE("sampler frequencies match the channel within 4 sigma") {
  NoiseChannel ch = NoiseChannel::uniform(0.3, Bias::finite(0.5));
  const int kTrials = 1000000;
  int counts[4] = {0, 0, 0, 0};
  CounterRng rng(2024, 7);
  for (int t = 0; t < kTrials; ++t) {
    PauliOperator e = sample_error(ch, 1, rng);
    counts[e.pauli_at(0)] += 1;
  }
  double expected[4] = {0.7, 0.1, 0.1, 0.1};
  for (int c = 0; c < 4; ++c) {
    double sigma = std::sqrt(expected[c] * (1 - expected[c]) * kTrials);
    CHECK(std::abs(counts[c] - expected[c] * kTrials) < 4 * sigma);
  }
}

TEST_CASE("sampler is deterministic given the stream") {
  NoiseChannel ch = NoiseChannel::uniform(0.2, Bias::finite(10));
  CounterRng a(5, 99), b(5, 99);
  for (int t = 0; t < 10; ++t) CHECK(sample_error(ch, 50, a) == sample_error(ch, 50, b));
}

TEST_CASE("effective permuted channel swaps p_X and p_Z on masked qubits") {
  Lattice lat = build_hex_triangular(5);
  DeformationSpec mask = make_deformation(lat, {1, 1}, {1, 6});
  NoiseChannel ch = NoiseChannel::uniform(0.25, Bias::finite(50));
  NoiseChannel eff = effective_permuted_channel(ch, mask, lat.num_qubits());
  auto pr = channel_probs(0.25, Bias::finite(50));
  for (std::size_t q = 0; q < lat.num_qubits(); ++q) {
    if (mask.pattern.get(q)) {
      CHECK(eff.per_qubit[q][0] == pr[2]);
      CHECK(eff.per_qubit[q][2] == pr[0]);
      CHECK(eff.per_qubit[q][1] == pr[1]);
    } else {
      CHECK(eff.per_qubit[q][0] == pr[0]);
    }
  }

  // Zero mask leaves the channel unchanged; full mask at infinite bias
  // yields a pure bit-flip channel.
  DeformationSpec zero = make_deformation(lat, {0, 1}, {0, 1});
  NoiseChannel same = effective_permuted_channel(ch, zero, lat.num_qubits());
  for (std::size_t q = 0; q < lat.num_qubits(); ++q) CHECK(same.per_qubit[q] == pr);

  DeformationSpec full;
  full.kappa = {1, 1};
  full.pattern = BitVec(lat.num_qubits());
  for (std::size_t q = 0; q < lat.num_qubits(); ++q) full.pattern.set(q, true);
  NoiseChannel flip =
      effective_permuted_channel(NoiseChannel::uniform(0.3, Bias::inf()), full, lat.num_qubits());
  for (std::size_t q = 0; q < lat.num_qubits(); ++q) {
    CHECK(flip.per_qubit[q][0] == 0.3);
    CHECK(flip.per_qubit[q][2] == 0.0);
  }
}

TEST_CASE("log odds weights are clamped and finite") {
  CHECK(std::isfinite(log_odds_weight(0.0)));
  CHECK(log_odds_weight(0.0) > 600.0);
  CHECK(log_odds_weight(0.5) == doctest::Approx(0.0));
  CHECK(log_odds_weight(0.1) == doctest::Approx(std::log(9.0)));
}

TEST_CASE("bias round-trips through text") {
  CHECK(Bias::parse("inf").infinite);
  CHECK(Bias::parse("0.5") == Bias::finite(0.5));
  CHECK(Bias::parse(Bias::finite(30000).to_string()) == Bias::finite(30000));
}
