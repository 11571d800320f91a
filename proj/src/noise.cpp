#include "colorsim/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "colorsim/code.hpp"

namespace colorsim {

std::string Bias::to_string() const {
  if (infinite) return "inf";
  // print exactly for the common rationals, generically otherwise
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Bias Bias::parse(const std::string& s) {
  if (s == "inf" || s == "infinity") return Bias::inf();
  return Bias::finite(std::stod(s));
}

PauliProbs channel_probs(double p, Bias eta) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("channel_probs: p out of range");
  if (eta.infinite) return {0.0, 0.0, p};
  if (eta.value < 0.5) throw std::invalid_argument("channel_probs: eta below depolarizing value");
  double pxy = p / (2.0 * (1.0 + eta.value));
  double pz = p * eta.value / (1.0 + eta.value);
  return {pxy, pxy, pz};
}

NoiseChannel NoiseChannel::uniform(double p, Bias eta) {
  channel_probs(p, eta);  // validates
  NoiseChannel ch;
  ch.p = p;
  ch.eta = eta;
  return ch;
}

PauliOperator sample_error(const NoiseChannel& ch, std::size_t n, CounterRng& rng) {
  PauliOperator err(n);
  if (ch.is_uniform()) {
    PauliProbs pr = channel_probs(ch.p, ch.eta);
    double tx = pr[0], ty = pr[0] + pr[1], tz = pr[0] + pr[1] + pr[2];
    for (std::size_t q = 0; q < n; ++q) {
      double u = rng.uniform();
      if (u >= tz) continue;
      if (u < tx)
        err.x.set(q, true);
      else if (u < ty) {
        err.x.set(q, true);
        err.z.set(q, true);
      } else
        err.z.set(q, true);
    }
    return err;
  }
  if (ch.per_qubit.size() != n) throw std::invalid_argument("sample_error: channel size mismatch");
  for (std::size_t q = 0; q < n; ++q) {
    const PauliProbs& pr = ch.per_qubit[q];
    double u = rng.uniform();
    if (u >= pr[0] + pr[1] + pr[2]) continue;
    if (u < pr[0])
      err.x.set(q, true);
    else if (u < pr[0] + pr[1]) {
      err.x.set(q, true);
      err.z.set(q, true);
    } else
      err.z.set(q, true);
  }
  return err;
}

NoiseChannel effective_permuted_channel(const NoiseChannel& ch, const DeformationSpec& mask,
                                        std::size_t n) {
  if (!ch.is_uniform())
    throw std::invalid_argument("effective_permuted_channel: expects a uniform channel");
  if (mask.pattern.size() != n)
    throw std::invalid_argument("effective_permuted_channel: mask length mismatch");
  PauliProbs pr = channel_probs(ch.p, ch.eta);
  NoiseChannel out;
  out.p = ch.p;
  out.eta = ch.eta;
  out.per_qubit.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (mask.pattern.get(q))
      out.per_qubit[q] = {pr[2], pr[1], pr[0]};  // swap p_X and p_Z
    else
      out.per_qubit[q] = pr;
  }
  return out;
}

double log_odds_weight(double q) {
  const double kFloor = 1e-300;
  const double kCeil = 1.0 - 1e-16;
  if (q < kFloor) q = kFloor;
  if (q > kCeil) q = kCeil;
  return -std::log(q / (1.0 - q));
}

}  // namespace colorsim
