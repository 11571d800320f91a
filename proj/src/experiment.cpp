#include "colorsim/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "colorsim/exact_decoder.hpp"
#include "colorsim/infinite_bias_decoder.hpp"
#include "colorsim/restriction_decoder.hpp"

namespace colorsim {

const char* to_string(DecoderKind k) {
  switch (k) {
    case DecoderKind::kExactML: return "exact-ml";
    case DecoderKind::kRestriction: return "restriction";
    case DecoderKind::kInfiniteBias: return "infinite-bias";
    default: return "surface-matching";
  }
}

DecoderKind decoder_kind_from_string(const std::string& s) {
  if (s == "exact-ml" || s == "ml") return DecoderKind::kExactML;
  if (s == "restriction") return DecoderKind::kRestriction;
  if (s == "infinite-bias") return DecoderKind::kInfiniteBias;
  if (s == "surface-matching" || s == "matching") return DecoderKind::kSurfaceMatching;
  throw std::invalid_argument("unknown decoder: " + s);
}

std::unique_ptr<Decoder> make_decoder(DecoderKind kind, const StabilizerCode& code,
                                      const NoiseChannel& channel) {
  switch (kind) {
    case DecoderKind::kExactML: return std::make_unique<ExactMLDecoder>(code, channel);
    case DecoderKind::kRestriction: return std::make_unique<RestrictionDecoder>(code, channel);
    case DecoderKind::kInfiniteBias: return std::make_unique<InfiniteBiasDecoder>(code, channel);
    default: return std::make_unique<SurfaceMatchingDecoder>(code, channel);
  }
}

TrialRecord run_trial(const StabilizerCode& code, const NoiseChannel& channel, Decoder& decoder,
                      std::uint64_t trial_index, std::uint64_t seed, std::uint64_t stream_salt) {
  CounterRng rng(seed, stream_salt + trial_index);
  PauliOperator error = sample_error(channel, code.n, rng);
  Syndrome s = syndrome_of(code, error);
  DecodeResult res = decoder.decode(s);
  PauliOperator residual = multiply(error, res.correction);
  if (syndrome_of(code, residual).bits.any())
    throw std::logic_error("run_trial: residual carries a syndrome (decoder bug)");
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.error_weight = static_cast<int>(error.weight());
  rec.syndrome_weight = static_cast<int>(s.weight());
  rec.residual_class = logical_class_of(code, residual);
  rec.success = rec.residual_class == 0;
  return rec;
}

void wilson_interval(std::uint64_t failures, std::uint64_t trials, double& lo, double& hi) {
  if (trials == 0) {
    lo = 0.0;
    hi = 1.0;
    return;
  }
  const double z = 1.959963984540054;
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(failures) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
  hi = failures == trials ? 1.0 : std::min(1.0, center + half);
}

TrialStatistics run_sweep(const SweepConfig& cfg) {
  if (cfg.codes.empty()) throw std::invalid_argument("run_sweep: no codes");
  if (cfg.codes.size() != cfg.code_labels.size() || cfg.codes.size() != cfg.code_sizes.size())
    throw std::invalid_argument("run_sweep: label/size bookkeeping mismatch");
  for (std::size_t i = 1; i < cfg.p_grid.size(); ++i)
    if (cfg.p_grid[i] <= cfg.p_grid[i - 1])
      throw std::invalid_argument("run_sweep: p grid must increase strictly");
  if (cfg.max_trials == 0) throw std::invalid_argument("run_sweep: max_trials must be positive");

  int workers = cfg.workers > 0 ? cfg.workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  TrialStatistics stats;
  std::uint64_t point_index = 0;
  const std::uint64_t kChunk = 8192;

  for (std::size_t ci = 0; ci < cfg.codes.size(); ++ci) {
    const StabilizerCode& code = cfg.codes[ci];
    for (double p : cfg.p_grid) {
      NoiseChannel channel = NoiseChannel::uniform(p, cfg.eta);
      std::unique_ptr<Decoder> decoder = make_decoder(cfg.decoder, code, channel);
      std::uint64_t salt = point_index << 40;

      auto t0 = std::chrono::steady_clock::now();
      std::uint64_t done = 0, failures = 0;
      while (done < cfg.max_trials) {
        std::uint64_t chunk = std::min(kChunk, cfg.max_trials - done);
        std::atomic<std::uint64_t> chunk_failures{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        std::uint64_t per = (chunk + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
          std::uint64_t lo = done + w * per;
          std::uint64_t hi = std::min(done + chunk, lo + per);
          if (lo >= hi) break;
          pool.emplace_back([&, lo, hi, w]() {
            try {
              std::uint64_t local = 0;
              for (std::uint64_t t = lo; t < hi; ++t) {
                TrialRecord rec = run_trial(code, channel, *decoder, t, cfg.seed, salt);
                if (!rec.success) ++local;
              }
              chunk_failures.fetch_add(local, std::memory_order_relaxed);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
          if (e) std::rethrow_exception(e);
        failures += chunk_failures.load();
        done += chunk;
        if (cfg.target_failures > 0 && failures >= cfg.target_failures) break;
      }
      auto t1 = std::chrono::steady_clock::now();

      PointStats ps;
      ps.code_label = cfg.code_labels[ci];
      ps.size = cfg.code_sizes[ci];
      ps.p = p;
      ps.eta = cfg.eta;
      ps.decoder = cfg.decoder;
      ps.trials = done;
      ps.failures = failures;
      ps.p_l = done ? static_cast<double>(failures) / static_cast<double>(done) : 0.0;
      wilson_interval(failures, done, ps.ci_lo, ps.ci_hi);
      ps.seed = cfg.seed;
      ps.seconds = std::chrono::duration<double>(t1 - t0).count();
      ps.kappa = code.deformation.kappa;
      ps.phi = code.deformation.phi_pi;
      stats.points.push_back(std::move(ps));
      ++point_index;
    }
  }
  return stats;
}

}  // namespace colorsim
