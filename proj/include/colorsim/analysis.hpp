#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "colorsim/noise.hpp"

namespace colorsim {

struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateFitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientFailuresError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FitPoint {
  int size = 0;  // code distance (or linear size)
  double p = 0.0;
  double p_l = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
};

// Quadratic scaling-ansatz fit around the crossing: the failure rate is
// modeled as B0 + B1 x + B2 x^2 with x = (p - p_th) * size^beta, weighted
// by the binomial variance of each point.
struct ThresholdEstimate {
  double p_th = 0.0;
  double beta = 0.0;
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  double p_th_err = 0.0;
  double beta_err = 0.0;
  double residual = 0.0;  // chi^2 per degree of freedom
  bool extrapolated = false;
};

struct FitOptions {
  std::uint64_t min_failures = 100;  // points below are dropped
  // Optional replacement for the rescaled variable x(p, p_th, size, beta).
  double (*rescale)(double p, double p_th, int size, double beta) = nullptr;
};

ThresholdEstimate fit_threshold(const std::vector<FitPoint>& points, const FitOptions& opt = {});

// Error rate at which the Pauli channel's entropy reaches one bit.
double hashing_bound(Bias eta);

enum class ScalingAbscissa { kDistance, kQubitCount };

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  ScalingAbscissa abscissa = ScalingAbscissa::kDistance;
};

struct ScalingPoint {
  double abscissa = 0.0;  // d or N_q
  double p_l = 0.0;
};

// Least-squares line through (abscissa, log p_L).
ScalingFit fit_subthreshold(const std::vector<ScalingPoint>& points, ScalingAbscissa kind);

}  // namespace colorsim
