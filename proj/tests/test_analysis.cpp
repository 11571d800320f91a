#include <doctest.h>

#include <cmath>

#include "colorsim/analysis.hpp"
#include "colorsim/rng.hpp"

using namespace colorsim;

namespace {

// Synthetic data from the quadratic scaling form plus binomial noise.
std::vector<FitPoint> synthetic(double p_th, double beta, double b0, double b1, double b2,
                                std::uint64_t trials, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  std::vector<FitPoint> pts;
  for (int d : {9, 11, 13, 17}) {
    for (double p = 0.110; p < 0.1405; p += 0.005) {
      double x = (p - p_th) * std::pow(d, beta);
      double mean = b0 + b1 * x + b2 * x * x;
      // binomial sample via normal approximation (fine at these sizes)
      double u1 = rng.uniform(), u2 = rng.uniform();
      double gauss = std::sqrt(-2.0 * std::log(u1 + 1e-18)) * std::cos(6.283185307 * u2);
      double sigma = std::sqrt(mean * (1 - mean) / trials);
      double observed = std::min(0.999, std::max(1e-6, mean + sigma * gauss));
      FitPoint pt;
      pt.size = d;
      pt.p = p;
      pt.p_l = observed;
      pt.trials = trials;
      pt.failures = static_cast<std::uint64_t>(observed * trials);
      pts.push_back(pt);
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("threshold fit recovers planted parameters") {
  for (std::uint64_t seed : {7ull, 19ull, 23ull}) {
    auto pts = synthetic(0.126, 0.7, 0.25, 1.6, 9.0, 100000, seed);
    ThresholdEstimate est = fit_threshold(pts);
    CHECK(std::abs(est.p_th - 0.126) < 0.002);
    CHECK(est.beta > 0.4);
    CHECK(est.beta < 1.1);
    CHECK(est.p_th_err < 0.004);
  }
}

TEST_CASE("threshold fit is invariant under row reordering") {
  auto pts = synthetic(0.126, 0.7, 0.25, 1.6, 9.0, 100000, 5);
  ThresholdEstimate a = fit_threshold(pts);
  std::reverse(pts.begin(), pts.end());
  ThresholdEstimate b = fit_threshold(pts);
  CHECK(a.p_th == doctest::Approx(b.p_th).epsilon(1e-6));
  CHECK(a.beta == doctest::Approx(b.beta).epsilon(1e-4));
}

TEST_CASE("flat data raises a degenerate fit error") {
  std::vector<FitPoint> pts;
  for (int d : {9, 11, 13}) {
    for (double p = 0.1; p < 0.14; p += 0.01) {
      FitPoint pt;
      pt.size = d;
      pt.p = p;
      pt.p_l = 0.25;
      pt.trials = 100000;
      pt.failures = 25000;
      pts.push_back(pt);
    }
  }
  CHECK_THROWS_AS(fit_threshold(pts), DegenerateFitError);
}

TEST_CASE("separated curves that never cross raise NO_CROSSING") {
  std::vector<FitPoint> pts;
  for (int d : {9, 11, 13}) {
    for (double p = 0.1; p < 0.14; p += 0.01) {
      FitPoint pt;
      pt.size = d;
      pt.p = p;
      pt.p_l = 0.02 * d + 0.5 * p;  // larger codes strictly worse, no crossing
      pt.trials = 100000;
      pt.failures = static_cast<std::uint64_t>(pt.p_l * 100000);
      pts.push_back(pt);
    }
  }
  CHECK_THROWS_AS(fit_threshold(pts), NoCrossingError);
}

TEST_CASE("two sizes are rejected") {
  auto pts = synthetic(0.126, 0.7, 0.25, 1.6, 9.0, 100000, 2);
  std::vector<FitPoint> two;
  for (const auto& p : pts)
    if (p.size <= 11) two.push_back(p);
  CHECK_THROWS_AS(fit_threshold(two), std::invalid_argument);
}

TEST_CASE("points with too few failures are ignored") {
  auto pts = synthetic(0.126, 0.7, 0.25, 1.6, 9.0, 100000, 3);
  // Add junk points that would wreck the fit if not filtered.
  for (int d : {9, 11, 13}) {
    FitPoint junk;
    junk.size = d;
    junk.p = 0.05;
    junk.p_l = 0.9;
    junk.trials = 10;
    junk.failures = 9;
    pts.push_back(junk);
  }
  ThresholdEstimate est = fit_threshold(pts);
  CHECK(std::abs(est.p_th - 0.126) < 0.002);
}

TEST_CASE("hashing bound values") {
  CHECK(hashing_bound(Bias::inf()) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(hashing_bound(Bias::finite(0.5)) == doctest::Approx(0.18929).epsilon(1e-3));
  double h30 = hashing_bound(Bias::finite(30));
  CHECK(hashing_bound(Bias::finite(100)) > hashing_bound(Bias::finite(0.5)));
  CHECK(h30 > hashing_bound(Bias::finite(0.5)));
  CHECK(h30 < 0.5);
  // Monotone in eta and continuous at the dephasing limit. The gap to 1/2
  // closes like the square root of the residual X/Y entropy, so 1e6 still
  // sits about 2e-3 away and 1e9 within 1e-4.
  double prev = 0.0;
  for (double eta : {0.5, 1.0, 3.0, 10.0, 100.0, 1e4, 1e6}) {
    double h = hashing_bound(Bias::finite(eta));
    CHECK(h > prev);
    prev = h;
  }
  CHECK(std::abs(prev - 0.5) < 3e-3);
  CHECK(std::abs(hashing_bound(Bias::finite(1e9)) - 0.5) < 1e-4);
}

TEST_CASE("subthreshold fit recovers exact slopes") {
  std::vector<ScalingPoint> pts;
  for (int d : {3, 5, 7, 9}) pts.push_back({static_cast<double>(d), std::exp(-2.0 * d)});
  ScalingFit fit = fit_subthreshold(pts, ScalingAbscissa::kDistance);
  CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(fit.residual < 1e-18);

  std::vector<ScalingPoint> flat;
  for (int d : {3, 5, 7}) flat.push_back({static_cast<double>(d), 0.125});
  ScalingFit f2 = fit_subthreshold(flat, ScalingAbscissa::kDistance);
  CHECK(f2.slope == doctest::Approx(0.0));

  std::vector<ScalingPoint> zero = {{3.0, 0.1}, {5.0, 0.0}, {7.0, 0.01}};
  CHECK_THROWS_AS(fit_subthreshold(zero, ScalingAbscissa::kDistance),
                  InsufficientFailuresError);
}
