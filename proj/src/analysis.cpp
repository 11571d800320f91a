#include "colorsim/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <array>
#include <cmath>
#include <map>
#include <set>

namespace colorsim {

namespace {

double default_rescale(double p, double p_th, int size, double beta) {
  return (p - p_th) * std::pow(static_cast<double>(size), beta);
}

// Solve a small symmetric positive system in place; returns false when
// singular to working precision.
template <int N>
bool solve_sym(std::array<std::array<double, N>, N>& a, std::array<double, N>& b) {
  for (int c = 0; c < N; ++c) {
    int piv = c;
    for (int r = c + 1; r < N; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-30) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (int r = 0; r < N; ++r) {
      if (r == c) continue;
      double f = a[r][c] / a[c][c];
      for (int cc = c; cc < N; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  for (int c = 0; c < N; ++c) b[c] /= a[c][c];
  return true;
}

struct InnerFit {
  double chi2 = std::numeric_limits<double>::infinity();
  double b[3] = {0, 0, 0};
  bool ok = false;
};

InnerFit fit_quadratic(const std::vector<FitPoint>& pts, const std::vector<double>& w,
                       double p_th, double beta,
                       double (*rescale)(double, double, int, double)) {
  std::array<std::array<double, 3>, 3> ata{};
  std::array<double, 3> atb{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double x = rescale(pts[i].p, p_th, pts[i].size, beta);
    double basis[3] = {1.0, x, x * x};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) ata[r][c] += w[i] * basis[r] * basis[c];
      atb[r] += w[i] * basis[r] * pts[i].p_l;
    }
  }
  InnerFit out;
  auto a = ata;
  auto b = atb;
  if (!solve_sym<3>(a, b)) return out;
  out.ok = true;
  out.b[0] = b[0];
  out.b[1] = b[1];
  out.b[2] = b[2];
  out.chi2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double x = rescale(pts[i].p, p_th, pts[i].size, beta);
    double model = b[0] + b[1] * x + b[2] * x * x;
    double r = pts[i].p_l - model;
    out.chi2 += w[i] * r * r;
  }
  return out;
}

}  // namespace

ThresholdEstimate fit_threshold(const std::vector<FitPoint>& points, const FitOptions& opt) {
  auto rescale = opt.rescale ? opt.rescale : default_rescale;

  std::vector<FitPoint> pts;
  for (const FitPoint& p : points)
    if (p.failures >= opt.min_failures && p.trials > 0) pts.push_back(p);

  std::set<int> sizes;
  for (const auto& p : pts) sizes.insert(p.size);
  if (sizes.size() < 3)
    throw std::invalid_argument("fit_threshold: need at least 3 sizes with usable statistics");

  std::vector<double> w(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double n = static_cast<double>(pts[i].trials);
    double ph = std::clamp(pts[i].p_l, 1e-9, 1.0 - 1e-9);
    double var = ph * (1.0 - ph) / n;
    w[i] = 1.0 / var;
  }

  // Candidate thresholds: crossings of linearly interpolated curves of
  // adjacent sizes.
  std::map<int, std::vector<std::pair<double, double>>> by_size;
  for (const auto& p : pts) by_size[p.size].push_back({p.p, p.p_l});
  for (auto& [sz, v] : by_size) std::sort(v.begin(), v.end());

  std::vector<double> candidates;
  double pmin = 1.0, pmax = 0.0;
  for (const auto& p : pts) {
    pmin = std::min(pmin, p.p);
    pmax = std::max(pmax, p.p);
  }
  std::vector<int> sorted_sizes(sizes.begin(), sizes.end());
  for (std::size_t a = 0; a + 1 < sorted_sizes.size(); ++a) {
    const auto& small = by_size[sorted_sizes[a]];
    const auto& large = by_size[sorted_sizes[a + 1]];
    auto value_at = [](const std::vector<std::pair<double, double>>& curve, double p) {
      if (p <= curve.front().first) return curve.front().second;
      if (p >= curve.back().first) return curve.back().second;
      for (std::size_t i = 1; i < curve.size(); ++i) {
        if (p <= curve[i].first) {
          double t = (p - curve[i - 1].first) / (curve[i].first - curve[i - 1].first);
          return curve[i - 1].second + t * (curve[i].second - curve[i - 1].second);
        }
      }
      return curve.back().second;
    };
    const int kScan = 60;
    double prev = value_at(small, pmin) - value_at(large, pmin);
    for (int s = 1; s <= kScan; ++s) {
      double p = pmin + (pmax - pmin) * s / kScan;
      double cur = value_at(small, p) - value_at(large, p);
      if (prev == 0.0 || (prev < 0) != (cur < 0)) candidates.push_back(p);
      prev = cur;
    }
  }
  if (candidates.empty())
    throw NoCrossingError("fit_threshold: no crossing of size curves inside the data range");

  for (int s = 0; s <= 4; ++s) candidates.push_back(pmin + (pmax - pmin) * s / 4.0);

  // Multi-start Nelder-Mead over (p_th, beta).
  auto objective = [&](double p_th, double beta) {
    if (beta < 0.05 || beta > 4.0) return std::numeric_limits<double>::infinity();
    InnerFit f = fit_quadratic(pts, w, p_th, beta, rescale);
    return f.ok ? f.chi2 : std::numeric_limits<double>::infinity();
  };

  double best_pth = candidates.front(), best_beta = 1.0;
  double best_chi2 = std::numeric_limits<double>::infinity();
  for (double c : candidates) {
    for (double beta0 : {0.7, 1.0, 1.4}) {
      // Nelder-Mead on 2 parameters.
      struct Vertex {
        double x[2];
        double f;
      };
      std::array<Vertex, 3> simplex;
      double init[2] = {c, beta0};
      double step[2] = {std::max(1e-4, 0.02 * (pmax - pmin)), 0.15};
      for (int v = 0; v < 3; ++v) {
        simplex[v] = {{init[0], init[1]}, 0.0};
        if (v > 0) simplex[v].x[v - 1] += step[v - 1];
        simplex[v].f = objective(simplex[v].x[0], simplex[v].x[1]);
      }
      for (int iter = 0; iter < 250; ++iter) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        if (std::fabs(simplex[2].f - simplex[0].f) <
            1e-12 * (1.0 + std::fabs(simplex[0].f)))
          break;
        double cen[2] = {(simplex[0].x[0] + simplex[1].x[0]) / 2,
                         (simplex[0].x[1] + simplex[1].x[1]) / 2};
        auto make = [&](double t) {
          Vertex v;
          v.x[0] = cen[0] + t * (simplex[2].x[0] - cen[0]);
          v.x[1] = cen[1] + t * (simplex[2].x[1] - cen[1]);
          v.f = objective(v.x[0], v.x[1]);
          return v;
        };
        Vertex refl = make(-1.0);
        if (refl.f < simplex[0].f) {
          Vertex exp2 = make(-2.0);
          simplex[2] = exp2.f < refl.f ? exp2 : refl;
        } else if (refl.f < simplex[1].f) {
          simplex[2] = refl;
        } else {
          Vertex con = make(0.5);
          if (con.f < simplex[2].f) {
            simplex[2] = con;
          } else {
            for (int v = 1; v < 3; ++v) {
              simplex[v].x[0] = (simplex[v].x[0] + simplex[0].x[0]) / 2;
              simplex[v].x[1] = (simplex[v].x[1] + simplex[0].x[1]) / 2;
              simplex[v].f = objective(simplex[v].x[0], simplex[v].x[1]);
            }
          }
        }
      }
      std::sort(simplex.begin(), simplex.end(),
                [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (simplex[0].f < best_chi2) {
        best_chi2 = simplex[0].f;
        best_pth = simplex[0].x[0];
        best_beta = simplex[0].x[1];
      }
    }
  }

  InnerFit final = fit_quadratic(pts, w, best_pth, best_beta, rescale);
  if (!final.ok || !std::isfinite(best_chi2))
    throw DegenerateFitError("fit_threshold: singular quadratic fit");
  // Flat data carries no crossing information.
  if (std::fabs(final.b[1]) < 1e-12 && std::fabs(final.b[2]) < 1e-12)
    throw DegenerateFitError("fit_threshold: curves are flat");

  ThresholdEstimate est;
  est.p_th = best_pth;
  est.beta = best_beta;
  est.b0 = final.b[0];
  est.b1 = final.b[1];
  est.b2 = final.b[2];
  int dof = static_cast<int>(pts.size()) - 5;
  est.residual = dof > 0 ? best_chi2 / dof : best_chi2;
  est.extrapolated = best_pth < pmin || best_pth > pmax;

  // Uncertainties from the local quadratic model of chi^2: vary each of
  // (p_th, beta) and measure the curvature with the B's re-optimized.
  auto profile_err = [&](int which) {
    double h = which == 0 ? std::max(1e-5, 1e-3 * (pmax - pmin)) : 1e-3;
    double x0 = which == 0 ? best_pth : best_beta;
    auto eval = [&](double v) {
      return which == 0 ? objective(v, best_beta) : objective(best_pth, v);
    };
    double up = eval(x0 + h), down = eval(x0 - h), mid = best_chi2;
    double curv = (up + down - 2 * mid) / (h * h);
    if (curv <= 0 || !std::isfinite(curv)) return 0.0;
    // Delta chi^2 = 1 contour.
    return std::sqrt(2.0 / curv);
  };
  est.p_th_err = profile_err(0);
  est.beta_err = profile_err(1);
  return est;
}

double hashing_bound(Bias eta) {
  // Pure dephasing: the binary entropy reaches one bit at exactly 1/2,
  // where the curve is flat; bisection cannot resolve a quadratic peak
  // beyond double rounding, so the limit is returned directly.
  if (eta.infinite) return 0.5;
  auto entropy = [&](double p) {
    PauliProbs pr = channel_probs(p, eta);
    double probs[4] = {1.0 - p, pr[0], pr[1], pr[2]};
    double h = 0.0;
    for (double q : probs)
      if (q > 0.0) h -= q * std::log2(q);
    return h;
  };
  // Entropy rises to a single maximum in p; find it, then bisect the
  // rising flank for H = 1.
  double lo = 0.0, hi = 0.999999;
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (entropy(m1) < entropy(m2))
      lo = m1;
    else
      hi = m2;
  }
  double peak = (lo + hi) / 2;
  double a = 0.0, b = peak;
  for (int it = 0; it < 100; ++it) {
    double mid = (a + b) / 2;
    if (entropy(mid) < 1.0)
      a = mid;
    else
      b = mid;
  }
  return (a + b) / 2;
}

ScalingFit fit_subthreshold(const std::vector<ScalingPoint>& points, ScalingAbscissa kind) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_subthreshold: need at least 3 sizes");
  for (const auto& pt : points)
    if (!(pt.p_l > 0.0))
      throw InsufficientFailuresError("fit_subthreshold: zero failure rate in input");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = static_cast<double>(points.size());
  for (const auto& pt : points) {
    double y = std::log(pt.p_l);
    sx += pt.abscissa;
    sy += y;
    sxx += pt.abscissa * pt.abscissa;
    sxy += pt.abscissa * y;
  }
  double denom = n * sxx - sx * sx;
  if (std::fabs(denom) < 1e-30)
    throw std::invalid_argument("fit_subthreshold: degenerate abscissa values");
  ScalingFit fit;
  fit.abscissa = kind;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (const auto& pt : points) {
    double r = std::log(pt.p_l) - (fit.intercept + fit.slope * pt.abscissa);
    fit.residual += r * r;
  }
  return fit;
}

}  // namespace colorsim
