#pragma once

// Derivative-free simplex descent (Nelder-Mead) with dimension-adaptive
// coefficients. Header-only; the objective is any callable
// double(const std::vector<double>&).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace infocons {

struct SimplexOptions {
  std::size_t max_iterations = 1000;
  double initial_step = 0.5;
  /// Collapse criteria: spread of values and largest vertex distance.
  double value_tolerance = 1e-15;
  double point_tolerance = 1e-10;
  /// Rebuild the simplex around the best vertex on collapse while budget remains.
  bool rebuild_on_collapse = true;
};

struct SimplexResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
};

template <class Objective>
SimplexResult nelder_mead(Objective&& f, std::vector<double> x0, const SimplexOptions& opt = {}) {
  const std::size_t n = x0.size();
  if (n == 0) return {x0, f(x0), 0};

  // Gao & Han (2012) coefficients; they reduce to the classic 1, 2, 1/2, 1/2 at n = 2.
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double gamma = 1.0 + 2.0 / dn;
  const double rho = 0.75 - 1.0 / (2.0 * dn);
  const double sigma = 1.0 - 1.0 / dn;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);

  auto build = [&](const std::vector<double>& base) {
    pts.assign(n + 1, base);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  };
  build(x0);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto affine = [&](std::vector<double>& out, double t, const std::vector<double>& towards) {
    // out = centroid + t (towards - centroid)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (towards[j] - centroid[j]);
  };

  double value_at_rebuild = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  for (; it < opt.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b]; });
    const auto best = order.front();
    const auto worst = order.back();
    const auto second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(pts[i][j] - pts[best][j]));
    if (vals[worst] - vals[best] <= opt.value_tolerance && diameter <= opt.point_tolerance) {
      if (!opt.rebuild_on_collapse || !(vals[best] < value_at_rebuild)) break;
      value_at_rebuild = vals[best];
      const auto base = pts[best];
      build(base);
      continue;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
    for (auto& c : centroid) c /= dn;

    affine(xr, -alpha, pts[worst]);
    const double fr = f(xr);
    if (fr < vals[best]) {
      affine(xe, -alpha * gamma, pts[worst]);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[second]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    // Outside contraction when the reflection beat the worst point, inside otherwise.
    const bool outside = fr < vals[worst];
    affine(xc, outside ? -alpha * rho : rho, pts[worst]);
    const double fc = f(xc);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[best][j] + sigma * (pts[i][j] - pts[best][j]);
      vals[i] = f(pts[i]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(vals.begin(), vals.end()) - vals.begin());
  return {pts[best], vals[best], it};
}

}  // namespace infocons
