#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fdzeta/errors.hpp"
#include "fdzeta/fd_core.hpp"
#include "fdzeta/model.hpp"

namespace fdzeta {

/// Controls for the adaptive-quadrature reference evaluation.
struct QuadratureConfig {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_subdivisions = 400;
  double tail_cutoff_margin = 60.0;  // finite panel ends at max(eta, 0) + margin
};

namespace detail {

struct GaussRule {
  std::vector<double> node;    // abscissae on [-1, 1]
  std::vector<double> weight;
};

/// Gauss-Legendre nodes and weights by Newton iteration on the three-term
/// Legendre recurrence.
inline GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  constexpr double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    rule.node[i] = -x;
    rule.node[n - 1 - i] = x;
    rule.weight[i] = rule.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

inline const GaussRule& gauss_10() {
  static const GaussRule rule = make_gauss_rule(10);
  return rule;
}

inline const GaussRule& gauss_20() {
  static const GaussRule rule = make_gauss_rule(20);
  return rule;
}

struct Panel {
  double a, b;
  double value;  // 20-point estimate
  double error;  // |20-point - 10-point|
};

/// Value from the 20-point rule; error estimated against the 10-point rule.
template <class F>
inline Panel make_panel(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);
  double lo = 0.0, hi = 0.0;
  const GaussRule& g10 = gauss_10();
  for (std::size_t i = 0; i < g10.node.size(); ++i)
    lo += g10.weight[i] * f(mid + halfwidth * g10.node[i]);
  const GaussRule& g20 = gauss_20();
  for (std::size_t i = 0; i < g20.node.size(); ++i)
    hi += g20.weight[i] * f(mid + halfwidth * g20.node[i]);
  lo *= halfwidth;
  hi *= halfwidth;
  return {a, b, hi, std::abs(hi - lo)};
}

}  // namespace detail

/// Reference evaluation of F_{k/2}(eta) by adaptive Gauss quadrature over
/// [0, max(eta, 0) + margin]. The first panel is kept short ([0, 1]) so the
/// mild xi^(1/2) endpoint behaviour stays local; refinement then splits the
/// worst panel until the summed 10/20-point discrepancies fall under the
/// tolerance. The discarded tail is bounded analytically by
///   int_T^inf xi^(k/2) e^(eta - xi) dxi <= e^(eta - T) T^(k/2) / (1 - k/(2T))
/// and must sit below abs_tol.
inline EvaluationResult fd_quadrature(Order k, double eta,
                                      const QuadratureConfig& config = {}) {
  if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0))
    throw std::domain_error("fd_quadrature: tolerances must be positive");
  if (config.max_subdivisions < 1)
    throw std::domain_error("fd_quadrature: max_subdivisions must be >= 1");
  if (!(config.tail_cutoff_margin >= 30.0))
    throw std::domain_error("fd_quadrature: tail_cutoff_margin must be >= 30");
  if (!(eta <= 60.0))
    throw std::domain_error("fd_quadrature: supported for eta <= 60");

  const double cutoff = std::max(eta, 0.0) + config.tail_cutoff_margin;
  const double tail_bound = std::exp(eta - cutoff) * std::pow(cutoff, k.half()) /
                            (1.0 - k.half() / cutoff);
  if (!(tail_bound <= config.abs_tol))
    throw ConvergenceError("fd_quadrature: analytic tail bound exceeds abs_tol; widen tail_cutoff_margin");

  const auto f = [k, eta](double xi) { return integrand(k, xi, eta); };

  std::vector<detail::Panel> panels;
  panels.push_back(detail::make_panel(f, 0.0, 1.0));
  for (double a = 1.0; a < cutoff;) {
    const double b = std::min(2.0 * a, cutoff);
    panels.push_back(detail::make_panel(f, a, b));
    a = b;
  }

  int splits = 0;
  for (;;) {
    double total = 0.0, err = 0.0;
    for (const auto& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(config.abs_tol, config.rel_tol * std::abs(total)))
      return {total, Method::Quadrature, eta > validity_limit, std::nullopt};

    if (++splits > config.max_subdivisions)
      throw ConvergenceError("fd_quadrature: subdivision budget exhausted");
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const detail::Panel split = panels[worst];
    const double mid = 0.5 * (split.a + split.b);
    panels[worst] = detail::make_panel(f, split.a, mid);
    panels.push_back(detail::make_panel(f, mid, split.b));
  }
}

namespace detail {

/// Alternating-series acceleration after Cohen, Rodriguez Villegas & Zagier.
/// Sums sum_{n>=1} (-1)^(n+1) e^(n eta) n^-s; the error contracts like
/// (3 + sqrt 8)^-steps, so 32 steps reach double precision for any eta <= 0,
/// where plain term-by-term summation would need ~1e10 terms as eta -> 0.
inline double accelerated_alternating_sum(double eta, double s) {
  constexpr int steps = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), steps);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int j = 0; j < steps; ++j) {
    c = b - c;
    sum += c * std::exp((j + 1) * eta) / std::pow(j + 1.0, s);
    b *= (j + steps) * (j - steps) / ((j + 0.5) * (j + 1.0));
  }
  return sum / d;
}

}  // namespace detail

/// Convergent-series reference for eta <= 0:
///   Gamma(1 + k/2) sum_{n>=1} (-1)^(n+1) e^(n eta) / n^(1 + k/2).
/// For eta <= -0.5 the terms decay fast enough for direct summation under the
/// alternating-series bound (first omitted term < 1e-15 of the total); closer
/// to zero the same series is summed by acceleration.
inline EvaluationResult fd_series_nondegenerate(Order k, double eta) {
  if (!(eta <= 0.0))
    throw std::domain_error("fd_series_nondegenerate: requires eta <= 0");
  const double s = 1.0 + k.half();

  double sum = 0.0;
  if (eta <= -0.5) {
    bool converged = false;
    double sign = 1.0;
    for (int n = 1; n <= 400; ++n, sign = -sign) {
      const double term = std::exp(n * eta) / std::pow(n, s);
      sum += sign * term;
      if (term < 1e-15 * std::abs(sum)) {  // next term is smaller still
        converged = true;
        break;
      }
    }
    if (!converged)
      throw ConvergenceError("fd_series_nondegenerate: term cap reached");
  } else {
    sum = detail::accelerated_alternating_sum(eta, s);
  }
  return {gamma_half_integer(k.value()) * sum, Method::Series,
          eta > validity_limit, std::nullopt};
}

}  // namespace fdzeta
