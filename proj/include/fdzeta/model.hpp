#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "fdzeta/errors.hpp"

namespace fdzeta {

/// Largest supported numerator k of the half-integer index. Keeps every
/// internal zeta/gamma argument inside the window the suite exercises;
/// raising it is a deliberate configuration change.
inline constexpr int max_order = 9;

/// Below this |eta| the decay amplitude b is treated as exactly zero and the
/// decay-rate extraction is refused as indeterminate.
inline constexpr double degenerate_eta_threshold = 1e-12;

/// Numerator k of the half-integer index in F_{k/2}.
class Order {
 public:
  explicit Order(int k) : k_(k) {
    if (k < 1 || k > max_order)
      throw std::domain_error("Order: k must be an integer in [1, 9]");
  }
  int value() const noexcept { return k_; }
  double half() const noexcept { return 0.5 * k_; }

 private:
  int k_;
};

/// Coefficients of the auxiliary model a - b e^(-c xi) for the ratio of the
/// shifted to the unshifted integrand, plus the maximizer the decay rate is
/// anchored at. Immutable value; when b == 0 the field c is inert.
struct ModelCoefficients {
  double a;     // large-xi limit, e^eta
  double b;     // decay amplitude, (e^eta - 1)/(e^-eta + 1)
  double c;     // decay rate
  double xi_m;  // maximizer of the shifted integrand
};

/// Ratio (1 + e^xi) / (1 + e^(xi - eta)) of the shifted to the unshifted
/// integrand denominator structure, for xi >= 0. For xi >= eta it is
/// rewritten with non-positive exponents only, so e^xi never overflows:
///   e^eta (1 + e^-xi) / (1 + e^(eta - xi)).
inline double ratio(double xi, double eta) {
  if (xi >= eta)
    return std::exp(eta) * (1.0 + std::exp(-xi)) / (1.0 + std::exp(eta - xi));
  return (1.0 + std::exp(xi)) / (1.0 + std::exp(xi - eta));
}

/// Boundary coefficients of the model: a = e^eta from the large-xi limit and
/// b = (e^eta - 1)/(e^-eta + 1) from the value 2/(1 + e^-eta) at xi = 0.
inline std::pair<double, double> boundary_coefficients(double eta) {
  if (!std::isfinite(eta) || eta > 700.0)
    throw std::domain_error("boundary_coefficients: eta must be finite and <= 700");
  const double a = std::exp(eta);
  // For eta < 0 multiply numerator and denominator by e^eta so that no
  // positive exponent is formed.
  const double b = eta >= 0.0 ? std::expm1(eta) / (std::exp(-eta) + 1.0)
                              : a * std::expm1(eta) / (1.0 + a);
  return {a, b};
}

/// Residual of the maximizer condition k e^eta + e^xi (k - 2 xi); positive at
/// xi = k/2 and strictly decreasing beyond, so it has exactly one root there.
inline long double maximizer_residual(Order k, double eta, long double xi) {
  const long double kk = k.value();
  return kk * std::exp(static_cast<long double>(eta)) + std::exp(xi) * (kk - 2.0L * xi);
}

/// Solves the maximizer condition for the unique root xi_m > k/2 by
/// safeguarded Newton with a bisection fallback inside a bracket that starts
/// at [k/2 + 1e-9, k/2 + max(eta, 0) + 3] and doubles its width (ten
/// expansions at most) until the residual changes sign.
///
/// Computed and returned in extended precision: for k >= 7 and eta near -6
/// the root sits within ~1e-4 of k/2, where plain double spacing alone leaves
/// a residual above the 1e-12 k e^eta contract.
inline long double solve_xi_m(Order k, double eta) {
  if (!std::isfinite(eta)) throw std::domain_error("solve_xi_m: eta must be finite");
  const long double kk = k.value();
  const long double half = 0.5L * kk;
  const long double scale = kk * std::exp(static_cast<long double>(eta));
  const auto residual = [&](long double x) { return scale + std::exp(x) * (kk - 2.0L * x); };
  const auto slope = [&](long double x) { return std::exp(x) * (kk - 2.0L * x - 2.0L); };

  long double lo = half + 1e-9L;
  long double hi = half + std::max(static_cast<long double>(eta), 0.0L) + 3.0L;
  if (residual(lo) <= 0.0L) lo = half;  // root hugs k/2; the residual at k/2 is k e^eta > 0
  int expansions = 0;
  while (residual(hi) > 0.0L) {
    if (++expansions > 10)
      throw ConvergenceError("solve_xi_m: no sign change within the bracket expansion cap");
    hi = half + 2.0L * (hi - half);
  }

  const long double tol = 1e-13L * scale;
  long double x = 0.5L * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const long double r = residual(x);
    if (std::abs(r) <= tol) return x;
    if (r > 0.0L)
      lo = x;
    else
      hi = x;
    // Bracket collapsed to machine resolution: x is the representable root.
    // Happens only far below the working eta range, where the root offset
    // from k/2 drops under the floating-point grid.
    if (hi - lo <= std::numeric_limits<long double>::epsilon() * hi) return x;
    const long double d = slope(x);
    long double next = d != 0.0L ? x - r / d : hi;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    x = next;
  }
  throw ConvergenceError("solve_xi_m: residual tolerance not met");
}

namespace detail {

/// ln(1 + e^x) with the large-x branch taken explicitly.
inline double log1p_exp(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

/// Decay rate anchored so the model reproduces ratio(xi_m, eta). The anchor
/// condition reads
///   c = -ln[(e^-eta + 1)(e^eta - ratio(xi_m, eta))/(e^eta - 1)] / xi_m,
/// and since (e^eta - ratio(xi, eta))/(e^eta - 1) = 1/(1 + e^(xi - eta))
/// identically, it collapses to a cancellation-free softplus difference.
inline double decay_rate(double xi_m, double eta) {
  const double c = (log1p_exp(xi_m - eta) - log1p_exp(-eta)) / xi_m;
  if (!std::isfinite(c) || c <= -1.0)
    throw ModelBreakdownError("decay rate outside the convergent range c > -1");
  return c;
}

}  // namespace detail

/// Decay rate c for the given order and eta. Refuses |eta| < 1e-12, where the
/// amplitude b vanishes and the anchor condition degenerates to 0/0; callers
/// must drop the decay term instead.
inline double coefficient_c(Order k, double eta) {
  if (std::abs(eta) < degenerate_eta_threshold)
    throw DegenerateEtaError("coefficient_c: indeterminate at eta = 0 (b vanishes)");
  return detail::decay_rate(static_cast<double>(solve_xi_m(k, eta)), eta);
}

/// The model itself: a - b e^(-c xi).
inline double model_f(double xi, const ModelCoefficients& m) {
  return m.a - m.b * std::exp(-m.c * xi);
}

/// Full coefficient set for one (k, eta). Inside the degenerate band the
/// amplitude is exactly zero and c is set to an inert 0.
inline ModelCoefficients fit_coefficients(Order k, double eta) {
  const auto [a, b] = boundary_coefficients(eta);
  const double xm = static_cast<double>(solve_xi_m(k, eta));
  if (std::abs(eta) < degenerate_eta_threshold) return {a, 0.0, 0.0, xm};
  return {a, b, detail::decay_rate(xm, eta), xm};
}

/// Diagnostic: maximizer of the model-weighted unshifted integrand
/// (a - b e^(-c xi)) xi^(k/2) / (1 + e^xi), located by golden-section search.
/// Comparison against xi_m is informational; no accuracy contract.
inline double model_weighted_maximizer(Order k, const ModelCoefficients& m) {
  const double half = k.half();
  const auto value = [&](double xi) {
    return model_f(xi, m) * std::pow(xi, half) / (1.0 + std::exp(xi));
  };
  constexpr double golden = 0.61803398874989485;
  double a = 1e-12;
  double b = 0.5 * k.value() + std::max(std::log(std::max(m.a, 1.0)), 0.0) + 20.0;
  double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * (1.0 + b); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = value(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = value(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace fdzeta
