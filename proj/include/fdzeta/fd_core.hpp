#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "fdzeta/model.hpp"
#include "fdzeta/special_functions.hpp"

namespace fdzeta {

/// Above this eta the exponential model visibly degrades; values are still
/// computed but flagged.
inline constexpr double validity_limit = 5.0;

enum class Method { ClosedForm, Quadrature, Series };

/// One F_{k/2}(eta) estimate plus how it was produced.
struct EvaluationResult {
  double value = 0.0;
  Method method = Method::ClosedForm;
  bool validity_warning = false;                  // eta > validity_limit
  std::optional<ModelCoefficients> coefficients;  // engaged on the closed-form path
};

/// Integrand xi^(k/2) / (1 + e^(xi - eta)) for xi >= 0, with the exponential
/// folded so its argument stays non-positive when xi > eta.
inline double integrand(Order k, double xi, double eta) {
  const double p = std::pow(xi, k.half());
  if (xi > eta) {
    const double t = std::exp(eta - xi);
    return p * t / (1.0 + t);
  }
  return p / (1.0 + std::exp(xi - eta));
}

namespace detail {

/// zeta(1 + k/2) for every supported order, computed once through the
/// Hurwitz code path and memoized.
inline double zeta_for_order(int k) {
  static const std::array<double, max_order + 1> table = [] {
    std::array<double, max_order + 1> t{};
    for (int i = 1; i <= max_order; ++i) t[i] = riemann_zeta(1.0 + 0.5 * i);
    return t;
  }();
  return table[k];
}

}  // namespace detail

/// Exact degenerate-limit value Gamma(1 + k/2) (1 - 2^(-k/2)) zeta(1 + k/2),
/// i.e. F_{k/2}(0).
inline double eta_zero_exact(Order k) {
  return gamma_half_integer(k.value()) *
         ((1.0 - std::exp2(-k.half())) * detail::zeta_for_order(k.value()));
}

/// Closed-form F_{k/2}(eta):
///   Gamma(1 + k/2) [ e^eta (1 - 2^(-k/2)) zeta(1 + k/2)
///                    - b (2^(-k/2) zeta(s, (c+1)/2) - zeta(s, c+1)) ],
/// with s = 1 + k/2 and the model coefficients b, c fitted for this (k, eta).
/// Inside the degenerate band the decay term is dropped (b = 0) and the value
/// is exactly eta_zero_exact(k).
inline EvaluationResult fd_closed_form(Order k, double eta) {
  const bool warn = eta > validity_limit;

  if (std::abs(eta) < degenerate_eta_threshold) {
    const ModelCoefficients m{std::exp(eta), 0.0, 0.0,
                              static_cast<double>(solve_xi_m(k, eta))};
    return {eta_zero_exact(k), Method::ClosedForm, warn, m};
  }

  const double s = 1.0 + k.half();
  const ModelCoefficients m = fit_coefficients(k, eta);
  const double lead = (1.0 - std::exp2(-k.half())) * detail::zeta_for_order(k.value());
  const double value =
      gamma_half_integer(k.value()) *
      (std::exp(eta) * lead - m.b * alternating_hurwitz(s, m.c + 1.0));
  return {value, Method::ClosedForm, warn, m};
}

}  // namespace fdzeta
