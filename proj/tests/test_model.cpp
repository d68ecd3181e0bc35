#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fdzeta/model.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fdzeta;

namespace {

// Plain bisection on the maximizer residual, kept independent of the
// production solver.
double bisect_xi_m(int k, double eta, double lo, double hi) {
  const auto g = [&](double x) { return k * std::exp(eta) + std::exp(x) * (k - 2.0 * x); };
  REQUIRE(g(lo) > 0.0);
  REQUIRE(g(hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// The anchor written out literally, with ratio() substituted as stated; used
// to cross-check the cancellation-free production form.
double decay_rate_textbook(double xi_m, double eta) {
  const double arg = (std::exp(-eta) + 1.0) * (std::exp(eta) - ratio(xi_m, eta)) /
                     (std::exp(eta) - 1.0);
  return -std::log(arg) / xi_m;
}

}  // namespace

TEST_CASE("Order validates its range", "[model]") {
  REQUIRE(Order(1).value() == 1);
  REQUIRE(Order(9).half() == 4.5);
  REQUIRE_THROWS_AS(Order(0), std::domain_error);
  REQUIRE_THROWS_AS(Order(10), std::domain_error);
  REQUIRE_THROWS_AS(Order(-2), std::domain_error);
}

TEST_CASE("ratio boundary and limit values", "[model]") {
  REQUIRE(ratio(0.0, 0.0) == 1.0);
  REQUIRE_THAT(ratio(0.0, 2.0), WithinRel(2.0 / (1.0 + std::exp(-2.0)), 1e-14));
  REQUIRE_THAT(ratio(0.0, -3.0), WithinRel(2.0 / (1.0 + std::exp(3.0)), 1e-14));
  // large xi approaches e^eta
  REQUIRE_THAT(ratio(50.0, 2.0), WithinRel(std::exp(2.0), 1e-12));
  // stays finite where the naive form would overflow e^xi
  REQUIRE(std::isfinite(ratio(1000.0, 3.0)));
  REQUIRE_THAT(ratio(1000.0, 3.0), WithinRel(std::exp(3.0), 1e-12));
}

TEST_CASE("boundary_coefficients values", "[model]") {
  {
    const auto [a, b] = boundary_coefficients(0.0);
    REQUIRE(a == 1.0);
    REQUIRE(b == 0.0);
  }
  {
    const auto [a, b] = boundary_coefficients(1.0);
    REQUIRE_THAT(a, WithinRel(2.7182818284590452354, 1e-15));
    REQUIRE_THAT(b, WithinRel(1.2561646711990354769, 1e-14));
  }
  {
    const auto [a, b] = boundary_coefficients(-2.0);
    REQUIRE_THAT(a, WithinRel(0.13533528323661269189, 1e-15));
    REQUIRE_THAT(b, WithinRel(-0.10307056080762241999, 1e-14));
  }
}

TEST_CASE("boundary_coefficients rejects overflow and non-finite eta", "[model]") {
  REQUIRE_THROWS_AS(boundary_coefficients(700.5), std::domain_error);
  REQUIRE_THROWS_AS(boundary_coefficients(std::nan("")), std::domain_error);
}

TEST_CASE("solve_xi_m reproduces bisection roots", "[model]") {
  REQUIRE_THAT(static_cast<double>(solve_xi_m(Order(1), 0.0)),
               WithinRel(0.73883503113160778239, 1e-13));
  REQUIRE_THAT(static_cast<double>(solve_xi_m(Order(1), 0.0)),
               WithinRel(bisect_xi_m(1, 0.0, 0.5, 2.0), 1e-12));
  REQUIRE_THAT(static_cast<double>(solve_xi_m(Order(3), 0.0)),
               WithinRel(1.7584639933929938635, 1e-13));
  REQUIRE_THAT(static_cast<double>(solve_xi_m(Order(3), 0.0)),
               WithinRel(bisect_xi_m(3, 0.0, 1.5, 3.0), 1e-12));
  // e^1 + e^xi (1 - 2 xi) vanishes exactly at xi = 1
  REQUIRE_THAT(static_cast<double>(solve_xi_m(Order(1), 1.0)), WithinAbs(1.0, 1e-14));
}

TEST_CASE("solve_xi_m approaches k/2 from above as eta falls", "[model]") {
  const long double xm = solve_xi_m(Order(1), -30.0);
  REQUIRE(xm > 0.5L);
  REQUIRE(static_cast<double>(xm - 0.5L) < 1e-12);
}

TEST_CASE("solve_xi_m residual contract over the working grid", "[model]") {
  for (int k = 1; k <= max_order; ++k) {
    for (double eta = -6.0; eta <= 5.0 + 1e-9; eta += 0.5) {
      const Order order(k);
      const long double xm = solve_xi_m(order, eta);
      REQUIRE(xm > 0.5L * k);
      const long double scale = k * std::exp(static_cast<long double>(eta));
      REQUIRE(std::abs(maximizer_residual(order, eta, xm)) <= 1e-12L * scale);
    }
  }
}

TEST_CASE("maximizer residual is positive at k/2 and decreasing beyond", "[model]") {
  for (int k : {1, 4, 9}) {
    for (double eta : {-4.0, 0.0, 3.0}) {
      const Order order(k);
      REQUIRE(maximizer_residual(order, eta, 0.5L * k) > 0.0L);
      long double prev = maximizer_residual(order, eta, 0.5L * k);
      for (long double xi = 0.5L * k + 0.25L; xi < 0.5L * k + 8.0L; xi += 0.25L) {
        const long double cur = maximizer_residual(order, eta, xi);
        REQUIRE(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("coefficient_c refuses the degenerate band", "[model]") {
  REQUIRE_THROWS_AS(coefficient_c(Order(1), 0.0), DegenerateEtaError);
  REQUIRE_THROWS_AS(coefficient_c(Order(1), 5e-13), DegenerateEtaError);
  REQUIRE_THROWS_AS(coefficient_c(Order(1), -5e-13), DegenerateEtaError);
}

TEST_CASE("coefficient_c values and textbook-form agreement", "[model]") {
  REQUIRE_THAT(coefficient_c(Order(1), 1.0), WithinRel(0.37988549304172247537, 1e-13));
  REQUIRE_THAT(coefficient_c(Order(1), -3.0), WithinRel(0.96257380307351298833, 1e-13));
  REQUIRE_THAT(coefficient_c(Order(1), 5.0), WithinRel(0.048275451703117436731, 1e-12));
  for (const double eta : {-3.0, -1.0, 1.0, 2.5, 5.0}) {
    for (const int k : {1, 3, 7}) {
      const double xm = static_cast<double>(solve_xi_m(Order(k), eta));
      REQUIRE_THAT(coefficient_c(Order(k), eta),
                   WithinRel(decay_rate_textbook(xm, eta), 1e-12));
    }
  }
}

TEST_CASE("fitted model interpolates the ratio at its anchors", "[model]") {
  for (double eta = -6.0; eta <= 5.0 + 1e-9; eta += 0.25) {
    if (std::abs(eta) < 1e-9) continue;
    const ModelCoefficients m = fit_coefficients(Order(1), eta);
    REQUIRE(m.a == std::exp(eta));
    REQUIRE((eta > 0) == (m.b > 0));
    REQUIRE(m.c > -1.0);
    REQUIRE_THAT(model_f(0.0, m), WithinRel(ratio(0.0, eta), 1e-12));
    REQUIRE_THAT(model_f(m.xi_m, m), WithinRel(ratio(m.xi_m, eta), 1e-12));
    // far past the anchors the decay term is gone
    REQUIRE_THAT(model_f(1e4, m), WithinRel(m.a, 1e-12));
  }
}

TEST_CASE("fit_coefficients degenerate branch drops the decay term", "[model]") {
  const ModelCoefficients m = fit_coefficients(Order(1), 0.0);
  REQUIRE(m.a == 1.0);
  REQUIRE(m.b == 0.0);
  REQUIRE(model_f(3.7, m) == 1.0);
}

TEST_CASE("weighted-maximizer diagnostic stays near the integrand maximizer", "[model]") {
  // informational only: both maximizers exist and sit on the same scale
  for (const double eta : {-4.0, -1.0, 1.0, 4.0}) {
    const ModelCoefficients m = fit_coefficients(Order(1), eta);
    const double shifted = model_weighted_maximizer(Order(1), m);
    REQUIRE(std::isfinite(shifted));
    REQUIRE(shifted > 0.0);
    INFO("eta=" << eta << " xi_m=" << m.xi_m << " weighted=" << shifted);
    CHECK(std::abs(shifted - m.xi_m) < 5.0);
  }
}
