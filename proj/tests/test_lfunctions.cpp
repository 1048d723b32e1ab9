#include <cmath>

#include "doctest.h"
#include "eisenlab/errors.hpp"
#include "eisenlab/lfunctions.hpp"

using namespace eisenlab;
using namespace eisenlab::lfun;
using arith::character_from_label;

TEST_CASE("hurwitz zeta against mpmath") {
  CHECK(std::abs(hurwitz_zeta(3.0, 1.0 / 3) - 27.5610611997008038) < 1e-12);
  CHECK(std::abs(hurwitz_zeta({0.5, 4.0}, 0.25) - Complex{1.76417450590289858, -1.74438833703004525}) < 1e-12);
  // (2^s - 1) zeta(s) = zeta(s, 1/2)
  const Complex s{3.0, 0.0};
  CHECK(std::abs(hurwitz_zeta(s, 0.5) - (std::pow(2.0, 3) - 1) * riemann_zeta(s)) < 1e-12);
}

TEST_CASE("riemann zeta") {
  CHECK(std::abs(riemann_zeta(2.0) - M_PI * M_PI / 6) < 1e-14);
  CHECK(std::abs(riemann_zeta({0.5, 14.0}) - Complex{0.0222411426099935892, -0.103258123266450058}) < 1e-12);
  CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12) < 1e-12);
}

TEST_CASE("dirichlet L-values") {
  const auto chi = character_from_label("5:quad");
  CHECK(std::abs(dirichlet_l(1.0, chi) - 0.430408940964004039) < 1e-14);
  CHECK(std::abs(dirichlet_l(0.5, chi) - 0.231750947504015745) < 1e-13);
  CHECK(std::abs(dirichlet_l({1.0, 0.6}, chi) - Complex{0.461698988640927550, 0.213714960637096852}) < 1e-13);
  // Catalan's constant from the odd character mod 4
  CHECK(std::abs(dirichlet_l(2.0, character_from_label("4:1")) - 0.915965594177219015) < 1e-14);
}

TEST_CASE("L-values of a complex character against the Dirichlet series") {
  const auto chi = character_from_label("7:1");
  const Complex s{3.0, 1.5};
  Complex direct = 0.0;
  for (int n = 1; n <= 200000; ++n) direct += chi(n) * std::exp(-s * std::log(static_cast<double>(n)));
  CHECK(std::abs(dirichlet_l(s, chi) - direct) < 1e-10);
}

TEST_CASE("imprimitive characters carry their Euler factors") {
  const auto chi = character_from_label("5:quad");
  const auto big = arith::induce(chi, 15);
  const Complex s{1.3, 0.4};
  const Complex euler = 1.0 - chi(3) * std::exp(-s * std::log(3.0));
  CHECK(std::abs(dirichlet_l(s, big) - euler * dirichlet_l(s, chi)) < 1e-12);
  CHECK(std::abs(principal_l(2.0, 6) - riemann_zeta(2.0) * (1 - 0.25) * (1 - 1.0 / 9)) < 1e-13);
}

TEST_CASE("completed L-function is symmetric for a real even character") {
  const auto chi = character_from_label("5:quad");
  const Complex s{0.3, 2.0};
  CHECK(std::abs(completed_lambda(s, chi) - completed_lambda(1.0 - s, chi)) < 1e-11);
  CHECK(std::abs(completed_lambda(1.0, chi) - std::sqrt(5.0) * dirichlet_l(1.0, chi)) < 1e-13);
}

TEST_CASE("laurent expansion of zeta at 1") {
  const auto L = laurent_at([](Complex s) { return riemann_zeta(1.0 + s); }, 0.0, 1, 3);
  CHECK(std::abs(L.coefficient(-1) - 1.0) < 1e-10);
  CHECK(std::abs(L.coefficient(0) - 0.577215664901532861) < 1e-10);
  // the s^1 coefficient is minus the first Stieltjes constant
  CHECK(std::abs(L.coefficient(1) - 0.0728158454836767249) < 1e-9);
  CHECK_THROWS_AS(laurent_at([](Complex) { return Complex{NAN, 0.0}; }, 0.0, 0, 2), PoleError);
}

TEST_CASE("log derivatives") {
  // zeta'/zeta(2) = -sum Lambda(n)/n^2
  const auto d = log_derivative(2.0, arith::principal_character(1), 1);
  CHECK(std::abs(d.value - (-0.569960993094532806)) < 1e-9);
  const auto chi = character_from_label("5:quad");
  const auto d1 = log_derivative(1.0, chi, 1), d2 = log_derivative(1.0, chi, 2);
  CHECK(std::isfinite(d1.value.real()));
  CHECK(std::isfinite(d2.value.real()));
  // finite difference cross-check
  const double h = 1e-4;
  const Complex fd = (std::log(dirichlet_l(1.0 + h, chi)) - std::log(dirichlet_l(1.0 - h, chi))) / (2 * h);
  CHECK(std::abs(d1.value - fd) < 1e-7);
}
