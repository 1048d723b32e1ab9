#include <cmath>

#include <boost/math/special_functions/sinc.hpp>

#include "doctest.h"
#include "eisenlab/errors.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/recipe.hpp"
#include "eisenlab/special_functions.hpp"

using namespace eisenlab;
using namespace eisenlab::recipe;
using arith::character_from_label;

namespace {
ShiftState state(std::array<int, 4> eps, std::array<Complex, 4> alpha, double T = 0.0) {
  ShiftState s;
  s.eps = eps;
  s.alpha = alpha;
  s.T = T;
  return s;
}
}  // namespace

TEST_CASE("gamma ratio is 1 at zero shift and even in t") {
  CHECK(std::abs(gamma_ratio(0.0, 1.3) - 1.0) < 1e-14);
  const Complex a{0.1, 0.4};
  CHECK(std::abs(gamma_ratio(a, 2.2) - gamma_ratio(a, -2.2)) < 1e-13);
  CHECK(std::abs(h_weight(state({1, 1, 1, 1}, {0.3, 0.2, 0.1, 0.4}), 1.0) - 1.0) < 1e-15);
}

TEST_CASE("F_eps on the diagonal is 8 pi for every T") {
  for (double T : {0.0, 0.3, 1.0}) {
    const Complex F = F_eps(state({1, 1, -1, -1}, alpha0(T), T));
    CHECK(std::abs(F - 8 * M_PI) < 1e-6);
  }
}

TEST_CASE("F_eps off the diagonal approaches 8 pi and matches adaptive quadrature") {
  double prev = 1e300;
  for (double T : {0.2, 0.1, 0.05}) {
    const double d = std::abs(F_eps(state({1, 1, 1, -1}, alpha0(T), T)) - 8 * M_PI);
    CHECK(d < prev);
    prev = d;
  }
  const auto s = state({1, 1, 1, -1}, alpha0(0.2), 0.2);
  FepsOptions wide;
  wide.t_max = 32;
  CHECK(std::abs(F_eps(s) - F_eps(s, wide)) < 1e-8);
  auto f = [&](double t) { return special::dbw_integrand(t, 0.2) * h_weight(s, t); };
  const auto r = quad::adaptive<double>(f, 0.0, 40.0, 1e-13, 1e-13, 20);
  CHECK(std::abs(F_eps(s) - 2.0 * r.value / (M_PI * M_PI)) < 1e-9);
}

TEST_CASE("F_eps is symmetric under swapping the first two slots") {
  const std::array<Complex, 4> a{Complex{0.05, 0.1}, Complex{0.02, -0.3}, Complex{0, 0.4}, Complex{0, -0.4}};
  const auto s1 = state({1, -1, 1, -1}, a, 0.2);
  auto s2 = state({-1, 1, 1, -1}, {a[1], a[0], a[2], a[3]}, 0.2);
  CHECK(std::abs(F_eps(s1) - F_eps(s2)) < 1e-12 * std::abs(F_eps(s1)));
}

TEST_CASE("diagonal sum matches the Ramanujan closed form within its tail") {
  const std::array<Complex, 4> a{Complex{0.6, 0.3}, Complex{0.7, -0.2}, Complex{0.65, 0.1}, Complex{0.8, 0}};
  for (const char* label : {"1:0", "5:quad", "7:1"}) {
    const auto chi = character_from_label(label);
    const auto s = state({1, 1, 1, 1}, a);
    const auto d = quadruple_diagonal_sum(s, chi, 20000);
    const Complex closed = ramanujan_ratio(s, chi);
    CAPTURE(label);
    CHECK(std::abs(d.value - closed) <= d.tail_bound);
    CHECK(d.tail_bound < 0.5 * std::abs(closed));
  }
  CHECK_THROWS_AS(quadruple_diagonal_sum(state({1, 1, 1, 1}, a), character_from_label("1:0"), 10), InvalidArgument);
}

TEST_CASE("threshold scan follows sin(x)/(2T)") {
  const Int N = 1000000;
  const double L = std::log(double(N));
  const auto sched = auto_schedule(N);
  REQUIRE(sched.size() == 41);
  CHECK(sched.front() == 0.0);
  CHECK(std::abs(sched.back() - 20 / L) < 1e-12);
  for (const auto& row : threshold_scan(N, sched)) {
    const double expect = 2 * L * boost::math::sinc_pi(4 * row.T * L);
    CHECK(std::abs(row.bracket - expect) < 1e-12 * (1 + std::abs(expect)));
    if (row.T > 0) CHECK(std::abs(row.bracket) <= row.envelope + 1e-12);
  }
}

TEST_CASE("main prediction for a complex character") {
  // 24/pi log^2(101) / 102
  CHECK(main_prediction(101, 1.0, ChiKind::complex) == doctest::Approx(1.5952).epsilon(1e-3));
  CHECK(corollary_consistency(101, 1.0, ChiKind::complex).pass);
  CHECK(corollary_consistency(1009, 0.0, ChiKind::quadratic).pass);
}

TEST_CASE("the eta poles cancel along the limit path") {
  for (const auto& [label, T] : {std::pair{"5:quad", 0.0}, std::pair{"5:1", 0.5}}) {
    const auto path = limit_path_evaluate(5, T, character_from_label(label));
    REQUIRE(path.pairs.size() == 4);
    double scale = 0;
    for (const auto& p : path.pairs) {
      CHECK(std::abs(p.pole_residual) < 1e-6);
      scale += std::abs(p.R.coefficient(-1));
    }
    CAPTURE(label);
    CHECK(std::abs(path.pole_sum) <= 1e-6 * (1 + scale));
    CHECK(std::isfinite(path.total.real()));
  }
}

TEST_CASE("display at a large quadratic level sits inside the 25 / log N band") {
  // 10009 is prime and 1 mod 4, so its quadratic character is even and primitive
  const Int N = 10009;
  const auto chi = character_from_label("10009:quad");
  Complex total = 0, poles = 0;
  for (int e3 : {1, -1})
    for (int e4 : {1, -1}) {
      const auto lau = lfun::laurent_at([&](Complex eta) { return R_display(e3, e4, eta, 0.0, chi); }, 0.0, 1, 2, 1e-2, 16);
      total += lau.coefficient(0);
      poles += lau.coefficient(-1);
    }
  const double main = main_prediction(N, 0.0, ChiKind::quadratic);
  CHECK(std::abs(poles) < 1e-9);
  CHECK(std::abs(total.real() - main) <= 25.0 / std::log(double(N)) * main);
}
