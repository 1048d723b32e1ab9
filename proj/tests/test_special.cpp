#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "doctest.h"
#include "eisenlab/errors.hpp"
#include "eisenlab/special_functions.hpp"

using namespace eisenlab;
using namespace eisenlab::special;

// Reference values below are mpmath results at 30 digits.

TEST_CASE("log gamma on and off the real axis") {
  CHECK(std::abs(log_gamma({0.5, 3.0}) - Complex{-3.79345045043622317, 0.309819271086439166}) < 1e-13);
  // principal branch far from the positive axis
  CHECK(std::abs(log_gamma({-2.5, 0.1}) - Complex{-0.103149244042819203, -9.31444426835983812}) < 1e-12);
  for (double x : {0.3, 1.0, 4.5, 17.25, 120.0}) CHECK(std::abs(log_gamma(x).real() - std::lgamma(x)) < 1e-12 * (1 + std::abs(std::lgamma(x))));
  // recurrence Gamma(z+1) = z Gamma(z)
  const Complex z{1.7, -6.2};
  CHECK(std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)) < 1e-12);
}

TEST_CASE("beta and digamma") {
  CHECK(std::abs(beta(2.5, 1.5) - 0.196349540849362077) < 1e-14);
  CHECK(std::abs(digamma({1.5, 2.0}) - Complex{0.799833758172953680, 1.10019713572985868}) < 1e-12);
}

TEST_CASE("bessel K of imaginary and complex order") {
  CHECK(std::abs(bessel_k(2.0, 1.5).value - 0.0693318572126196319) < 1e-14);
  CHECK(std::abs(bessel_k(10.0, 1e-3).value - 1.14917198821238767e-7) < 1e-18);
  CHECK(std::abs(bessel_k_complex({0.3, 2.0}, 0.7) - Complex{0.0444500764296587503, 0.0592917311052141943}) < 1e-13);
  for (double nu : {0.0, 0.4, 1.0, 2.5})
    for (double x : {0.05, 0.9, 7.0, 40.0}) {
      const double ref = boost::math::cyl_bessel_k(nu, x);
      CHECK(std::abs(bessel_k_complex(nu, x).real() - ref) < 1e-12 * ref);
    }
  bool under = false;
  const Complex far = bessel_k_complex(0.0, 900.0, &under);
  CHECK(under);
  CHECK(far == 0.0);
}

TEST_CASE("de Branges-Wilson integral equals 8 pi^3") {
  for (double T : {0.0, 0.1, 0.5, 1.0}) CHECK(std::abs(dbw_integral(T).value - 8 * std::pow(M_PI, 3)) < 1e-7);
  const auto a = dbw_integral(0.3, {}, 40.0), b = dbw_integral(0.3, {}, 80.0);
  CHECK(std::abs(a.value - b.value) < 1e-8);
  CHECK_THROWS_AS(dbw_integral(9.0), InvalidArgument);
}

TEST_CASE("stieltjes constants") {
  CHECK(std::abs(stieltjes(0) - 0.577215664901532861) < 1e-14);
  CHECK(std::abs(stieltjes(1) + 0.0728158454836767249) < 1e-13);
  CHECK_THROWS_AS(stieltjes(2), InvalidArgument);
}
