#include <cmath>
#include <random>

#include "doctest.h"
#include "eisenlab/characters.hpp"
#include "eisenlab/errors.hpp"
#include "eisenlab/geometry.hpp"

using namespace eisenlab;
using namespace eisenlab::geom;

TEST_CASE("coset representatives") {
  for (arith::Int N : {1, 2, 5, 6, 12, 13, 25}) {
    const auto cl = coset_reps(N);
    CHECK(static_cast<arith::Int>(cl.reps.size()) == arith::level_data(N).nu);
    CHECK(cl.reps.front().a == 1);
    CHECK(cl.reps.front().d == 1);
    // pairwise inequivalent: g_i g_j^{-1} is never in Gamma_0(N)
    for (std::size_t i = 0; i < cl.reps.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(in_gamma0(cl.reps[i] * cl.reps[j].inverse(), N));
  }
}

TEST_CASE("volume of the quotient") {
  CHECK(std::abs(volume(1) - M_PI / 3) < 1e-15);
  CHECK(std::abs(volume(5) - 6 * M_PI / 3) < 1e-14);
}

TEST_CASE("integrating the constant function gives the volume") {
  for (arith::Int N : {1, 5, 6}) {
    const auto r = integrate([](Complex) { return Complex{1.0, 0.0}; }, N, make_grid());
    CHECK(std::abs(r.value.real() - volume(N)) < 1e-8 * volume(N));
  }
}

TEST_CASE("integral of an Im z-power over the fundamental domain") {
  // int_F y^{-2} dmu = int_{-1/2}^{1/2} int_{sqrt(1-x^2)}^oo y^{-4} dy dx = (1/3) int (1-x^2)^{-3/2} dx = 2 / (3 sqrt 3)
  const auto r = integrate([](Complex z) { return Complex{std::pow(z.imag(), -2.0), 0.0}; }, 1, make_grid());
  CHECK(std::abs(r.value.real() - 2.0 / (3.0 * std::sqrt(3.0))) < 1e-12);
  // over Gamma_0(5) the same function picks up the images of F under six cosets
  const auto r5 = integrate([](Complex z) { return Complex{std::pow(z.imag(), -2.0), 0.0}; }, 5, make_grid());
  CHECK(r5.value.real() > r.value.real());
}

TEST_CASE("reduction lands in the standard domain") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.01, 2);
  for (int k = 0; k < 200; ++k) {
    const Complex z{ux(rng), uy(rng)};
    Complex w;
    const Mat2 g = reduce_to_standard(z, &w);
    CHECK(std::abs(w.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(w) >= 1 - 1e-12);
    CHECK(std::abs(g.apply(z) - w) < 1e-9);
    CHECK(g.det() == 1);
  }
}

TEST_CASE("routing maximises height and zones are disjoint") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0, 1), uy(0.002, 1.5);
  for (int k = 0; k < 500; ++k) {
    const Complex z{ux(rng), uy(rng)};
    const auto r = route(z, 5);
    CHECK(r.w.imag() >= z.imag() - 1e-12);
    const auto m = cuspidal_zone_membership(z, 5, 2.0);
    if (m) CHECK(r.w.imag() > 2.0);
  }
  CHECK(cuspidal_zone_membership({0.3, 5.0}, 5, 2.0) == Cusp::infinity);
  // -1/(5z) of a high point sits near the cusp 0
  CHECK(cuspidal_zone_membership(-1.0 / (5.0 * Complex{0.3, 5.0}), 5, 2.0) == Cusp::zero);
  CHECK_THROWS_AS(cuspidal_zone_membership({0.0, 1.0}, 5, 0.5), InvalidArgument);
}
