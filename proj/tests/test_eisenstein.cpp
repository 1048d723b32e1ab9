#include <cmath>
#include <random>

#include "doctest.h"
#include "eisenlab/eisenstein.hpp"
#include "eisenlab/errors.hpp"
#include "eisenlab/lfunctions.hpp"

using namespace eisenlab;
using namespace eisenlab::eis;
using arith::character_from_label;

namespace {
EisensteinModel model(const char* a, const char* b, Complex s) {
  return EisensteinModel(character_from_label(a), character_from_label(b), s);
}
}  // namespace

TEST_CASE("fourier expansion matches the lattice sum at Re s = 2") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.35, 1.8);
  for (const auto& m : {model("1:0", "5:quad", 2.0), model("5:quad", "1:0", {2.0, 0.3}),
                        model("1:0", "13:quad", {2.0, 0.7}), model("1:0", "13:2", 2.0)}) {
    for (int k = 0; k < 5; ++k) {
      const Complex z{ux(rng), uy(rng)};
      const Complex four = eval_E_star(z, m).value;
      const auto lat = direct_series_oracle(z, m, 60);
      CHECK(std::abs(four - lat.value) <= 1e-8 * std::abs(lat.value));
    }
  }
}

TEST_CASE("level one series at i against the Epstein zeta value") {
  // sum over (c, d) != 0 of |ci + d|^{-4} = 4 zeta(2) L(2, chi_{-4}) ... times the completion
  const auto m = model("1:0", "1:0", 2.0);
  const Complex z{0.0, 1.0};
  const Complex four = eval_E_star(z, m).value;
  const auto lat = direct_series_oracle(z, m, 60);
  CHECK(std::abs(four - lat.value) < 1e-10 * std::abs(lat.value));
  const double epstein = 4 * lfun::riemann_zeta(2.0).real() * lfun::dirichlet_l(2.0, character_from_label("4:1")).real();
  // the raw lattice sum skips c = 0 rows only through the character, so it equals the Epstein sum up to the c = 0 row
  CHECK(std::abs(lat.lattice.real() - epstein) < 1e-8 * epstein);
}

TEST_CASE("hecke bound on the coefficients at the centre") {
  const auto m = model("1:0", "13:quad", {0.5, 0.0});
  for (arith::Int n = 1; n <= 10000; ++n) {
    int d = 0;
    for (arith::Int k = 1; k * k <= n; ++k)
      if (n % k == 0) d += (k * k == n) ? 1 : 2;
    CHECK_MESSAGE(std::abs(m.lambda(n)) <= d + 1e-9, "n = " << n);
  }
}

TEST_CASE("invalid models") {
  CHECK_THROWS_AS(model("5:quad", "5:quad", 2.0), InvalidArgument);
  CHECK_THROWS_AS(model("1:0", "1:0", 0.5), PoleError);
  CHECK_THROWS_AS(model("1:0", "13:1", 2.0), InvalidArgument);  // odd product
  const auto m = model("1:0", "5:quad", 2.0);
  CHECK_THROWS_AS(eval_E_star({0.1, 0.01}, m), EvaluationFloorError);
}

TEST_CASE("cusp normalisation is consistent both ways") {
  const auto chi = character_from_label("5:quad");
  const auto inf = cusp_slash(chi, geom::Cusp::infinity);
  CHECK(std::abs(inf.via_lambda - inf.via_theta) < 1e-12);
  // constant term sqrt(y)
  for (double y : {1.5, 3.0}) CHECK(std::abs(constant_term(y, inf.model) - std::sqrt(y)) < 1e-12);
  const auto zero = cusp_slash(chi, geom::Cusp::zero);
  CHECK(std::abs(zero.sign) == 1);
}

TEST_CASE("routed values agree with direct evaluation where both are available") {
  const auto chi = character_from_label("5:quad");
  const auto m = cusp_slash(chi, geom::Cusp::infinity).model;
  for (Complex z : {Complex{0.2, 0.9}, Complex{-0.4, 0.3}, Complex{0.31, 2.5}}) {
    const Complex direct = eval_E_star(z, m).value;
    const auto rv = evaluate_routed(m, z, 2.0);
    CHECK(std::abs(std::abs(rv.value) - std::abs(direct)) < 1e-9 * (1 + std::abs(direct)));
  }
  // inside the zone the truncation removes sqrt(y)
  const Complex z{0.25, 3.0};
  CHECK(std::abs(truncate_at(m, 2.0, z) - (eval_E_star(z, m).value - std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("Fricke involution fixes E* at s = 1/2 for even quadratic psi") {
  for (const char* label : {"5:quad", "13:quad"}) {
    const auto chi = character_from_label(label);
    const auto m = cusp_slash(chi, geom::Cusp::infinity).model;
    const double N = static_cast<double>(chi.modulus());
    for (Complex z : {Complex{0.1, 0.6}, Complex{-0.2, 0.45}}) {
      const Complex a = eval_E_star(z, m).value, b = eval_E_star(-1.0 / (N * z), m).value;
      CAPTURE(label);
      CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
    }
  }
}
