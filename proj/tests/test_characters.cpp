#include <cmath>
#include <map>

#include "doctest.h"
#include "eisenlab/characters.hpp"
#include "eisenlab/errors.hpp"

using namespace eisenlab;
using namespace eisenlab::arith;

TEST_CASE("character counts and orthogonality") {
  for (Int q = 1; q <= 40; ++q) {
    const auto chars = enumerate_characters(q);
    CHECK(static_cast<Int>(chars.size()) == euler_phi(q));
    // sum over the group of chi(a) vanishes unless chi is principal
    for (const auto& chi : chars) {
      Complex s = 0.0;
      for (Int a = 0; a < q; ++a) s += chi(a);
      const double expect = chi.is_principal() ? static_cast<double>(euler_phi(q)) : 0.0;
      CHECK(std::abs(s - expect) < 1e-9);
    }
  }
}

TEST_CASE("multiplicativity and periodicity") {
  for (Int q : {7, 12, 15, 16, 35}) {
    for (const auto& chi : enumerate_characters(q))
      for (Int a = 1; a < 2 * q; ++a)
        for (Int b = 1; b < q; b += 3) {
          CHECK(std::abs(chi(a * b) - chi(a) * chi(b)) < 1e-12);
          CHECK(std::abs(chi(a + q) - chi(a)) < 1e-12);
        }
  }
}

TEST_CASE("conductors by brute-force period search") {
  // the conductor is the least d | q such that chi(a) = chi(b) whenever a = b mod d and both are coprime to q
  for (Int q = 2; q <= 36; ++q)
    for (const auto& chi : enumerate_characters(q)) {
      Int least = q;
      for (Int d : divisors(q)) {
        bool periodic = true;
        for (Int a = 1; a < q && periodic; ++a) {
          if (gcd(a, q) != 1) continue;
          for (Int b = a + d; b < q + a && periodic; b += d)
            if (gcd(b, q) == 1 && std::abs(chi(a) - chi(b)) > 1e-9) periodic = false;
        }
        if (periodic) {
          least = d;
          break;
        }
      }
      CHECK(chi.conductor() == least);
    }
}

TEST_CASE("gauss sums of primitive characters have modulus sqrt(q)") {
  for (Int q = 3; q <= 60; ++q)
    for (const auto& chi : enumerate_characters(q))
      if (chi.is_primitive()) CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(q))) < 1e-10);
}

TEST_CASE("quadratic gauss sums against the direct sum") {
  for (Int p : {5, 13, 7, 11, 29}) {
    const auto chi = quadratic_character(p);
    Complex direct = 0.0;
    for (Int a = 1; a < p; ++a) direct += chi(a) * std::exp(Complex{0.0, 2 * M_PI * a / p});
    CHECK(std::abs(gauss_sum(chi) - direct) < 1e-10);
    // sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4
    const Complex expect = p % 4 == 1 ? Complex{std::sqrt(p * 1.0), 0.0} : Complex{0.0, std::sqrt(p * 1.0)};
    CHECK(std::abs(direct - expect) < 1e-10);
  }
}

TEST_CASE("labels and quadratic lookup") {
  const auto chi = character_from_label("5:quad");
  CHECK(chi.is_real());
  CHECK_FALSE(chi.is_principal());
  CHECK(chi.label() == "5:2");
  CHECK(character_from_label(chi.label()) == chi);
  CHECK_THROWS_AS(character_from_label("5:99"), InvalidArgument);
  CHECK_THROWS_AS(character_from_label("nonsense"), InvalidArgument);
}

TEST_CASE("decomposition into primitive parts") {
  const auto chi = character_from_label("35:7");
  REQUIRE(chi.is_primitive());
  const auto d = decompose(chi, 5);
  CHECK(d.chi1.modulus() == 7);
  CHECK(d.chi2.modulus() == 5);
  for (Int a = 1; a < 35; ++a) CHECK(std::abs(induce(d.chi1, 35)(a) * induce(d.chi2, 35)(a) - d.psi(a)) < 1e-12);
  CHECK_THROWS(decompose(character_from_label("35:5"), 5));
}

TEST_CASE("primitive_of agrees with the character on units") {
  for (const auto& chi : enumerate_characters(40)) {
    const auto p = primitive_of(chi);
    CHECK(p.modulus() == chi.conductor());
    for (Int a = 1; a < 40; ++a)
      if (gcd(a, 40) == 1) CHECK(std::abs(p(a) - chi(a)) < 1e-12);
  }
}

TEST_CASE("level data") {
  const auto d = level_data(12);
  CHECK(d.nu == 24);
  CHECK(d.sigma_minus_one.num * 3 == d.sigma_minus_one.den * 7);
  CHECK(level_data(5).nu == 6);
  // sigma_{-1}(p) - 1 = 1/p <= p^{-delta} exactly at delta = 1
  CHECK(admissible_level(101, 1.0));
  CHECK_FALSE(admissible_level(12, 0.5));
}
