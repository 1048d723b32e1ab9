#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eisenlab/numeric.hpp"

namespace eisenlab::arith {

using Int = std::int64_t;

Int gcd(Int a, Int b);
Int mod(Int a, Int m);
Int euler_phi(Int n);
/// Prime factorization as ascending (prime, exponent) pairs.
std::vector<std::pair<Int, int>> factorize(Int n);
std::vector<Int> divisors(Int n);

/// A Dirichlet character mod q.
///
/// Values are stored as exact exponents: chi(n) = e(exponent(n) / order_base()),
/// with exponent -1 marking gcd(n, q) > 1. The character is identified by its
/// exponent vector against the fixed generator basis of (Z/qZ)^x (smallest
/// primitive root per odd prime power; -1 and 5 for powers of two).
class DirichletCharacter {
 public:
  DirichletCharacter() = default;

  Int modulus() const { return q_; }
  Int order_base() const { return base_; }
  /// Exponent numerator of chi(n) over order_base(), or -1 when gcd(n, q) > 1.
  Int exponent(Int n) const { return exps_[static_cast<std::size_t>(mod(n, q_))]; }
  Complex operator()(Int n) const;
  /// chi(n) as an exact member of {0, 1, -1} for real characters.
  int real_value(Int n) const;

  int parity() const { return parity_; }
  bool is_even() const { return parity_ == 1; }
  Int conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }
  bool is_principal() const;
  bool is_real() const;
  /// Exponents against the generator basis; also the enumeration key.
  const std::vector<Int>& generator_exponents() const { return index_; }
  /// Position in enumerate_characters(q).
  Int index() const { return position_; }
  std::string label() const;

  DirichletCharacter conj() const;
  /// chi^k for k in {+1, -1}.
  DirichletCharacter power(int k) const;

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.q_ == b.q_ && a.index_ == b.index_;
  }

  /// Builds the character mod q whose value at n is e(turns(n)), where
  /// turns(n) = {numerator, denominator} is supplied for n coprime to q.
  template <class TurnFn>
  static DirichletCharacter from_turns(Int q, TurnFn&& turns);

  static DirichletCharacter from_generator_exponents(Int q, std::vector<Int> index);
  static std::vector<Int> generator_orders(Int q);

 private:
  struct Basis;
  static const Basis& basis(Int q);
  static DirichletCharacter build(Int q, std::vector<Int> index);
  static DirichletCharacter from_generator_turns(Int q, const std::vector<std::pair<Int, Int>>& turns);
  static std::vector<Int> generator_residues(Int q);

  Int q_ = 1;
  Int base_ = 1;
  std::vector<Int> exps_{0};
  std::vector<Int> index_;
  Int position_ = 0;
  int parity_ = 1;
  Int conductor_ = 1;
};

template <class TurnFn>
DirichletCharacter DirichletCharacter::from_turns(Int q, TurnFn&& turns) {
  std::vector<std::pair<Int, Int>> at_gens;
  for (Int g : generator_residues(q)) at_gens.push_back(turns(g));
  return from_generator_turns(q, at_gens);
}

/// All phi(q) characters mod q, ordered lexicographically by generator exponents.
std::vector<DirichletCharacter> enumerate_characters(Int q);
DirichletCharacter principal_character(Int q);
/// The real non-principal character used by the `q:quad` alias: the first
/// primitive one in enumeration order, else the first real non-principal one.
DirichletCharacter quadratic_character(Int q);
/// Parses `q:index` or `q:quad`.
DirichletCharacter character_from_label(const std::string& label);

/// The primitive character mod conductor(chi) that induces chi.
DirichletCharacter primitive_of(const DirichletCharacter& chi);

/// The character mod Q induced by chi (Q a multiple of chi's modulus).
DirichletCharacter induce(const DirichletCharacter& chi, Int Q);

Complex gauss_sum(const DirichletCharacter& chi);

struct Decomposition {
  DirichletCharacter chi1;  ///< primitive mod N/f
  DirichletCharacter chi2;  ///< primitive mod f
  DirichletCharacter psi;   ///< chi1 * chi2, as a character mod N
};

/// Splits chi = chi1 * conj(chi2) with chi1 mod N/f and chi2 mod f.
Decomposition decompose(const DirichletCharacter& chi, Int f);

struct Rational {
  Int num = 0;
  Int den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct LevelData {
  Int N = 1;
  std::vector<std::pair<Int, int>> factors;
  Int nu = 1;
  Rational sigma_minus_one{1, 1};
};

LevelData level_data(Int N);
/// sigma_{-1}(N) - 1 <= N^{-delta}, i.e. the O-constant fixed to 1.
bool admissible_level(Int N, double delta);

}  // namespace eisenlab::arith
