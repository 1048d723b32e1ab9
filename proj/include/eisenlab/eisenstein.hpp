#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/geometry.hpp"
#include "eisenlab/numeric.hpp"

namespace eisenlab::eis {

using arith::DirichletCharacter;
using arith::Int;

enum class Completion { completed_star, newform_normalized, scaled };

/// E*_{chi1, chi2}(z, s), optionally multiplied by a fixed scalar.
class EisensteinModel {
 public:
  EisensteinModel(DirichletCharacter chi1, DirichletCharacter chi2, Complex s);

  const DirichletCharacter& chi1() const { return chi1_; }
  const DirichletCharacter& chi2() const { return chi2_; }
  /// chi1 chi2 as a character mod q1 q2.
  const DirichletCharacter& psi() const { return psi_; }
  Int q1() const { return chi1_.modulus(); }
  Int q2() const { return chi2_.modulus(); }
  Int level() const { return q1() * q2(); }
  Complex s() const { return s_; }
  Completion completion() const { return completion_; }
  /// Multiplier applied to E* in every evaluation.
  Complex scalar() const { return scalar_; }

  /// lambda_{chi1, chi2}(n, s), cached.
  Complex lambda(Int n) const;

  EisensteinModel with_scalar(Complex scalar, Completion mode) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<Complex> values;  // index n >= 1
  };
  DirichletCharacter chi1_, chi2_, psi_;
  Complex s_;
  Completion completion_ = Completion::completed_star;
  Complex scalar_{1.0, 0.0};
  std::shared_ptr<Cache> cache_;
};

Complex lambda_coeff(Int n, const EisensteinModel& model);

/// theta_{1, chi}(s) = (q/pi)^s Gamma(s) L(2s, chi) / tau(chi).
Complex theta_factor(const DirichletCharacter& chi, Complex s);

/// Constant term of E* (times the model scalar).
Complex constant_term(double y, const EisensteinModel& model);

struct Evaluation {
  Complex value;
  double tail_bound = 0.0;
  Int n_max = 0;
};

inline constexpr double kDefaultYFloor = 0.05;
inline constexpr Int kMaxFourierTerms = 2000;

/// Fourier evaluation; requires Im z >= y_floor.
Evaluation eval_E_star(Complex z, const EisensteinModel& model, const PrecisionBudget& budget = {},
                       double y_floor = kDefaultYFloor);

struct OracleResult {
  Complex value;       // completion factor times the lattice sum
  Complex lattice;     // the raw lattice sum
  Complex completion;  // Gamma(s) q2^{2s} / (2 pi^s tau(chi2))
  double tail_bound = 0.0;
};

/// Lattice sum sum chi1(c) chi2(d) y^s / |c q2 z + d|^{2s} over rows |c| <= X.
OracleResult direct_series_oracle(Complex z, const EisensteinModel& model, double X);

/// Attaches tau(chi2) q2^s / Lambda(2s, psi).
EisensteinModel newform_normalize(const EisensteinModel& model);

/// E^Y(z): subtracts the constant term at the cusp whose zone of height Y holds z.
Complex truncate_at(const EisensteinModel& model, double Y, Complex z, const PrecisionBudget& budget = {});

struct CuspSlash {
  EisensteinModel model;  // scalar multiple of E*_{1, psi}(z, 1/2)
  Complex via_lambda;     // +- 1 / Lambda(1, psi)
  Complex via_theta;      // +- N^{-1/2} / theta_{1, psi}(1/2)
  int sign = 1;
};

/// E|sigma_a for prime N, s = 1/2 and quadratic chi, normalised so the
/// constant term at the cusp is sqrt(y).
CuspSlash cusp_slash(const DirichletCharacter& chi, geom::Cusp cusp);

/// Values of the function with constant term sqrt(y) at both cusps, routed so
/// that evaluation stays above the floor.
struct RoutedValue {
  Complex value;      // at the original point, up to the sign
  Complex truncated;  // after removing sqrt(Im w) inside the zone of height Y
  geom::Routed route;
  bool in_zone = false;
};
RoutedValue evaluate_routed(const EisensteinModel& normalized, Complex z, double Y, const PrecisionBudget& budget = {});

}  // namespace eisenlab::eis
