#pragma once

#include <functional>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/numeric.hpp"

namespace eisenlab::lfun {

using arith::DirichletCharacter;
using arith::Int;

Complex hurwitz_zeta(Complex s, double a);
/// zeta(s, a) - 1/(s - 1); entire.
Complex hurwitz_zeta_regular(Complex s, double a);
Complex riemann_zeta(Complex s);
Complex dirichlet_l(Complex s, const DirichletCharacter& chi);
/// zeta(s) prod_{p | N} (1 - p^{-s}).
Complex principal_l(Complex s, Int N);
/// (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi), a = 0 for even and 1 for odd chi.
Complex completed_lambda(Complex s, const DirichletCharacter& chi);

struct LaurentExpansion {
  Complex center;
  int order_of_pole = 0;
  std::vector<Complex> coefficients;  // from (s - center)^{-order_of_pole} upward
  double radius_hint = 0.0;
  double remainder_bound = 0.0;

  /// Coefficient of (s - center)^power, zero outside the stored range.
  Complex coefficient(int power) const;
  Complex evaluate(Complex s) const;
};

LaurentExpansion laurent_at(const std::function<Complex(Complex)>& f, Complex s0, int pole_order, int n_coeffs,
                            double radius = 0.1, int nodes = 64);

struct LogDerivative {
  Complex value;    // L^{(k)} / L at s
  double error = 0; // spread between radii r and r/2
  Complex l_value;
};

LogDerivative log_derivative(Complex s, const DirichletCharacter& chi, int k, double radius = 0.1);

}  // namespace eisenlab::lfun
