#pragma once

#include <cstdint>

#include "eisenlab/numeric.hpp"

namespace eisenlab::special {

Complex log_gamma(Complex z);
Complex gamma(Complex z);
Complex beta(Complex x, Complex y);
Complex digamma(Complex z);

struct BesselResult {
  double value = 0.0;
  bool underflow = false;
};

/// K_nu(x) for complex order and x > 0.
Complex bessel_k_complex(Complex nu, double x, bool* underflow = nullptr);
/// K_{it}(x), which is real.
BesselResult bessel_k(double t, double x);

struct DbwResult {
  double value = 0.0;
  double quad_error = 0.0;
  double tail_bound = 0.0;
  double t_max = 0.0;
  long evaluations = 0;
};

/// Integral over the real line of t sinh(pi t) prod B(1/4 + e1 it/2 + e2 iT, 1/4 - e1 it/2).
DbwResult dbw_integral(double T, const PrecisionBudget& budget = {}, double t_max = 40.0);
double dbw_integrand(double t, double T);

struct GammaFactorSpec {
  Complex s;
  double spectral_t = 0.0;
  std::int64_t conductor_Q = 1;
};

/// f(s, g) = Q^{1/2-s} pi^{2s-1} Gamma((1-s+it)/2) Gamma((1-s-it)/2) / (Gamma((s+it)/2) Gamma((s-it)/2)).
Complex gamma_factor_f(const GammaFactorSpec& g);

/// Stieltjes constants gamma_0 and gamma_1 (standard sign convention).
double stieltjes(int n);

}  // namespace eisenlab::special
