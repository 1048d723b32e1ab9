#include "eisenlab/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eisenlab/detail/gamma_kernel.hpp"
#include "eisenlab/fault.hpp"
#include "eisenlab/quadrature.hpp"

namespace eisenlab::special {

Complex log_gamma(Complex z) {
  return detail::log_gamma<double, Complex>(z) + fault::log_gamma_offset.load(std::memory_order_relaxed);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex beta(Complex x, Complex y) {
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

Complex digamma(Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("digamma: non-positive integer");
  Complex shift = 0.0;
  while (z.real() < 0.5 || std::abs(z) < 10.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const auto& B = detail::bernoulli_table<double>();
  const Complex w2 = 1.0 / (z * z);
  Complex pw = w2, series = 0.0;
  for (int k = 1; k <= 9; ++k) {
    series += B[k] / (2.0 * k) * pw;
    pw *= w2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

Complex bessel_k_complex(Complex nu, double x, bool* underflow) {
  if (!(x > 0.0)) throw InvalidArgument("bessel_k: x must be positive");
  if (underflow) *underflow = false;
  // K_nu(x) = 1/2 int exp(-x cosh w + nu w) dw along w = u + i theta; the
  // shift sin(theta) = Im(nu)/x removes the oscillation at u = 0.
  const double cap = std::sin(kPi / 2 - 0.25);
  const double ratio = std::min(std::abs(nu.imag()) / x, cap);
  const double theta = std::copysign(std::asin(ratio), nu.imag());
  const double ct = std::cos(theta);
  const double dist = kPi / 2 - std::abs(theta);
  const double xc = x * ct;
  const double h = std::min({0.1, 0.5 / std::sqrt(std::max(xc, 1.0)), dist / 10.0});

  auto log_mag = [&](double u) { return -xc * std::cosh(u) + nu.real() * u - nu.imag() * theta; };
  const double u_peak = std::asinh(nu.real() / xc);
  const double peak = log_mag(u_peak);
  if (peak < -705.0) {
    if (underflow) *underflow = true;
    return 0.0;
  }
  auto f = [&](double u) {
    const Complex w{u, theta};
    return std::exp(-x * std::cosh(w) + nu * w - peak);
  };
  // Trapezoid on a grid anchored at u_peak, walking out until negligible.
  Accumulator<Complex> acc;
  acc += f(u_peak);
  for (int dir : {-1, 1}) {
    for (int k = 1; k < 200000; ++k) {
      const double u = u_peak + dir * k * h;
      if (log_mag(u) - peak < -42.0) break;
      acc += f(u);
    }
  }
  return 0.5 * h * acc.value() * std::exp(peak);
}

BesselResult bessel_k(double t, double x) {
  bool uf = false;
  const Complex v = bessel_k_complex(Complex{0.0, t}, x, &uf);
  return {v.real(), uf};
}

double dbw_integrand(double t, double T) {
  if (t == 0.0) return 0.0;
  const Complex a{0.25, t / 2};
  const Complex b{0.25, -t / 2};
  const Complex lb1 = log_gamma(a + Complex{0.0, T}) + log_gamma(b) - log_gamma(a + b + Complex{0.0, T});
  const Complex lb2 = log_gamma(a - Complex{0.0, T}) + log_gamma(b) - log_gamma(a + b - Complex{0.0, T});
  const double at = std::abs(t);
  // t sinh(pi t) = |t| e^{pi |t|} (1 - e^{-2 pi |t|}) / 2
  const double lg = 2.0 * (lb1.real() + lb2.real()) + kPi * at + std::log(at * -std::expm1(-2.0 * kPi * at) / 2.0);
  return std::exp(lg);
}

DbwResult dbw_integral(double T, const PrecisionBudget& budget, double t_max) {
  budget.validate();
  if (std::abs(T) > 5.0) throw InvalidArgument("dbw_integral: |T| must be at most 5");
  auto f = [T](double t) { return dbw_integrand(t, T); };
  DbwResult r;
  r.t_max = t_max;
  // Even integrand: twice the half line.
  const double half_tol = budget.target_abs_err / 4.0;
  auto q = quad::adaptive<double>(f, 0.0, t_max, half_tol, 0.0, 16, budget.max_terms);
  r.value = 2.0 * q.value;
  r.quad_error = 2.0 * q.error;
  r.evaluations = q.evaluations;
  // Tail: the integrand decays at least exponentially; extrapolate its rate from the last unit.
  const double f1 = f(t_max - 1.0), f2 = f(t_max);
  const double rate = (f1 > 0.0 && f2 > 0.0) ? std::log(f1 / f2) : 0.0;
  r.tail_bound = rate > 0.0 ? 2.0 * 2.0 * f2 / rate : std::numeric_limits<double>::infinity();
  if (r.tail_bound > budget.target_abs_err / 2.0)
    throw BudgetExceeded("dbw_integral: tail beyond t_max exceeds the target error");
  return r;
}

Complex gamma_factor_f(const GammaFactorSpec& g) {
  if (g.conductor_Q < 1) throw InvalidArgument("gamma_factor_f: conductor must be positive");
  const Complex s = g.s;
  const Complex it{0.0, g.spectral_t};
  const Complex lg = log_gamma((1.0 - s + it) / 2.0) + log_gamma((1.0 - s - it) / 2.0) -
                     log_gamma((s + it) / 2.0) - log_gamma((s - it) / 2.0);
  return std::exp((0.5 - s) * std::log(static_cast<double>(g.conductor_Q)) + (2.0 * s - 1.0) * std::log(kPi) + lg);
}

namespace {

// Euler-Maclaurin corrected partial sums of log^n(k)/k.
double stieltjes_em(int n) {
  const int M = 200;
  const double lm = std::log(static_cast<double>(M));
  Accumulator<double> s(AccumulatorMode::double_word);
  for (int k = 2; k <= M; ++k) s += std::pow(std::log(static_cast<double>(k)), n) / k;
  if (n == 0) s += 1.0;
  double v = s.value();
  v -= (n == 0) ? lm : lm * lm / 2.0;
  const double fM = std::pow(lm, n) / M;
  v -= fM / 2.0;
  const auto& B = detail::bernoulli_table<double>();
  double fact = 2.0;  // (2j)!
  double mfact = 1.0;  // (2j-1)!
  double harmonic = 1.0;  // H_{2j-1}
  for (int j = 1; j <= 8; ++j) {
    const int m = 2 * j - 1;
    // d^m/dx^m of log^n(x)/x at x = M
    const double deriv = -mfact * (n == 0 ? 1.0 : (lm - harmonic)) / std::pow(M, m + 1);
    v -= B[j] / fact * deriv;
    fact *= (2.0 * j + 1) * (2.0 * j + 2);
    mfact *= (2.0 * j) * (2.0 * j + 1);
    harmonic += 1.0 / (2 * j) + 1.0 / (2 * j + 1);
  }
  return v;
}

}  // namespace

double stieltjes(int n) {
  static const double g0 = stieltjes_em(0);
  static const double g1 = stieltjes_em(1);
  if (n == 0) return g0;
  if (n == 1) return g1;
  throw InvalidArgument("stieltjes: only n = 0 and n = 1 are supported");
}

}  // namespace eisenlab::special
