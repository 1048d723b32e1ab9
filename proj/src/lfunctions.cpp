#include "eisenlab/lfunctions.hpp"

#include <algorithm>
#include <cmath>

#include "eisenlab/detail/character_values.hpp"
#include "eisenlab/detail/laurent.hpp"
#include "eisenlab/detail/zeta_kernel.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab::lfun {

Complex hurwitz_zeta(Complex s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw InvalidArgument("hurwitz_zeta: a must lie in (0, 1]");
  return detail::hurwitz_zeta<double, Complex>(s, a);
}

Complex hurwitz_zeta_regular(Complex s, double a) {
  if (!(a > 0.0 && a <= 1.0)) throw InvalidArgument("hurwitz_zeta: a must lie in (0, 1]");
  return detail::hurwitz_zeta_regular<double, Complex>(s, a);
}

Complex riemann_zeta(Complex s) { return detail::riemann_zeta<double, Complex>(s); }

Complex dirichlet_l(Complex s, const DirichletCharacter& chi) {
  if (chi.is_primitive()) return detail::dirichlet_l<double, Complex>(s, detail::character_values<double, Complex>(chi));
  // L(s, chi) = L(s, chi*) prod_{p | q} (1 - chi*(p) p^{-s})
  const DirichletCharacter prim = arith::primitive_of(chi);
  Complex v = detail::dirichlet_l<double, Complex>(s, detail::character_values<double, Complex>(prim));
  for (auto [p, k] : arith::factorize(chi.modulus()))
    v *= 1.0 - prim(p) * std::exp(-s * std::log(static_cast<double>(p)));
  return v;
}

Complex principal_l(Complex s, Int N) {
  if (N < 1) throw InvalidArgument("principal_l: N must be positive");
  Complex v = riemann_zeta(s);
  for (auto [p, k] : arith::factorize(N)) v *= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
  return v;
}

Complex completed_lambda(Complex s, const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw InvalidArgument("completed_lambda: character must be primitive");
  const double a = chi.is_even() ? 0.0 : 1.0;
  const double q = static_cast<double>(chi.modulus());
  const Complex h = (s + a) / 2.0;
  return std::exp(h * std::log(q / kPi) + special::log_gamma(h)) * dirichlet_l(s, chi);
}

Complex LaurentExpansion::coefficient(int power) const {
  const int i = power + order_of_pole;
  if (i < 0 || i >= static_cast<int>(coefficients.size())) return 0.0;
  return coefficients[static_cast<std::size_t>(i)];
}

Complex LaurentExpansion::evaluate(Complex s) const {
  const Complex d = s - center;
  Complex v = 0.0;
  for (std::size_t i = coefficients.size(); i-- > 0;) v = v * d + coefficients[i];
  return v * std::pow(d, -order_of_pole);
}

LaurentExpansion laurent_at(const std::function<Complex(Complex)>& f, Complex s0, int pole_order, int n_coeffs,
                            double radius, int nodes) {
  if (pole_order < 0 || n_coeffs < 1) throw InvalidArgument("laurent_at: bad orders");
  auto guarded = [&](Complex s) {
    const Complex v = f(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw PoleError("laurent_at: contour passes through a singularity");
    return v;
  };
  LaurentExpansion e;
  e.center = s0;
  e.order_of_pole = pole_order;
  e.radius_hint = radius;
  e.coefficients = detail::laurent_coefficients<double, Complex>(guarded, s0, pole_order, n_coeffs, radius, nodes);
  const auto half = detail::laurent_coefficients<double, Complex>(guarded, s0, pole_order, n_coeffs, radius / 2, nodes);
  for (int i = 0; i < n_coeffs; ++i)
    e.remainder_bound = std::max(e.remainder_bound, std::abs(e.coefficients[static_cast<std::size_t>(i)] -
                                                             half[static_cast<std::size_t>(i)]));
  return e;
}

LogDerivative log_derivative(Complex s, const DirichletCharacter& chi, int k, double radius) {
  if (k != 1 && k != 2) throw InvalidArgument("log_derivative: k must be 1 or 2");
  const auto values = detail::character_values<double, Complex>(chi);
  auto L = [&](Complex z) { return detail::dirichlet_l<double, Complex>(z, values); };
  LogDerivative out;
  out.l_value = L(s);
  if (std::abs(out.l_value) < 1e-8) throw ZeroOfLError("log_derivative: L(s) is numerically zero");
  const double fact = k == 1 ? 1.0 : 2.0;
  auto at = [&](double r) {
    auto c = detail::laurent_coefficients<double, Complex>(L, s, 0, k + 1, r, 32);
    return fact * c[static_cast<std::size_t>(k)] / out.l_value;
  };
  out.value = at(radius);
  out.error = std::abs(out.value - at(radius / 2));
  return out;
}

}  // namespace eisenlab::lfun
