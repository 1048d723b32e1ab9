// Contour route of the cusp-zone integral in binary128. The residue at s = 0
// and the line integral on Re s = -c are both of size about 1 and cancel to
// about 1e-11, so binary64 leaves no correct digits in their sum.
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "eisenlab/detail/character_values.hpp"
#include "eisenlab/detail/gamma_kernel.hpp"
#include "eisenlab/detail/laurent.hpp"
#include "eisenlab/detail/zeta_kernel.hpp"
#include "eisenlab/moment.hpp"
#include "eisenlab/quadrature.hpp"

namespace eisenlab::moment {

namespace {

using boost::multiprecision::complex128;
using boost::multiprecision::float128;
using R = float128;
using C = complex128;

struct QuadH {
  std::vector<C> psi;
  std::vector<C> one;
  std::vector<R> primes;
  R log_piY;

  explicit QuadH(const PipelineContext& ctx)
      : psi(detail::character_values<R, C>(ctx.psi)), one{C(R(1), R(0))} {
    for (auto [p, e] : arith::factorize(ctx.N)) {
      (void)e;
      primes.push_back(R(p));
    }
    log_piY = log(detail::pi<R>() * R(ctx.Y));
  }

  C operator()(const C& s) const {
    const C z = detail::dirichlet_l<R, C>(C(R(1)) + s, one);
    const C L = detail::dirichlet_l<R, C>(C(R(1)) + s, psi);
    const C z2 = detail::dirichlet_l<R, C>(C(R(2)) + R(2) * s, one);
    C g = exp(R(4) * detail::log_gamma<R, C>((C(R(1)) + s) / R(2)) - detail::log_gamma<R, C>(C(R(1)) + s) -
              s * log_piY);
    for (const R& p : primes) g /= C(R(1)) + exp(-(C(R(1)) + s) * log(p));
    return z * z * L * L / z2 * g / s;
  }
};

}  // namespace

ContourParts contour_parts(const PipelineContext& ctx) {
  const QuadH H(ctx);
  // residue: Laurent coefficient of s^{-1} on two radii
  const auto big = detail::laurent_coefficients<R, C>(H, C(R(0)), 3, 3, R(0.25), 96);
  const auto small = detail::laurent_coefficients<R, C>(H, C(R(0)), 3, 3, R(0.125), 96);
  const R residue = big[2].real();
  const R laurent_err = abs(big[2] - small[2]);

  // line: (1/pi) int_0^t_max Re H(-c + it) dt on panels graded towards the pole
  const R c = R(ctx.c);
  std::vector<R> breaks{R(0)};
  for (R b = c / 8; b < R(2); b *= 2) breaks.push_back(b);
  for (R b = R(2); b <= R(80); b += R(2)) breaks.push_back(b);
  auto integrate = [&](int order) {
    const auto& rule = quad::gauss_legendre<R>(order);
    R acc = 0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      const R half = (breaks[k + 1] - breaks[k]) / 2, mid = (breaks[k + 1] + breaks[k]) / 2;
      R panel = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        panel += rule.weights[i] * H(C(-c, mid + half * rule.nodes[i])).real();
      acc += half * panel;
    }
    return acc / detail::pi<R>();
  };
  const R line = integrate(30);
  const R line_check = integrate(20);
  // |H| decays like e^{-pi t / 2}; what lies beyond t = 80
  const R tail = abs(H(C(-c, R(80)))) * R(2) / (detail::pi<R>() * detail::pi<R>());

  ContourParts out;
  out.residue = static_cast<double>(residue);
  out.line = static_cast<double>(line);
  out.sum = static_cast<double>(residue + line);
  out.tail_bound = static_cast<double>(laurent_err + abs(line - line_check) + tail);
  return out;
}

}  // namespace eisenlab::moment
