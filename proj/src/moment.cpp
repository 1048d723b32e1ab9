#include "eisenlab/moment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "eisenlab/eisenstein.hpp"
#include "eisenlab/geometry.hpp"
#include "eisenlab/lfunctions.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab::moment {

namespace {

double k0_squared(double y) {
  const double k = boost::math::cyl_bessel_k(0, y);
  return k * k;
}

Complex cpow_real(double base, Complex e) { return std::exp(e * std::log(base)); }

Complex euler_product(Complex s, Int N) {
  Complex p_prod = 1.0;
  for (auto [p, e] : arith::factorize(N)) {
    (void)e;
    p_prod /= 1.0 + cpow_real(static_cast<double>(p), -1.0 - s);
  }
  return p_prod;
}

}  // namespace

PipelineContext make_context(Int N, double Y, double c) {
  const auto f = arith::factorize(N);
  if (N < 2 || f.size() != 1 || f[0].second != 1) throw InvalidArgument("moment: level must be prime");
  if (N % 4 != 1) throw InvalidArgument("moment: the quadratic character mod N must be even (N = 1 mod 4)");
  if (!(Y > 1.0)) throw InvalidArgument("moment: Y must exceed 1");
  if (!(c > 0.0 && c < 3.0)) throw InvalidArgument("moment: c must lie in (0, 3)");
  PipelineContext ctx;
  ctx.N = N;
  ctx.psi = arith::quadratic_character(N);
  ctx.Y = Y;
  ctx.c = c;
  return ctx;
}

double g_function(double x) {
  if (!(x >= 0.0)) throw InvalidArgument("g_function: x must be non-negative");
  double total = 0.0;
  if (x < 1.0) {
    // y = e^{-u} removes the log singularity of K_0 at the origin
    const double u_max = x > 0.0 ? -std::log(x) : 80.0;
    total += quad::adaptive(
                 [](double u) {
                   const double y = std::exp(-u);
                   return k0_squared(y) * y;
                 },
                 0.0, u_max, 1e-16, 1e-14)
                 .value;
  }
  const double a = std::max(x, 1.0);
  // K_0^2 ~ (pi / 2y) e^{-2y}; 40 units past a leaves e^{-80} relative
  total += quad::adaptive(k0_squared, a, a + 40.0, 1e-18, 1e-14).value;
  return total;
}

Complex mellin_G(Complex s) {
  if (s == 0.0) throw PoleError("mellin_G: pole at s = 0");
  if (!(s.real() > 0.0)) throw InvalidArgument("mellin_G: needs Re s > 0");
  return std::exp((s - 2.0) * std::log(2.0) + 4.0 * special::log_gamma((1.0 + s) / 2.0) -
                  special::log_gamma(1.0 + s)) /
         s;
}

Complex mellin_of_g_numeric(Complex s) {
  if (!(s.real() > 0.0)) throw InvalidArgument("mellin_of_g_numeric: needs Re s > 0");
  // (0, 1] with x = e^{-u}: g(e^{-u}) e^{-u s}
  const double u_max = 45.0 / s.real();
  const auto inner = quad::adaptive([&](double u) { return g_function(std::exp(-u)) * std::exp(-u * s); }, 0.0,
                                    u_max, 1e-14, 1e-13);
  const auto outer =
      quad::adaptive([&](double x) { return g_function(x) * cpow_real(x, s - 1.0); }, 1.0, 40.0, 1e-16, 1e-13);
  return inner.value + outer.value;
}

std::vector<double> divisor_character_sums(const DirichletCharacter& psi, Int X) {
  std::vector<double> lam(static_cast<std::size_t>(X) + 1, 0.0);
  for (Int d = 1; d <= X; ++d) {
    const double v = psi.real_value(d);
    if (v == 0.0) continue;
    for (Int m = d; m <= X; m += d) lam[static_cast<std::size_t>(m)] += v;
  }
  return lam;
}

RankinSelberg rankin_selberg_series(Complex s, const DirichletCharacter& psi, Int X) {
  if (!psi.is_real()) throw InvalidArgument("rankin_selberg_series: psi must be real");
  if (s.real() < 0.2) throw InvalidArgument("rankin_selberg_series: brute sum needs Re s >= 0.2");
  if (X < 2) throw InvalidArgument("rankin_selberg_series: X must be at least 2");
  const auto lam = divisor_character_sums(psi, X);
  Accumulator<Complex> acc;
  double block = 0.0;
  for (Int n = 1; n <= X; ++n) {
    const double l2 = lam[static_cast<std::size_t>(n)] * lam[static_cast<std::size_t>(n)];
    if (l2 == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    acc += l2 * std::exp(-(1.0 + s) * ln);
    if (2 * n > X) block += l2 * std::exp(-(1.0 + s.real()) * ln);
  }
  RankinSelberg out;
  out.brute = acc.value();
  out.X = X;
  // the last dyadic block repeats with ratio 2^{-Re s}, up to the slow growth
  // of the divisor sums; the factor 2 covers that growth
  out.tail_bound = 2.0 * block / (std::pow(2.0, s.real()) - 1.0);
  const Complex z = lfun::riemann_zeta(1.0 + s);
  const Complex L = lfun::dirichlet_l(1.0 + s, psi);
  out.closed = z * z * L * L / lfun::riemann_zeta(2.0 + 2.0 * s) * euler_product(s, psi.modulus());
  return out;
}

Complex K_function(Complex s, const PipelineContext& ctx) {
  const Complex L = lfun::dirichlet_l(1.0 + s, ctx.psi);
  return std::exp(4.0 * special::log_gamma((1.0 + s) / 2.0) - special::log_gamma(1.0 + s) -
                  s * std::log(kPi * ctx.Y)) *
         L * L / lfun::riemann_zeta(2.0 + 2.0 * s) * euler_product(s, ctx.N);
}

Complex integrand_H(Complex s, const PipelineContext& ctx) {
  if (s == 0.0) throw PoleError("integrand_H: triple pole at s = 0");
  const Complex z = lfun::riemann_zeta(1.0 + s);
  return z * z * K_function(s, ctx) / s;
}

Residue residue_at_zero(const PipelineContext& ctx) {
  const Complex L1 = lfun::dirichlet_l(Complex{1.0, 0.0}, ctx.psi);
  if (std::abs(L1) < 1e-8) throw ZeroOfLError("residue_at_zero: L(1, psi) vanishes");
  const auto K = lfun::laurent_at([&](Complex s) { return K_function(s, ctx); }, 0.0, 0, 3, 0.25, 64);
  const double g0 = special::stieltjes(0);
  const double c1 = -special::stieltjes(1);
  Residue r;
  r.K0 = K.coefficient(0);
  r.K1 = K.coefficient(1);
  r.K2 = 2.0 * K.coefficient(2);
  r.derivative_error = K.remainder_bound;
  r.value = (g0 * g0 + 2.0 * c1) * r.K0 + 2.0 * g0 * r.K1 + r.K2 / 2.0;
  return r;
}

LineIntegral shifted_contour_integral(const PipelineContext& ctx, double t_max) {
  if (!(t_max > 1.0)) throw InvalidArgument("shifted_contour_integral: t_max must exceed 1");
  // H(conj s) = conj H(s) for real psi, so the line integral is (1/pi) int_0^t_max Re H(-c + it) dt
  auto f = [&](double t) { return integrand_H(Complex{-ctx.c, t}, ctx).real(); };
  const auto near = quad::adaptive(f, 0.0, 2.0, 1e-15, 1e-13, 16, 4000);
  const auto far = quad::adaptive(f, 2.0, t_max, 1e-17, 1e-13, 16, 4000);
  LineIntegral out;
  out.t_max = t_max;
  out.value = (near.value + far.value) / kPi;
  // |H| decays like e^{-pi t / 2} along the line
  out.tail_bound = std::abs(integrand_H(Complex{-ctx.c, t_max}, ctx)) * 2.0 / (kPi * kPi) + (near.error + far.error) / kPi;
  return out;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::quadrature: return "quadrature";
    case Route::coefficient_sum: return "coefficient_sum";
    case Route::contour: return "contour";
  }
  return "?";
}

Route route_from_string(const std::string& s) {
  if (s == "quadrature") return Route::quadrature;
  if (s == "coefficient_sum" || s == "coefficients") return Route::coefficient_sum;
  if (s == "contour") return Route::contour;
  throw InvalidArgument("unknown route '" + s + "'");
}

namespace {

// Zone integral int_Y^oo int_0^1 w(y) F(E*(z) - constant term) dx dy / y^2 for
// E* = E*_{1,psi}(z, 1/2), with x by the trapezoid rule (exact for the
// band-limited integrand) and y by composite Gauss-Legendre.
struct ZoneIntegral {
  double value = 0.0;
  double coarse = 0.0;
};

template <class Fn>
ZoneIntegral zone_integral(const PipelineContext& ctx, Fn&& integrand) {
  const eis::EisensteinModel model(arith::principal_character(1), ctx.psi, 0.5);
  PrecisionBudget budget;
  budget.target_abs_err = 1e-22;
  auto run = [&](int nx, double panel, int order) {
    const auto& rule = quad::gauss_legendre<double>(order);
    // the integrand falls like e^{-4 pi y}; 4 units above Y is below e^{-50}
    const double y_end = ctx.Y + 4.0;
    Accumulator<double> acc;
    for (double lo = ctx.Y; lo < y_end - 1e-12; lo += panel) {
      const double half = panel / 2, mid = lo + half;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = mid + half * rule.nodes[i];
        const double ct = eis::constant_term(y, model).real();
        double row = 0.0;
        for (int k = 0; k < nx; ++k) {
          const double x = (k + 0.5) / nx;
          const double f = eis::eval_E_star(Complex{x, y}, model, budget).value.real() - ct;
          row += integrand(f, y);
        }
        acc += half * rule.weights[i] * row / nx / (y * y);
      }
    }
    return acc.value();
  };
  ZoneIntegral out;
  out.value = run(64, 0.125, 16);
  out.coarse = run(32, 0.25, 12);
  return out;
}

double periodint(const PipelineContext& ctx, double* err) {
  // 8 (2 pi)^{-1} sum lambda^2(n)/n g(2 pi n Y), stopped once g is negligible
  const auto lam = divisor_character_sums(ctx.psi, 64);
  Accumulator<double> acc;
  double last = 0.0;
  for (Int n = 1; n <= 64; ++n) {
    const double gx = g_function(2 * kPi * static_cast<double>(n) * ctx.Y);
    last = lam[static_cast<std::size_t>(n)] * lam[static_cast<std::size_t>(n)] / static_cast<double>(n) * gx;
    acc += last;
    if (gx < 1e-30 * g_function(2 * kPi * ctx.Y)) break;
  }
  if (err) *err = 4.0 / kPi * (std::abs(last) + 1e-13 * std::abs(acc.value()));
  return 4.0 / kPi * acc.value();
}

}  // namespace

RouteValue cuspzone_integral(const PipelineContext& ctx, Route route) {
  const auto t0 = std::chrono::steady_clock::now();
  RouteValue out;
  out.route = route;
  const double lambda1 = lfun::completed_lambda(1.0, ctx.psi).real();
  const double pre = 12.0 / (lambda1 * lambda1);
  switch (route) {
    case Route::quadrature: {
      const auto zi = zone_integral(ctx, [](double f, double y) { return y * f * f; });
      out.value = pre * zi.value;
      out.err_bound = pre * std::abs(zi.value - zi.coarse);
      break;
    }
    case Route::coefficient_sum: {
      double err = 0.0;
      out.value = pre * periodint(ctx, &err);
      out.err_bound = pre * err;
      break;
    }
    case Route::contour: {
      const double L1 = lfun::dirichlet_l(Complex{1.0, 0.0}, ctx.psi).real();
      const double c = 12.0 / (static_cast<double>(ctx.N) * kPi * L1 * L1);
      const ContourParts parts = contour_parts(ctx);
      out.value = c * parts.sum;
      out.err_bound = c * parts.tail_bound;
      break;
    }
  }
  out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CrossTerm cross_term(const PipelineContext& ctx) {
  const auto at_inf = eis::cusp_slash(ctx.psi, geom::Cusp::infinity);
  const auto at_zero = eis::cusp_slash(ctx.psi, geom::Cusp::zero);
  const double scale = at_inf.via_lambda.real();
  const double sign = static_cast<double>(at_zero.sign);
  CrossTerm out;
  // E^Y = scale * (E* - constant term) on the zone at infinity and sign times that at 0; e = sqrt(y) on both
  const auto cube = zone_integral(ctx, [&](double f, double y) { return std::pow(scale * f, 3) * std::sqrt(y); });
  const auto square = zone_integral(ctx, [&](double f, double y) { return std::pow(scale * f, 2) * y; });
  out.lhs = (1.0 + sign * sign * sign) * cube.value;
  out.zone_square = 2.0 * square.value;
  const auto grid = geom::make_grid();
  const auto full = geom::integrate(
      [&](Complex z) {
        const Complex v = eis::evaluate_routed(at_inf.model, z, ctx.Y).truncated;
        if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real())))
          throw InvalidArgument("cross_term: truncated series is not real-valued");
        return Complex{std::pow(v.real(), 4), 0.0};
      },
      ctx.N, grid);
  out.fourth = full.value.real();
  out.fourth_coarse = full.coarse.real();
  out.rhs = std::sqrt(out.zone_square * out.fourth);
  out.report = make_report("cross_term_cauchy", std::abs(out.lhs), out.rhs, 0.0, false,
                           "N=" + std::to_string(ctx.N) + " Y=" + std::to_string(ctx.Y) +
                               " ratio=" + std::to_string(out.rhs > 0 ? std::abs(out.lhs) / out.rhs : 0.0));
  out.report.pass = std::abs(out.lhs) <= out.rhs && out.zone_square > 0 && out.fourth > 0;
  return out;
}

Theorem0Diff theorem0diff_report(const std::vector<Int>& levels, double Y) {
  if (levels.size() < 2) throw InvalidArgument("theorem0diff_report: needs at least two levels");
  Theorem0Diff out;
  for (Int N : levels) {
    const PipelineContext ctx = make_context(N, Y);
    SweepRow r;
    r.N = N;
    r.Y = Y;
    r.cleaned = cuspzone_integral(ctx, Route::coefficient_sum).value;
    const double L = std::log(static_cast<double>(N));
    r.normalized = r.cleaned / (L * L / static_cast<double>(arith::level_data(N).nu));
    out.rows.push_back(r);
  }
  out.monotone = true;
  for (std::size_t i = 1; i < out.rows.size(); ++i)
    if (!(out.rows[i].normalized < out.rows[i - 1].normalized)) out.monotone = false;
  // least squares normalized ~ offset + slope / log N
  const double n = static_cast<double>(out.rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : out.rows) {
    const double x = 1.0 / std::log(static_cast<double>(r.N));
    sx += x;
    sy += r.normalized;
    sxx += x * x;
    sxy += x * r.normalized;
  }
  const double den = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / den;
  out.offset = (sy - slope * sx) / n;
  double rss = 0.0;
  for (const auto& r : out.rows) {
    const double x = 1.0 / std::log(static_cast<double>(r.N));
    rss += std::pow(r.normalized - out.offset - slope * x, 2);
  }
  out.offset_stderr = n > 2 ? std::sqrt(rss / (n - 2) * sxx / den) : 0.0;
  out.report = make_flag_report("theorem0diff_monotone_decay", out.monotone,
                                "normalized cleaned piece over the sweep; offset=" + std::to_string(out.offset));
  return out;
}

}  // namespace eisenlab::moment
