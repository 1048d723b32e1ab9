#include "eisenlab/eisenstein.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "eisenlab/lfunctions.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab::eis {

namespace {

Complex cpow_real(double base, Complex e) { return std::exp(e * std::log(base)); }

Complex unit_exp(double turns) {
  const double th = 2.0 * kPi * (turns - std::floor(turns));
  return {std::cos(th), std::sin(th)};
}

// K_nu(x); real orders go through Boost.
Complex bessel(Complex nu, double x) {
  if (nu.imag() == 0.0) return boost::math::cyl_bessel_k(std::abs(nu.real()), x);
  return special::bessel_k_complex(nu, x);
}

// Upper estimate for |K_nu(x)| with Re nu = mu, from the first asymptotic correction.
double bessel_envelope(double mu, double x) {
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x + std::abs(4.0 * mu * mu - 1.0) / (8.0 * x));
}

}  // namespace

EisensteinModel::EisensteinModel(DirichletCharacter chi1, DirichletCharacter chi2, Complex s)
    : chi1_(std::move(chi1)), chi2_(std::move(chi2)), s_(s), cache_(std::make_shared<Cache>()) {
  if (arith::gcd(chi1_.modulus(), chi2_.modulus()) != 1)
    throw InvalidArgument("EisensteinModel: moduli must be coprime");
  if (!chi1_.is_primitive() || !chi2_.is_primitive())
    throw InvalidArgument("EisensteinModel: characters must be primitive");
  if (chi1_.modulus() == 1 && chi2_.modulus() == 1 && std::abs(s_ - 0.5) < 1e-12)
    throw PoleError("EisensteinModel: the level-one series has a pole at s = 1/2");
  const Int N = chi1_.modulus() * chi2_.modulus();
  psi_ = arith::induce(chi1_, N) * arith::induce(chi2_, N);
  // (c, d) -> (-c, -d) multiplies every lattice term by psi(-1)
  if (!psi_.is_even()) throw InvalidArgument("EisensteinModel: chi1 chi2 is odd, so the series vanishes identically");
  cache_->values.push_back(0.0);
}

EisensteinModel EisensteinModel::with_scalar(Complex scalar, Completion mode) const {
  EisensteinModel m = *this;
  m.scalar_ = scalar;
  m.completion_ = mode;
  return m;
}

Complex EisensteinModel::lambda(Int n) const {
  if (n == 0) throw InvalidArgument("lambda: n must be nonzero");
  const Int m = std::abs(n);
  Complex v;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& vals = cache_->values;
    while (static_cast<Int>(vals.size()) <= m) {
      const Int k = static_cast<Int>(vals.size());
      Accumulator<Complex> acc;
      for (Int a = 1; a * a <= k; ++a) {
        if (k % a) continue;
        const Int b = k / a;
        acc += chi1_(a) * std::conj(chi2_(b)) * cpow_real(static_cast<double>(b) / static_cast<double>(a), s_ - 0.5);
        if (a != b)
          acc += chi1_(b) * std::conj(chi2_(a)) * cpow_real(static_cast<double>(a) / static_cast<double>(b), s_ - 0.5);
      }
      vals.push_back(acc.value());
    }
    v = vals[static_cast<std::size_t>(m)];
  }
  return n < 0 ? chi2_(-1) * v : v;
}

Complex lambda_coeff(Int n, const EisensteinModel& model) { return model.lambda(n); }

Complex theta_factor(const DirichletCharacter& chi, Complex s) {
  const double q = static_cast<double>(chi.modulus());
  return std::exp(s * std::log(q / kPi) + special::log_gamma(s)) * lfun::dirichlet_l(2.0 * s, chi) /
         arith::gauss_sum(chi);
}

Complex constant_term(double y, const EisensteinModel& m) {
  if (!(y > 0.0)) throw InvalidArgument("constant_term: y must be positive");
  Complex v = 0.0;
  const Complex s = m.s();
  if (m.q1() == 1) v += theta_factor(m.chi2(), s) * cpow_real(static_cast<double>(m.q2()) * y, s);
  if (m.q2() == 1) {
    // theta_{1, conj chi1}(1 - s) = Lambda(2s - 1, chi1) / sqrt(q1) for even chi1, which stays finite where Gamma(1 - s) does not.
    const Complex th = m.chi1().is_even()
                           ? lfun::completed_lambda(2.0 * s - 1.0, m.chi1()) / std::sqrt(static_cast<double>(m.q1()))
                           : theta_factor(m.chi1().conj(), 1.0 - s);
    v += th * cpow_real(static_cast<double>(m.q1()) * y, 1.0 - s);
  }
  return m.scalar() * v;
}

Evaluation eval_E_star(Complex z, const EisensteinModel& m, const PrecisionBudget& budget, double y_floor) {
  budget.validate();
  const double x = z.real(), y = z.imag();
  if (!(y >= y_floor)) throw EvaluationFloorError("eval_E_star: Im z below the evaluation floor");
  const Complex nu = m.s() - 0.5;
  const double mu = nu.real();
  const double growth = 1.0 + std::abs(mu);
  const double scale = std::max(std::abs(m.scalar()), 1e-300);
  const double target = budget.target_abs_err / scale;
  const double rho = std::exp(-2.0 * kPi * y);
  // Tail of 2 sqrt(y) sum_{|n| > n0} with |lambda(n)| <= 2 sqrt(n) n^{|mu|}.
  auto tail = [&](Int n0) {
    const double n = static_cast<double>(n0 + 1);
    const double term = 4.0 * std::sqrt(y) * 2.0 * std::pow(n, 0.5 + growth - 1.0) * bessel_envelope(mu, 2.0 * kPi * n * y);
    const double ratio = rho * std::pow(1.0 + 1.0 / n, 0.5 + growth);
    return ratio < 1.0 ? term / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  };
  const Int limit = std::min<Int>(budget.max_terms, kMaxFourierTerms);
  Int n_max = 1;
  while (tail(n_max) > target / 2) {
    if (++n_max > limit) throw BudgetExceeded("eval_E_star: Fourier tail needs more than the term budget");
  }
  Accumulator<Complex> acc(budget.accumulator_mode);
  for (Int n = 1; n <= n_max; ++n) {
    const Complex ex = unit_exp(static_cast<double>(n) * x);
    const Complex pair = m.lambda(n) * ex + m.lambda(-n) * std::conj(ex);
    acc += pair * bessel(nu, 2.0 * kPi * static_cast<double>(n) * y);
  }
  Evaluation e;
  e.value = constant_term(y, m) + m.scalar() * 2.0 * std::sqrt(y) * acc.value();
  e.tail_bound = scale * tail(n_max);
  e.n_max = n_max;
  return e;
}

namespace {

// Sum over d in Z (d != 0 when skip_zero) of chi(d) |w + d|^{-2s}; the two
// tails beyond |d| = D are summed per residue class by Euler-Maclaurin.
Complex row_sum(Complex w, const DirichletCharacter& chi, Complex s, bool skip_zero) {
  const Int q = chi.modulus();
  const double reach = 2.0 * std::abs(w) + 24.0 * static_cast<double>(q);
  const Int K = static_cast<Int>(std::ceil(reach / static_cast<double>(q)));
  const Int D = K * q;
  Accumulator<Complex> acc;
  for (Int d = -D; d <= D; ++d) {
    if (skip_zero && d == 0) continue;
    const Complex c = chi(d);
    if (c == 0.0) continue;
    acc += c * std::exp(-s * std::log(std::norm(w + static_cast<double>(d))));
  }
  const double v = w.imag();
  const double qd = static_cast<double>(q);
  for (int side : {1, -1}) {
    const double u = side * w.real();
    for (Int r = 1; r <= q; ++r) {
      const Complex c = chi(side * r);
      if (c == 0.0) continue;
      // first term beyond D in this class: t0 = r + q K
      const double A = u + static_cast<double>(r) + qd * static_cast<double>(K);
      // integral over k >= K of ((u + r + q k)^2 + v^2)^{-s}
      Complex integral = 0.0, binom = 1.0;
      double vp = 1.0;  // v^{2j}
      for (int j = 0; j < 80; ++j) {
        const Complex term = binom * vp * std::exp((1.0 - 2.0 * s - 2.0 * j) * std::log(A)) / (2.0 * s + 2.0 * j - 1.0);
        integral += term;
        if (std::abs(term) < 1e-18 * std::abs(integral)) break;
        binom *= (-s - static_cast<double>(j)) / static_cast<double>(j + 1);
        vp *= v * v;
      }
      integral /= qd;
      // derivatives in k of (a + iv)^{-s} (a - iv)^{-s} at a = A
      const Complex zp{A, v}, zm{A, -v};
      auto falling = [&](int j, Complex zz) {
        Complex f = std::exp(-s * std::log(zz));
        for (int i = 0; i < j; ++i) f *= (-s - static_cast<double>(i)) / zz;
        return f;
      };
      auto deriv = [&](int order) {
        Complex tot = 0.0;
        double binc = 1.0;
        for (int j = 0; j <= order; ++j) {
          tot += binc * falling(j, zp) * falling(order - j, zm);
          binc = binc * (order - j) / (j + 1);
        }
        return tot * std::pow(qd, order);
      };
      const Complex em = integral + deriv(0) / 2.0 - deriv(1) / 12.0 + deriv(3) / 720.0 - deriv(5) / 30240.0;
      acc += c * em;
    }
  }
  return acc.value();
}

}  // namespace

OracleResult direct_series_oracle(Complex z, const EisensteinModel& m, double X) {
  if (m.s().real() < 1.5) throw InvalidArgument("direct_series_oracle: needs Re s >= 1.5");
  if (X < 10.0) throw InvalidArgument("direct_series_oracle: X must be at least 10");
  if (!(z.imag() > 0.0)) throw InvalidArgument("direct_series_oracle: point must lie in the upper half plane");
  const Complex s = m.s();
  const double y = z.imag();
  const double q2 = static_cast<double>(m.q2());
  const Int C = static_cast<Int>(std::floor(X));
  Accumulator<Complex> acc;
  for (Int c = -C; c <= C; ++c) {
    const Complex c1 = m.chi1()(c);
    if (c1 == 0.0) continue;
    acc += c1 * row_sum(static_cast<double>(c) * q2 * z, m.chi2(), s, c == 0);
  }
  // Rows beyond X: for trivial chi2 each row is its integral up to e^{-2 pi |c| y}.
  const Complex row_integral = std::sqrt(kPi) * special::gamma(s - 0.5) / special::gamma(s);
  if (m.q2() == 1) {
    Complex partial = 0.0;
    for (Int c = 1; c <= C; ++c) partial += m.chi1()(c) * cpow_real(static_cast<double>(c), 1.0 - 2.0 * s);
    const Complex full = lfun::dirichlet_l(2.0 * s - 1.0, m.chi1());
    acc += (1.0 + m.chi1()(-1)) * (full - partial) * row_integral * cpow_real(y, 1.0 - 2.0 * s);
  }
  OracleResult r;
  r.lattice = acc.value() * cpow_real(y, s);
  r.completion = special::gamma(s) * cpow_real(q2, 2.0 * s) / (2.0 * cpow_real(kPi, s) * arith::gauss_sum(m.chi2()));
  r.value = m.scalar() * r.completion * r.lattice;
  // Neglected Poisson modes of the rows |c| > X.
  const double sigma = s.real();
  double tail = 0.0;
  for (Int c = C + 1; c <= C + 200; ++c) {
    const double V = static_cast<double>(c) * q2 * y;
    const double xi = 1.0 / q2;
    const double fh = 2.0 * std::pow(kPi, sigma) * std::pow(xi, sigma - 0.5) * std::pow(V, 0.5 - sigma) *
                      bessel_envelope(sigma - 0.5, 2.0 * kPi * xi * V) / std::abs(special::gamma(s));
    const double row = 2.0 * 2.0 * fh / (1.0 - std::exp(-2.0 * kPi * y));
    tail += row;
    if (row < 1e-30 * tail) break;
  }
  r.tail_bound = std::abs(m.scalar() * r.completion) * std::pow(y, sigma) * tail;
  return r;
}

EisensteinModel newform_normalize(const EisensteinModel& m) {
  const Complex s = m.s();
  const Complex scalar = arith::gauss_sum(m.chi2()) * cpow_real(static_cast<double>(m.q2()), s) /
                         lfun::completed_lambda(2.0 * s, m.psi());
  return m.with_scalar(scalar, Completion::newform_normalized);
}

}  // namespace eisenlab::eis

namespace eisenlab::eis {

namespace {

bool fricke_symmetric(const EisensteinModel& m) {
  return m.q1() == 1 && m.psi().is_real() && m.psi().is_even() && std::abs(m.s() - 0.5) < 1e-12;
}

Complex unit_part(Complex v) {
  const double a = std::abs(v);
  return a > 0.0 ? v / a : Complex{1.0, 0.0};
}

}  // namespace

RoutedValue evaluate_routed(const EisensteinModel& m, Complex z, double Y, const PrecisionBudget& budget) {
  RoutedValue out;
  out.route = geom::route(z, m.level(), fricke_symmetric(m));
  const Complex w = out.route.w;
  if (w.imag() < kDefaultYFloor)
    throw EvaluationFloorError("evaluate_routed: no image of the point reaches the evaluation floor");
  out.value = eval_E_star(w, m, budget).value;
  out.in_zone = w.imag() > Y;
  out.truncated = out.in_zone ? out.value - constant_term(w.imag(), m) : out.value;
  return out;
}

Complex truncate_at(const EisensteinModel& m, double Y, Complex z, const PrecisionBudget& budget) {
  if (!(Y > 1.0)) throw InvalidArgument("truncate_at: Y must exceed 1");
  const RoutedValue rv = evaluate_routed(m, z, Y, budget);
  if (z.imag() < kDefaultYFloor) return rv.in_zone ? rv.truncated : rv.value;
  const Complex direct = eval_E_star(z, m, budget).value;
  if (!rv.in_zone) return direct;
  // E(z) and E(w) differ by a unit factor from the automorphy of E.
  return unit_part(direct / rv.value) * rv.truncated;
}

CuspSlash cusp_slash(const DirichletCharacter& chi, geom::Cusp cusp) {
  const Int N = chi.modulus();
  if (N < 2 || arith::factorize(N).size() != 1 || arith::factorize(N)[0].second != 1)
    throw InvalidArgument("cusp_slash: only prime levels are supported");
  if (!chi.is_real() || chi.is_principal() || !chi.is_even())
    throw InvalidArgument("cusp_slash: needs an even quadratic character");
  const arith::Decomposition dec = arith::decompose(chi, N);
  const EisensteinModel base(dec.chi1, dec.psi, 0.5);
  CuspSlash out{base, 0.0, 0.0, 1};
  out.via_lambda = 1.0 / lfun::completed_lambda(1.0, dec.psi);
  out.via_theta = std::pow(static_cast<double>(N), -0.5) / theta_factor(dec.psi, 0.5);
  if (cusp == geom::Cusp::zero) {
    const Complex z0{0.1, 0.7};
    const Complex fz = -1.0 / (static_cast<double>(N) * z0);
    const Complex ratio = eval_E_star(fz, base).value / eval_E_star(z0, base).value;
    out.sign = ratio.real() >= 0.0 ? 1 : -1;
  }
  out.model = base.with_scalar(static_cast<double>(out.sign) * out.via_lambda, Completion::scaled);
  return out;
}

}  // namespace eisenlab::eis
