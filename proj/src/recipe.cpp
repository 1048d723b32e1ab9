#include "eisenlab/recipe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <limits>
#include <tuple>

#include "eisenlab/parallel.hpp"
#include "eisenlab/quadrature.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab::recipe {

namespace {

Complex cpow_real(double base, Complex e) { return std::exp(e * std::log(base)); }

DirichletCharacter char_power(const DirichletCharacter& chi, int k) { return k >= 0 ? chi : chi.conj(); }

// Nodes on [0, t_max] with t sinh(pi t) prod B folded in, cached per T and layout.
struct Kernel {
  std::vector<double> t;
  std::vector<double> w;  // weight times kernel value
};

const Kernel& kernel(double T, const FepsOptions& opt) {
  static std::mutex mu;
  static std::map<std::tuple<double, double, double, int>, Kernel> cache;
  const auto key = std::make_tuple(T, opt.t_max, opt.panel, opt.nodes);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Kernel k;
  const auto& rule = quad::gauss_legendre<double>(opt.nodes);
  for (double lo = 0.0; lo < opt.t_max - 1e-12; lo += opt.panel) {
    const double hi = std::min(lo + opt.panel, opt.t_max);
    const double half = (hi - lo) / 2, mid = (hi + lo) / 2;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + half * rule.nodes[i];
      k.t.push_back(t);
      k.w.push_back(half * rule.weights[i] * special::dbw_integrand(t, T));
    }
  }
  return cache.emplace(key, std::move(k)).first->second;
}

}  // namespace

ChiKind kind_of(const DirichletCharacter& chi) { return chi.is_real() ? ChiKind::quadratic : ChiKind::complex; }

std::string to_string(ChiKind k) { return k == ChiKind::quadratic ? "quadratic" : "complex"; }

std::array<Complex, 4> alpha0(double T) { return {0.0, 0.0, Complex{0.0, 2 * T}, Complex{0.0, -2 * T}}; }

Complex gamma_ratio(Complex a, double t) {
  const Complex it{0.0, t};
  return std::exp(special::log_gamma((0.5 - a + it) / 2.0) + special::log_gamma((0.5 - a - it) / 2.0) -
                  special::log_gamma((0.5 + a + it) / 2.0) - special::log_gamma((0.5 + a - it) / 2.0));
}

Complex h_weight(const ShiftState& s, double t) {
  Complex h = 1.0;
  for (int j = 0; j < 4; ++j)
    if (s.eps[static_cast<std::size_t>(j)] < 0 && s.alpha[static_cast<std::size_t>(j)] != 0.0)
      h *= gamma_ratio(s.alpha[static_cast<std::size_t>(j)], t);
  return h;
}

Complex F_eps(const ShiftState& s, const FepsOptions& opt) {
  const Kernel& k = kernel(s.T, opt);
  Accumulator<Complex> acc;
  for (std::size_t i = 0; i < k.t.size(); ++i) acc += k.w[i] * h_weight(s, k.t[i]);
  // even integrand: twice the half line
  return 2.0 * acc.value() / (kPi * kPi);
}

DiagonalSum quadruple_diagonal_sum(const ShiftState& s, const DirichletCharacter& chi, Int X) {
  if (X < 1000) throw InvalidArgument("quadruple_diagonal_sum: X must be at least 1000");
  std::array<Complex, 4> a;
  for (std::size_t j = 0; j < 4; ++j) {
    a[j] = 0.5 + static_cast<double>(s.eps[j]) * s.alpha[j];
    if (a[j].real() < 0.55) throw InvalidArgument("quadruple_diagonal_sum: shift exponents need real part >= 0.55");
  }
  const DirichletCharacter f = char_power(chi, s.eps[2]);
  const DirichletCharacter g = char_power(chi, -s.eps[3]);
  const std::size_t n = static_cast<std::size_t>(X) + 1;
  std::array<std::vector<Complex>, 4> pw;
  for (std::size_t j = 0; j < 4; ++j) {
    pw[j].assign(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) pw[j][m] = std::exp(-a[j] * std::log(static_cast<double>(m)));
  }
  for (std::size_t m = 1; m < n; ++m) {
    pw[2][m] *= f(static_cast<Int>(m));
    pw[3][m] *= g(static_cast<Int>(m));
  }
  std::vector<Complex> A(n, 0.0), B(n, 0.0);
  for (std::size_t n1 = 1; n1 < n; ++n1)
    for (std::size_t n2 = 1; n1 * n2 < n; ++n2) {
      A[n1 * n2] += pw[0][n1] * pw[1][n2];
      B[n1 * n2] += pw[2][n1] * pw[3][n2];
    }
  Accumulator<Complex> acc;
  double abs_all = 0.0, abs_half = 0.0;
  for (std::size_t m = 1; m < n; ++m) {
    const Complex term = A[m] * B[m];
    acc += term;
    abs_all += std::abs(term);
    if (2 * m <= static_cast<std::size_t>(X)) abs_half = abs_all;
  }
  // |terms| decay like m^{-1-delta} up to divisor factors; extrapolate the
  // absolute tail from the last dyadic block and double it.
  const double delta = std::min(a[0].real(), a[1].real()) + std::min(a[2].real(), a[3].real()) - 1.0;
  DiagonalSum out;
  out.value = acc.value();
  out.X = X;
  out.tail_bound = 2.0 * (abs_all - abs_half) / (std::pow(2.0, delta) - 1.0);
  return out;
}

Complex ramanujan_ratio(const ShiftState& s, const DirichletCharacter& chi) {
  std::array<Complex, 4> a;
  for (std::size_t j = 0; j < 4; ++j) a[j] = 0.5 + static_cast<double>(s.eps[j]) * s.alpha[j];
  const DirichletCharacter f = char_power(chi, s.eps[2]);
  const DirichletCharacter g = char_power(chi, -s.eps[3]);
  const DirichletCharacter fg = f * g;
  return lfun::dirichlet_l(a[0] + a[2], f) * lfun::dirichlet_l(a[1] + a[2], f) * lfun::dirichlet_l(a[0] + a[3], g) *
         lfun::dirichlet_l(a[1] + a[3], g) / lfun::dirichlet_l(a[0] + a[1] + a[2] + a[3], fg);
}

int case_label(int eps3, int eps4, ChiKind kind, double T) {
  if (eps3 == eps4) return 4;
  if (kind == ChiKind::complex) return 1;
  return T != 0.0 ? 2 : 3;
}

RecipeTerm S_term(const ShiftState& s, const DirichletCharacter& chi, const FepsOptions& opt) {
  const double N = static_cast<double>(chi.modulus());
  const auto& e = s.eps;
  const auto& al = s.alpha;
  auto named = [](const char* what, auto&& fn) {
    try {
      return fn();
    } catch (const PoleError&) {
      throw PoleError(std::string("S_term: pole in ") + what);
    }
  };
  const Complex L1 = lfun::dirichlet_l(Complex{1.0, 2 * s.T}, chi);
  const double L4 = std::pow(std::abs(L1), 4);
  const int tau_exp = e[2] - e[3];
  const Complex tau_ratio = std::pow(arith::gauss_sum(chi) / std::sqrt(N), tau_exp);
  Complex pi_pow = 0.0;
  for (std::size_t j = 0; j < 4; ++j) pi_pow += static_cast<double>(1 - e[j]) * al[j];
  const Complex n_exp = (e[0] - 1) / 2.0 * al[0] + (e[1] - 1) / 2.0 * al[1] + static_cast<double>(e[2] - 1) * al[2] +
                        static_cast<double>(e[3] - 1) * al[3];
  const DirichletCharacter fg = char_power(chi, e[2]) * char_power(chi, -e[3]);
  const Complex zeta = named("zeta(1 + e1 a1 + e2 a2)", [&] {
    return lfun::riemann_zeta(1.0 + static_cast<double>(e[0]) * al[0] + static_cast<double>(e[1]) * al[1]);
  });
  const Complex Lfg = named("L(1 + e3 a3 + e4 a4)", [&] {
    return lfun::dirichlet_l(1.0 + static_cast<double>(e[2]) * al[2] + static_cast<double>(e[3]) * al[3], fg);
  });
  const Complex ratio = named("the diagonal L-ratio", [&] { return ramanujan_ratio(s, chi); });
  RecipeTerm out;
  out.state = s;
  out.case_label = case_label(e[2], e[3], kind_of(chi), s.T);
  out.value = F_eps(s, opt) / (8.0 * N * L4) * tau_ratio * cpow_real(kPi, pi_pow) * cpow_real(N, n_exp) * zeta * Lfg *
              ratio;
  return out;
}

namespace {

// Sum over eps1, eps2 of S at alpha = (0, eta', 2iT, -2iT + eta).
Complex eps12_sum(int e3, int e4, Complex eta, Complex etap, double T, const DirichletCharacter& chi,
                  const FepsOptions& opt) {
  Complex sum = 0.0;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      ShiftState s;
      s.eps = {e1, e2, e3, e4};
      s.alpha = {0.0, etap, Complex{0.0, 2 * T}, Complex{0.0, -2 * T} + eta};
      s.T = T;
      s.N = chi.modulus();
      s.kind = kind_of(chi);
      sum += S_term(s, chi, opt).value;
    }
  return sum;
}

// Mean of f over the circle |eta'| = r, offset by half a step so no node is real.
template <class Fn>
Complex circle_mean(Fn&& f, double r, int nodes) {
  Complex acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double th = 2 * kPi * (k + 0.5) / nodes;
    acc += f(r * std::exp(Complex{0.0, th}));
  }
  return acc / static_cast<double>(nodes);
}

}  // namespace

LimitPath limit_path_evaluate(Int N, double T, const DirichletCharacter& chi, const LimitOptions& opt) {
  if (chi.modulus() != N) throw InvalidArgument("limit_path_evaluate: character modulus differs from N");
  if (!(opt.eta > 0 && opt.eta_prime > 0 && opt.eta_prime < opt.eta))
    throw InvalidArgument("limit_path_evaluate: need 0 < eta' < eta");
  const ChiKind kind = kind_of(chi);
  const std::array<std::pair<int, int>, 4> order{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  LimitPath out;
  out.pairs.resize(4);
  parallel_for(4, [&](std::size_t i) {
    const auto [e3, e4] = order[i];
    PairResult& p = out.pairs[i];
    p.eps3 = e3;
    p.eps4 = e4;
    p.case_label = case_label(e3, e4, kind, T);
    const Complex eta{opt.eta, 0.0};
    p.pole_residual = circle_mean([&](Complex ep) { return ep * eps12_sum(e3, e4, eta, ep, T, chi, opt.feps); },
                                  opt.eta_prime, opt.eta_prime_nodes);
    p.richardson = 2.0 * eps12_sum(e3, e4, eta, opt.eta_prime / 2, T, chi, opt.feps) -
                   eps12_sum(e3, e4, eta, opt.eta_prime, T, chi, opt.feps);
    auto R = [&](Complex et) {
      return circle_mean([&](Complex ep) { return eps12_sum(e3, e4, et, ep, T, chi, opt.feps); }, opt.eta_prime,
                         opt.eta_prime_nodes);
    };
    if (std::abs(p.pole_residual) > 1e-6 * (1.0 + std::abs(p.richardson)))
      throw PoleError("limit_path_evaluate: eta' pole failed to cancel for (" + std::to_string(e3) + "," +
                      std::to_string(e4) + ")");
    p.contour_limit = R(eta);
    const int pole = (p.case_label == 3 || p.case_label == 4) ? 1 : 0;
    p.R = lfun::laurent_at(R, 0.0, pole, pole + 2, opt.eta, opt.eta_nodes);
  });
  for (const auto& p : out.pairs) {
    out.total += p.R.coefficient(0);
    out.pole_sum += p.R.coefficient(-1);
  }
  return out;
}

Complex R_display(int eps3, int eps4, Complex eta, double T, const DirichletCharacter& chi, const FepsOptions& opt) {
  const double N = static_cast<double>(chi.modulus());
  const double logN = std::log(N);
  const DirichletCharacter f = char_power(chi, eps3);
  const DirichletCharacter g = char_power(chi, -eps4);
  const DirichletCharacter fg = f * g;
  const Complex two_iT{0.0, 2 * T};
  const double d = eps3 - eps4;
  const Complex L1 = lfun::dirichlet_l(Complex{1.0, 2 * T}, chi);
  const Complex pre = cpow_real(kPi, -d * two_iT) * cpow_real(N, d * two_iT) / (8.0 * N * std::pow(std::abs(L1), 4)) *
                      std::pow(arith::gauss_sum(chi) / std::sqrt(N), eps3 - eps4);
  const Complex shift = d * two_iT + static_cast<double>(eps4) * eta;
  const Complex Lf = lfun::dirichlet_l(1.0 + static_cast<double>(eps3) * two_iT, f);
  const Complex Lg = lfun::dirichlet_l(1.0 + static_cast<double>(eps4) * (eta - two_iT), g);
  ShiftState s;
  s.eps = {1, 1, eps3, eps4};
  s.alpha = {0.0, 0.0, two_iT, eta - two_iT};
  s.T = T;
  s.N = chi.modulus();
  const Complex H = F_eps(s, opt);
  return pre * lfun::dirichlet_l(1.0 + shift, fg) * cpow_real(kPi, (1.0 - eps4) * eta) *
         cpow_real(N, (eps4 - 1.0) * eta) * Lf * Lf * Lg * Lg / lfun::dirichlet_l(2.0 + shift, fg) * (-2.0 * H * logN);
}

double main_prediction(Int N, double T, ChiKind kind) {
  if (N < 2) throw InvalidArgument("main_prediction: N must be at least 2");
  const double nu = static_cast<double>(arith::level_data(N).nu);
  const double L = std::log(static_cast<double>(N));
  const double delta = (kind == ChiKind::quadratic && T == 0.0) ? 1.0 : 0.0;
  return 24.0 / kPi * L * L / nu * (1.0 + delta);
}

I2Estimate i2_estimate(Int N, double T, const DirichletCharacter& psi) {
  if (N < 2) throw InvalidArgument("i2_estimate: N must be at least 2");
  const double nu = static_cast<double>(arith::level_data(N).nu);
  const double L = std::log(static_cast<double>(N));
  const Complex s{1.0, 2 * T};
  I2Estimate out;
  out.main = 24.0 / kPi * L * L / nu;
  out.first_log_derivative = lfun::log_derivative(s, psi, 1).value;
  out.second_log_derivative = lfun::log_derivative(s, psi, 2).value;
  const double loglog = L > 1.0 ? std::log(L) : 0.0;
  out.correction_band = (std::abs(out.second_log_derivative) + L * loglog * std::abs(out.first_log_derivative)) / nu;
  return out;
}

std::vector<ThresholdRow> threshold_scan(Int N, const std::vector<double>& schedule) {
  if (N < 2) throw InvalidArgument("threshold_scan: N must be at least 2");
  const double L = std::log(static_cast<double>(N));
  std::vector<ThresholdRow> rows;
  rows.reserve(schedule.size());
  for (double T : schedule) {
    ThresholdRow r;
    r.T = T;
    r.x = 4 * T * L;
    r.small_x = 2 * L;
    // sin(x)/(2T) = 2 log N * sinc(x); the series keeps small T exact
    if (std::abs(r.x) < 1e-4)
      r.bracket = 2 * L * (1 - r.x * r.x / 6 + std::pow(r.x, 4) / 120);
    else
      r.bracket = std::sin(r.x) / (2 * T);
    r.envelope = T == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / (2 * std::abs(T));
    rows.push_back(r);
  }
  return rows;
}

std::vector<double> auto_schedule(Int N) {
  const double L = std::log(static_cast<double>(N));
  std::vector<double> ts;
  for (int k = 0; k <= 40; ++k) ts.push_back(20.0 / L * k / 40.0);
  return ts;
}

MomentReport corollary_consistency(Int N, double T, ChiKind kind) {
  if (N < 3) throw InvalidArgument("corollary_consistency: N must be at least 3");
  const double L = std::log(static_cast<double>(N));
  const double nu = static_cast<double>(arith::level_data(N).nu);
  const double volume = kPi / 3 * nu;
  const double i2 = 24.0 / kPi * L * L / nu;
  const double ratio = (main_prediction(N, T, kind) + i2) / (4 * L * L / volume);
  const double expected = (kind == ChiKind::quadratic && T == 0.0) ? 6.0 : 4.0;
  return make_report("corollary_consistency", ratio, expected, 1e-12, false,
                     "N=" + std::to_string(N) + " kind=" + to_string(kind));
}

}  // namespace eisenlab::recipe
