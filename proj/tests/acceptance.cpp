// One line per acceptance criterion; exit status 0 iff criteria 1 to 11 pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/eisenstein.hpp"
#include "eisenlab/lfunctions.hpp"
#include "eisenlab/moment.hpp"
#include "eisenlab/recipe.hpp"
#include "eisenlab/special_functions.hpp"

using namespace eisenlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

Verdict c1_dbw() {
  Verdict v;
  const double exact = 8 * std::pow(kPi, 3);
  double worst = 0, slowest = 0;
  for (double T : {0.0, 0.1, 0.5, 1.0}) {
    const auto t0 = Clock::now();
    const double val = special::dbw_integral(T).value;
    slowest = std::max(slowest, seconds_since(t0));
    worst = std::max(worst, std::abs(val - exact));
  }
  v.detail << "max abs err " << worst << ", slowest run " << slowest << " s";
  v.require(worst <= 1e-7, "abs err");
  v.require(slowest < 1.0, "time");
  return v;
}

Verdict c2_gauss() {
  Verdict v;
  const auto t0 = Clock::now();
  double worst = 0;
  int count = 0;
  for (arith::Int q = 1; q <= 200; ++q)
    for (const auto& chi : arith::enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      ++count;
      worst = std::max(worst, std::abs(std::norm(arith::gauss_sum(chi)) - static_cast<double>(q)));
    }
  const double dt = seconds_since(t0);
  v.detail << count << " primitive characters, max err " << worst << ", " << dt << " s";
  v.require(worst <= 1e-9, "err");
  v.require(dt < 5.0, "time");
  return v;
}

Verdict c3_eisenstein() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.4, 1.6);
  std::uniform_real_distribution<double> ut(-3.0, 3.0);
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"1:0", "5:quad"}, {"5:quad", "1:0"}, {"1:0", "13:2"}, {"13:quad", "1:0"}};
  double worst = 0;
  int points = 0;
  for (const auto& [a, b] : pairs) {
    for (int k = 0; k < 5; ++k) {
      const Complex s{2.0, ut(rng)};
      const eis::EisensteinModel m(arith::character_from_label(a), arith::character_from_label(b), s);
      const Complex z{ux(rng), uy(rng)};
      const Complex four = eis::eval_E_star(z, m).value;
      const Complex lat = eis::direct_series_oracle(z, m, 60).value;
      worst = std::max(worst, std::abs(four - lat) / std::abs(lat));
      ++points;
    }
  }
  const double dt = seconds_since(t0);
  v.detail << points << " points, max rel err " << worst << ", " << dt << " s";
  v.require(worst <= 1e-8, "rel err");
  v.require(dt < 30.0, "time");
  return v;
}

Verdict c4_ramanujan() {
  Verdict v;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> re(0.1, 0.5), im(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  const std::vector<std::string> labels{"1:0", "5:quad", "7:1"};
  double worst_ratio = 0;
  for (int k = 0; k < 10; ++k) {
    const auto chi = arith::character_from_label(labels[static_cast<std::size_t>(k) % labels.size()]);
    recipe::ShiftState s;
    for (std::size_t j = 0; j < 4; ++j) {
      s.eps[j] = coin(rng) ? 1 : -1;
      s.alpha[j] = static_cast<double>(s.eps[j]) * Complex{re(rng), im(rng)};
    }
    s.N = chi.modulus();
    const auto brute = recipe::quadruple_diagonal_sum(s, chi, 100000);
    const double resid = std::abs(brute.value - recipe::ramanujan_ratio(s, chi));
    worst_ratio = std::max(worst_ratio, resid / brute.tail_bound);
  }
  const double dt = seconds_since(t0);
  v.detail << "10 states, max residual / tail bound " << worst_ratio << ", " << dt << " s";
  v.require(worst_ratio <= 1.0, "residual");
  v.require(dt < 60.0, "time");
  return v;
}

Verdict c5_kuznetsov() {
  Verdict v;
  double worst = 0;
  for (double T : {0.0, 0.3, 1.0}) {
    recipe::ShiftState s;
    s.eps = {1, 1, -1, -1};
    s.alpha = recipe::alpha0(T);
    s.T = T;
    worst = std::max(worst, std::abs(recipe::F_eps(s) - 8 * kPi));
  }
  double prev = 1e300;
  bool monotone = true;
  v.detail << "diagonal max abs err " << worst << "; off-diagonal |F - 8 pi|:";
  for (double T : {0.2, 0.1, 0.05}) {
    recipe::ShiftState s;
    s.eps = {1, 1, 1, -1};
    s.alpha = recipe::alpha0(T);
    s.T = T;
    const double d = std::abs(recipe::F_eps(s) - 8 * kPi);
    v.detail << " " << d;
    monotone = monotone && d < prev;
    prev = d;
  }
  v.require(worst <= 1e-6, "diagonal");
  v.require(monotone, "monotone");
  return v;
}

Verdict c6_mellin() {
  Verdict v;
  double worst = 0;
  for (Complex s : {Complex{1, 0}, Complex{2, 0}, Complex{1, 1}})
    worst = std::max(worst, std::abs(moment::mellin_of_g_numeric(s) - moment::mellin_G(s)));
  const double g1 = std::abs(moment::mellin_G(1.0) - 0.5);
  const double s = 1e-10;
  const double lim = std::abs(s * moment::mellin_G(s) - kPi * kPi / 4);
  v.detail << "max abs err " << worst << ", |G(1) - 1/2| " << g1 << ", |s G(s) - pi^2/4| " << lim;
  v.require(worst <= 1e-8, "pair");
  v.require(g1 <= 1e-8, "G(1)");
  v.require(lim <= 1e-8, "limit");
  return v;
}

Verdict c7_residue() {
  Verdict v;
  double worst = 0;
  for (arith::Int N : {5, 13})
    for (double Y : {2.0, 8.0}) {
      const auto ctx = moment::make_context(N, Y);
      const Complex a = moment::residue_at_zero(ctx).value;
      const auto L = lfun::laurent_at([&](Complex z) { return moment::integrand_H(z, ctx); }, 0.0, 3, 3, 0.25, 64);
      worst = std::max(worst, std::abs(a - L.coefficient(-1)) / std::abs(a));
    }
  v.detail << "max rel err " << worst;
  v.require(worst <= 1e-6, "rel err");
  return v;
}

Verdict c8_routes() {
  Verdict v;
  const auto t0 = Clock::now();
  for (const auto& [N, tol] : std::vector<std::pair<arith::Int, double>>{{5, 1e-6}, {13, 1e-5}}) {
    const auto ctx = moment::make_context(N, 2.0);
    const double q = moment::cuspzone_integral(ctx, moment::Route::quadrature).value;
    const double c = moment::cuspzone_integral(ctx, moment::Route::coefficient_sum).value;
    const double k = moment::cuspzone_integral(ctx, moment::Route::contour).value;
    const double rel = std::max({std::abs(q - c), std::abs(k - c), std::abs(q - k)}) / std::abs(c);
    v.detail << "N=" << N << " max rel spread " << rel << "; ";
    v.require(rel <= tol, "N=" + std::to_string(N));
  }
  const double dt = seconds_since(t0);
  v.detail << dt << " s";
  v.require(dt < 120.0, "time");
  return v;
}

Verdict c9_corollary() {
  Verdict v;
  const auto a = recipe::corollary_consistency(101, 0.0, recipe::ChiKind::quadratic);
  const auto b = recipe::corollary_consistency(101, 1.0, recipe::ChiKind::complex);
  const auto c = recipe::corollary_consistency(1009, 0.5, recipe::ChiKind::quadratic);
  v.detail << "quadratic T=0: " << a.left << ", complex T=1: " << b.left << ", quadratic T=0.5: " << c.left;
  v.require(std::abs(a.left - 6) <= 1e-12, "6");
  v.require(std::abs(b.left - 4) <= 1e-12 && std::abs(c.left - 4) <= 1e-12, "4");
  return v;
}

Verdict c10_threshold() {
  Verdict v;
  const recipe::Int N = 1000000;
  const double L = std::log(static_cast<double>(N));
  const auto rows = recipe::threshold_scan(N, recipe::auto_schedule(N));
  double worst = 0;
  bool envelope = true;
  for (const auto& r : rows) {
    const double ref = r.T == 0.0 ? 2 * L : std::sin(4 * r.T * L) / (2 * r.T);
    worst = std::max(worst, std::abs(r.bracket - ref));
    if (r.T * L >= 10) envelope = envelope && std::abs(r.bracket) <= r.envelope && std::abs(r.bracket) <= L / 20;
  }
  const double limit = std::abs(rows.front().bracket - 2 * L);
  v.detail << rows.size() << " rows, max err " << worst << ", T -> 0 err " << limit;
  v.require(worst <= 1e-8, "bracket");
  v.require(limit <= 1e-8, "limit");
  v.require(envelope, "envelope");
  return v;
}

Verdict c11_poles() {
  Verdict v;
  const auto lp = recipe::limit_path_evaluate(5, 0.0, arith::character_from_label("5:quad"));
  double worst = 0;
  for (const auto& p : lp.pairs) worst = std::max(worst, std::abs(p.pole_residual));
  v.detail << lp.pairs.size() << " pairs, max residual " << worst;
  v.require(lp.pairs.size() == 4, "pairs");
  v.require(worst <= 1e-6, "residual");
  return v;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IONBF, 0);
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"de Branges-Wilson integral equals 8 pi^3", c1_dbw},
      {"Gauss sums |tau|^2 = q for q <= 200", c2_gauss},
      {"Eisenstein Fourier expansion vs lattice sum", c3_eisenstein},
      {"Ramanujan identity within tail bound", c4_ramanujan},
      {"Kuznetsov diagonal 8 pi and off-diagonal approach", c5_kuznetsov},
      {"Mellin pair of g", c6_mellin},
      {"triple-pole residue vs Laurent coefficient", c7_residue},
      {"three routes for the cusp-zone integral", c8_routes},
      {"corollary assembly gives 6 and 4", c9_corollary},
      {"threshold bracket", c10_threshold},
      {"eta' pole cancellation at N=5", c11_poles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "error: " << e.what();
    }
    failed += v.pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.str().c_str());
  }
  // Not a numbered criterion: the normalized cleaned piece over N = 5, 13, 17, 29 is not monotone because
  // L(1, psi_29) < L(1, psi_17); see README. Reported for visibility and excluded from the exit status.
  try {
    const auto sweep = moment::theorem0diff_report({5, 13, 17, 29}, 2.0);
    std::ostringstream rows;
    for (const auto& r : sweep.rows) rows << " N=" << r.N << ":" << r.normalized;
    std::printf("sweep (informational): %s  monotone decay of the normalized cleaned piece:%s\n",
                sweep.monotone ? "PASS" : "FAIL", rows.str().c_str());
  } catch (const std::exception& e) {
    std::printf("sweep (informational): FAIL  error: %s\n", e.what());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
