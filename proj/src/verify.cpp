#include "eisenlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "eisenlab/characters.hpp"
#include "eisenlab/eisenstein.hpp"
#include "eisenlab/errors.hpp"
#include "eisenlab/fault.hpp"
#include "eisenlab/lfunctions.hpp"
#include "eisenlab/moment.hpp"
#include "eisenlab/recipe.hpp"
#include "eisenlab/special_functions.hpp"

namespace eisenlab::verify {

namespace {

using Reports = std::vector<MomentReport>;
using Check = std::function<void(Reports&, std::mt19937_64&)>;

void dbw(Reports& out, std::mt19937_64&) {
  const double exact = 8 * std::pow(kPi, 3);
  for (double T : {0.0, 0.1, 0.5, 1.0})
    out.push_back(make_report("dbw T=" + std::to_string(T), special::dbw_integral(T).value, exact, 1e-7, false));
}

void gauss_sum_law(Reports& out, std::mt19937_64&) {
  double worst = 0.0;
  std::string where = "none";
  int count = 0;
  for (arith::Int q = 1; q <= 200; ++q)
    for (const auto& chi : arith::enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      const double err = std::abs(std::norm(arith::gauss_sum(chi)) - static_cast<double>(q));
      ++count;
      if (err > worst) {
        worst = err;
        where = chi.label();
      }
    }
  out.push_back(make_report("gauss_sum |tau|^2 = q, worst of " + std::to_string(count), worst, 0.0, 1e-9, false,
                            "worst at " + where));
}

void mellin_pair(Reports& out, std::mt19937_64&) {
  for (Complex s : {Complex{1, 0}, Complex{2, 0}, Complex{1, 1}}) {
    const Complex a = moment::mellin_of_g_numeric(s), b = moment::mellin_G(s);
    auto r = make_report("mellin g vs G at " + std::to_string(s.real()) + "+" + std::to_string(s.imag()) + "i",
                         a.real(), b.real(), 1e-8, false);
    r.abs_err = std::abs(a - b);
    r.pass = r.abs_err <= 1e-8;
    out.push_back(r);
  }
  out.push_back(make_report("mellin G(1) = 1/2", moment::mellin_G(1.0).real(), 0.5, 1e-8, false));
  const double s = 1e-10;
  out.push_back(make_report("mellin s G(s) -> g(0)", (s * moment::mellin_G(s)).real(), kPi * kPi / 4, 1e-8, false));
}

recipe::ShiftState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(0.1, 0.5), im(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  recipe::ShiftState s;
  for (std::size_t j = 0; j < 4; ++j) {
    s.eps[j] = coin(rng) ? 1 : -1;
    // the exponent 1/2 + eps a keeps real part 1/2 + margin
    s.alpha[j] = static_cast<double>(s.eps[j]) * Complex{re(rng), im(rng)};
  }
  return s;
}

void ramanujan(Reports& out, std::mt19937_64& rng) {
  const std::vector<std::string> labels{"1:0", "5:quad", "7:1"};
  for (int k = 0; k < 10; ++k) {
    const auto chi = arith::character_from_label(labels[static_cast<std::size_t>(k) % labels.size()]);
    auto s = random_state(rng);
    s.N = chi.modulus();
    const auto brute = recipe::quadruple_diagonal_sum(s, chi, 100000);
    const Complex closed = recipe::ramanujan_ratio(s, chi);
    auto r = make_report("ramanujan state " + std::to_string(k) + " " + chi.label(), brute.value.real(),
                         closed.real(), brute.tail_bound, false, "residual against the reported tail bound");
    r.abs_err = std::abs(brute.value - closed);
    r.pass = r.abs_err <= brute.tail_bound;
    out.push_back(r);
  }
}

void eisenstein_oracle(Reports& out, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.4, 1.6);
  struct Pair {
    const char* chi1;
    const char* chi2;
  };
  for (const Pair& p : {Pair{"1:0", "5:quad"}, Pair{"5:quad", "1:0"}, Pair{"1:0", "13:2"}, Pair{"13:quad", "1:0"}}) {
    const eis::EisensteinModel m(arith::character_from_label(p.chi1), arith::character_from_label(p.chi2),
                                 Complex{2.0, 0.5});
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Complex z{ux(rng), uy(rng)};
      const Complex four = eis::eval_E_star(z, m).value;
      const Complex lat = eis::direct_series_oracle(z, m, 60).value;
      worst = std::max(worst, std::abs(four - lat) / std::abs(lat));
    }
    out.push_back(make_report(std::string("eisenstein oracle (") + p.chi1 + "," + p.chi2 + ") s=2+0.5i worst of 10",
                              worst, 0.0, 1e-8, false, "relative error"));
  }
}

void residue_vs_contour(Reports& out, std::mt19937_64&) {
  for (arith::Int N : {5, 13})
    for (double Y : {2.0, 8.0}) {
      const auto ctx = moment::make_context(N, Y);
      const Complex a = moment::residue_at_zero(ctx).value;
      const auto L = lfun::laurent_at([&](Complex s) { return moment::integrand_H(s, ctx); }, 0.0, 3, 3, 0.25, 64);
      out.push_back(make_report("residue vs Laurent N=" + std::to_string(N) + " Y=" + std::to_string(Y), a.real(),
                                L.coefficient(-1).real(), 1e-6, true));
    }
}

void triple_route(Reports& out, arith::Int N, double tol) {
  const auto ctx = moment::make_context(N, 2.0);
  const auto q = moment::cuspzone_integral(ctx, moment::Route::quadrature);
  const auto c = moment::cuspzone_integral(ctx, moment::Route::coefficient_sum);
  const auto k = moment::cuspzone_integral(ctx, moment::Route::contour);
  const std::string tag = " N=" + std::to_string(N) + " Y=2";
  out.push_back(make_report("cusp zone quadrature vs coefficient sum" + tag, q.value, c.value, tol, true));
  out.push_back(make_report("cusp zone contour vs coefficient sum" + tag, k.value, c.value, tol, true));
}

void corollary(Reports& out, std::mt19937_64&) {
  out.push_back(recipe::corollary_consistency(5, 0.0, recipe::ChiKind::quadratic));
  out.push_back(recipe::corollary_consistency(101, 0.0, recipe::ChiKind::quadratic));
  out.push_back(recipe::corollary_consistency(101, 1.0, recipe::ChiKind::complex));
}

void kuznetsov(Reports& out, std::mt19937_64&) {
  for (double T : {0.0, 0.3, 1.0}) {
    recipe::ShiftState s;
    s.eps = {1, 1, -1, -1};
    s.alpha = recipe::alpha0(T);
    s.T = T;
    const Complex F = recipe::F_eps(s);
    auto r = make_report("F_eps diagonal T=" + std::to_string(T), F.real(), 8 * kPi, 1e-6, false);
    r.abs_err = std::abs(F - 8 * kPi);
    r.pass = r.abs_err <= 1e-6;
    out.push_back(r);
  }
  double prev = 1e300;
  bool monotone = true;
  std::string trail;
  for (double T : {0.2, 0.1, 0.05}) {
    recipe::ShiftState s;
    s.eps = {1, 1, 1, -1};
    s.alpha = recipe::alpha0(T);
    s.T = T;
    const double d = std::abs(recipe::F_eps(s) - 8 * kPi);
    trail += std::to_string(d) + " ";
    monotone = monotone && d < prev;
    prev = d;
  }
  out.push_back(make_flag_report("F_eps off-diagonal approaches 8 pi as T -> 0", monotone, "|F - 8 pi|: " + trail));
}

void threshold(Reports& out, std::mt19937_64&) {
  const recipe::Int N = 1000000;
  const double L = std::log(static_cast<double>(N));
  const auto rows = recipe::threshold_scan(N, recipe::auto_schedule(N));
  double worst = 0.0;
  bool envelope = true;
  for (const auto& r : rows) {
    const double ref = r.T == 0.0 ? 2 * L : std::sin(4 * r.T * L) / (2 * r.T);
    worst = std::max(worst, std::abs(r.bracket - ref));
    if (r.T * L >= 10) envelope = envelope && std::abs(r.bracket) <= r.envelope && std::abs(r.bracket) <= L / 20;
  }
  out.push_back(make_report("threshold bracket vs sin(4T log N)/(2T)", worst, 0.0, 1e-8, false));
  out.push_back(make_report("threshold T -> 0 limit", rows.front().bracket, 2 * L, 1e-8, false));
  out.push_back(make_flag_report("threshold envelope for T log N >= 10", envelope));
}

void pole_cancellation(Reports& out, std::mt19937_64&) {
  const auto chi = arith::character_from_label("5:quad");
  const auto lp = recipe::limit_path_evaluate(5, 0.0, chi);
  for (const auto& p : lp.pairs)
    out.push_back(make_report("eta' pole residual (" + std::to_string(p.eps3) + "," + std::to_string(p.eps4) + ") N=5",
                              std::abs(p.pole_residual), 0.0, 1e-6, false));
}

void cross(Reports& out, std::mt19937_64&) { out.push_back(moment::cross_term(moment::make_context(5, 2.0)).report); }

struct Entry {
  const char* name;
  Check run;
};

std::vector<Entry> registry(const std::string& suite) {
  std::vector<Entry> core{
      {"dbw", dbw},
      {"gauss", gauss_sum_law},
      {"mellin", mellin_pair},
      {"ramanujan", ramanujan},
      {"eisenstein", eisenstein_oracle},
      {"residue", residue_vs_contour},
      {"triple5", [](Reports& o, std::mt19937_64&) { triple_route(o, 5, 1e-6); }},
      {"corollary", corollary},
  };
  std::vector<Entry> rec{{"kuznetsov", kuznetsov}, {"threshold", threshold}, {"poles", pole_cancellation}};
  if (suite == "core") return core;
  if (suite == "recipe") return rec;
  if (suite == "full") {
    core.insert(core.end(), rec.begin(), rec.end());
    core.push_back({"triple13", [](Reports& o, std::mt19937_64&) { triple_route(o, 13, 1e-5); }});
    core.push_back({"cross", cross});
    return core;
  }
  throw InvalidArgument("unknown suite '" + suite + "'");
}

struct OffsetGuard {
  explicit OffsetGuard(double v) { fault::log_gamma_offset.store(v); }
  ~OffsetGuard() { fault::log_gamma_offset.store(0.0); }
};

}  // namespace

std::vector<std::string> suite_names() { return {"core", "recipe", "full"}; }

std::vector<MomentReport> run_verify_suite(const VerifyOptions& opt) {
  const auto entries = registry(opt.suite);
  OffsetGuard guard(opt.perturb);
  std::mt19937_64 rng(opt.seed);
  Reports out;
  for (const auto& e : entries) {
    try {
      e.run(out, rng);
    } catch (const std::exception& ex) {
      out.push_back(make_flag_report(e.name, false, std::string("error: ") + ex.what()));
    }
  }
  return out;
}

}  // namespace eisenlab::verify
