#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eisenlab/characters.hpp"
#include "eisenlab/eisenstein.hpp"
#include "eisenlab/errors.hpp"
#include "eisenlab/geometry.hpp"
#include "eisenlab/lfunctions.hpp"
#include "eisenlab/moment.hpp"
#include "eisenlab/recipe.hpp"
#include "eisenlab/verify.hpp"

using namespace eisenlab;
using nlohmann::json;

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string timestamp() {
  const std::time_t t = std::time(nullptr);
  std::ostringstream os;
  os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit_table(const std::string& command, const Table& t, const std::string& format) {
  if (format == "json") {
    json out{{"schema", 1}, {"command", command}, {"generated_at", timestamp()}};
    json rows = json::array();
    for (const auto& r : t.rows) {
      json row;
      for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = r[i];
      rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << out.dump(2) << '\n';
    return;
  }
  const char sep = format == "csv" ? ',' : '\t';
  for (std::size_t i = 0; i < t.columns.size(); ++i) std::cout << (i ? std::string(1, sep) : "") << t.columns[i];
  std::cout << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) std::cout << sep;
      if (r[i].is_string())
        std::cout << r[i].get<std::string>();
      else
        std::cout << r[i].dump();
    }
    std::cout << '\n';
  }
}

int emit_reports(const std::string& command, const std::vector<MomentReport>& reports, const std::string& format) {
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (format == "json") {
    json out{{"schema", 1}, {"command", command}, {"generated_at", timestamp()}, {"reports", to_json(reports)},
             {"pass", all}};
    std::cout << out.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << to_csv(reports);
  } else {
    for (const auto& r : reports)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << "  abs_err=" << r.abs_err << " rel_err=" << r.rel_err
                << " tol=" << r.tolerance << (r.note.empty() ? "" : "  " + r.note) << '\n';
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? 0 : 1;
}

std::vector<arith::Int> parse_levels(const std::string& s) {
  std::vector<arith::Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  if (out.empty()) throw InvalidArgument("empty level list");
  return out;
}

Complex parse_complex(const std::string& s) {
  // a, a+bi, a-bi, bi
  std::string t = s;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw InvalidArgument("empty complex number");
  if (t.back() != 'i') return {std::stod(t), 0.0};
  t.pop_back();
  std::size_t pos = t.find_last_of("+-");
  while (pos != std::string::npos && pos > 0 && (t[pos - 1] == 'e' || t[pos - 1] == 'E'))
    pos = t.find_last_of("+-", pos - 1);
  if (pos == std::string::npos || pos == 0) {
    const std::string im = t.empty() || t == "+" ? "1" : (t == "-" ? "-1" : t);
    return {0.0, std::stod(im)};
  }
  std::string im = t.substr(pos);
  if (im == "+" || im == "-") im += "1";
  return {std::stod(t.substr(0, pos)), std::stod(im)};
}

recipe::ChiKind parse_kind(const std::string& k) {
  if (k == "complex") return recipe::ChiKind::complex;
  if (k == "quadratic") return recipe::ChiKind::quadratic;
  throw InvalidArgument("kind must be complex or quadratic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eisenlab: Eisenstein series, L-function and moment-recipe numerics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key = value file with [command] sections");
  app.allow_config_extras(CLI::config_extras_mode::error);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (overrides EISENLAB_THREADS)");
  std::string format = "text";
  const auto formats = CLI::IsMember({"json", "csv", "text"});

  auto* verify = app.add_subcommand("verify", "run a suite of identity checks");
  verify::VerifyOptions vopt;
  verify->add_option("--suite", vopt.suite)->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--perturb", vopt.perturb, "offset added to log Gamma (suite sensitivity self-test)");
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--format", format)->check(formats);

  auto* sweep = app.add_subcommand("sweep", "predictor and pipeline tables over levels");
  std::string what = "main_prediction", levels = "101,211,401", kind = "complex", schedule = "auto";
  double T = 0.0, Y = 2.0;
  std::uint64_t seed = 1;
  sweep->add_option("--what", what)->check(CLI::IsMember({"main_prediction", "threshold", "moment"}));
  sweep->add_option("--N", levels, "comma separated levels");
  sweep->add_option("--T", T);
  sweep->add_option("--kind", kind)->check(CLI::IsMember({"complex", "quadratic"}));
  sweep->add_option("--Y", Y);
  sweep->add_option("--schedule", schedule);
  sweep->add_option("--seed", seed, "kept for reproducible configs; sweeps are deterministic");
  sweep->add_option("--format", format)->check(formats);

  auto* rec = app.add_subcommand("recipe", "moment recipe closed forms");
  rec->require_subcommand(1);
  arith::Int N = 5;
  std::string label = "5:quad";
  double eta = 1e-2, etap = 1e-3;
  auto* r_eval = rec->add_subcommand("evaluate", "limit path of the shifted moment");
  r_eval->add_option("--N", N);
  r_eval->add_option("--char", label);
  r_eval->add_option("--T", T);
  r_eval->add_option("--eta", eta);
  r_eval->add_option("--etap", etap);
  r_eval->add_option("--format", format)->check(formats);
  auto* r_thr = rec->add_subcommand("threshold", "the T-threshold bracket");
  r_thr->add_option("--N", N);
  r_thr->add_option("--schedule", schedule, "auto or comma separated T values");
  r_thr->add_option("--format", format)->check(formats);
  auto* r_pred = rec->add_subcommand("predict", "main term and corollary ratio");
  r_pred->add_option("--N", N);
  r_pred->add_option("--kind", kind)->check(CLI::IsMember({"complex", "quadratic"}));
  r_pred->add_option("--T", T);
  r_pred->add_option("--format", format)->check(formats);

  auto* mom = app.add_subcommand("moment", "cusp-zone integral pipeline");
  mom->require_subcommand(1);
  std::string routes = "all";
  double c = 0.05;
  auto* m_pipe = mom->add_subcommand("pipeline", "all routes at one level");
  m_pipe->add_option("--N", N);
  m_pipe->add_option("--Y", Y);
  m_pipe->add_option("--c", c);
  m_pipe->add_option("--routes", routes, "all or comma separated quadrature,coefficient_sum,contour");
  m_pipe->add_option("--format", format)->check(formats);
  auto* m_sweep = mom->add_subcommand("sweep", "normalized cleaned piece over levels");
  std::string msweep_levels = "5,13,17,29";
  m_sweep->add_option("--N", msweep_levels);
  m_sweep->add_option("--Y", Y);
  m_sweep->add_option("--out", format)->check(formats);

  auto* eisc = app.add_subcommand("eis", "evaluate E*_{chi1,chi2}(z, s)");
  std::string chi1 = "1:0", chi2 = "5:quad", s_text = "0.5", z_text = "0.1+1.2i";
  bool oracle = false, newform = false;
  eisc->add_option("--chi1", chi1);
  eisc->add_option("--chi2", chi2);
  eisc->add_option("--s", s_text);
  eisc->add_option("--z", z_text);
  eisc->add_flag("--oracle", oracle, "also evaluate the direct lattice sum (Re s >= 1.5)");
  eisc->add_flag("--newform", newform, "newform normalization");
  eisc->add_option("--format", format)->check(formats);

  auto* geo = app.add_subcommand("geom", "cosets, volume, cusps and routing for Gamma_0(N)");
  geo->add_option("--N", N);
  geo->add_option("--z", z_text);
  geo->add_option("--format", format)->check(formats);

  auto* lv = app.add_subcommand("lvalue", "L(s, chi) and its log derivatives");
  int k = 0;
  lv->add_option("--char", label);
  lv->add_option("--s", s_text);
  lv->add_option("--k", k, "1 or 2 for L^(k)/L")->check(CLI::Range(0, 2));
  lv->add_option("--format", format)->check(formats);

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) setenv("EISENLAB_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*verify) return emit_reports("verify", verify::run_verify_suite(vopt), format);

    if (*sweep) {
      Table t;
      if (what == "main_prediction") {
        t.columns = {"N", "T", "kind", "main_prediction", "log2N_over_nu"};
        for (auto n : parse_levels(levels)) {
          const double L = std::log(static_cast<double>(n));
          t.rows.push_back({n, T, kind, number(recipe::main_prediction(n, T, parse_kind(kind))),
                            number(L * L / static_cast<double>(arith::level_data(n).nu))});
        }
      } else if (what == "threshold") {
        t.columns = {"N", "T", "x", "bracket", "small_x", "envelope"};
        for (auto n : parse_levels(levels))
          for (const auto& r : recipe::threshold_scan(n, recipe::auto_schedule(n)))
            t.rows.push_back({n, r.T, r.x, number(r.bracket), r.small_x, number(r.envelope)});
      } else {
        const auto rep = moment::theorem0diff_report(parse_levels(levels), Y);
        t.columns = {"N", "Y", "cleaned", "normalized"};
        for (const auto& r : rep.rows) t.rows.push_back({r.N, r.Y, number(r.cleaned), number(r.normalized)});
      }
      emit_table("sweep " + what, t, format);
      return 0;
    }

    if (*r_eval) {
      const auto chi = arith::character_from_label(label);
      recipe::LimitOptions opt;
      opt.eta = eta;
      opt.eta_prime = etap;
      const auto lp = recipe::limit_path_evaluate(N, T, chi, opt);
      Table t;
      t.columns = {"eps3", "eps4", "case", "pole_residual", "richardson_re", "contour_limit_re", "R_m1_re", "R_0_re",
                   "R_0_im"};
      for (const auto& p : lp.pairs)
        t.rows.push_back({p.eps3, p.eps4, p.case_label, number(std::abs(p.pole_residual)), number(p.richardson.real()),
                          number(p.contour_limit.real()), number(p.R.coefficient(-1).real()),
                          number(p.R.coefficient(0).real()), number(p.R.coefficient(0).imag())});
      t.rows.push_back({"sum", "", "", "", "", "", number(lp.pole_sum.real()), number(lp.total.real()),
                        number(lp.total.imag())});
      emit_table("recipe evaluate", t, format);
      return 0;
    }
    if (*r_thr) {
      std::vector<double> ts;
      if (schedule == "auto") {
        ts = recipe::auto_schedule(N);
      } else {
        std::stringstream ss(schedule);
        std::string item;
        while (std::getline(ss, item, ',')) ts.push_back(std::stod(item));
      }
      Table t;
      t.columns = {"T", "x", "bracket", "small_x", "envelope"};
      for (const auto& r : recipe::threshold_scan(N, ts))
        t.rows.push_back({r.T, r.x, number(r.bracket), r.small_x, number(r.envelope)});
      emit_table("recipe threshold", t, format);
      return 0;
    }
    if (*r_pred) {
      const auto kd = parse_kind(kind);
      const auto rep = recipe::corollary_consistency(N, T, kd);
      Table t;
      t.columns = {"N", "T", "kind", "main_prediction", "corollary_ratio", "expected"};
      t.rows.push_back({N, T, kind, number(recipe::main_prediction(N, T, kd)), number(rep.left), number(rep.right)});
      emit_table("recipe predict", t, format);
      return rep.pass ? 0 : 1;
    }

    if (*m_pipe) {
      const auto ctx = moment::make_context(N, Y, c);
      std::vector<moment::Route> rs;
      if (routes == "all") {
        rs = {moment::Route::quadrature, moment::Route::coefficient_sum, moment::Route::contour};
      } else {
        std::stringstream ss(routes);
        std::string item;
        while (std::getline(ss, item, ',')) rs.push_back(moment::route_from_string(item));
      }
      Table t;
      t.columns = {"N", "Y", "route", "value_re", "value_im", "err_bound", "runtime_ms"};
      for (auto r : rs) {
        const auto v = moment::cuspzone_integral(ctx, r);
        t.rows.push_back({N, Y, moment::to_string(r), number(v.value), 0.0, number(v.err_bound), v.runtime_ms});
      }
      emit_table("moment pipeline", t, format);
      return 0;
    }
    if (*m_sweep) {
      Table t;
      t.columns = {"N", "Y", "route", "value_re", "value_im", "err_bound", "runtime_ms"};
      for (auto n : parse_levels(msweep_levels)) {
        const auto v = moment::cuspzone_integral(moment::make_context(n, Y), moment::Route::coefficient_sum);
        t.rows.push_back({n, Y, moment::to_string(v.route), number(v.value), 0.0, number(v.err_bound), v.runtime_ms});
      }
      emit_table("moment sweep", t, format);
      const auto rep = moment::theorem0diff_report(parse_levels(msweep_levels), Y);
      std::cerr << "normalized cleaned piece " << (rep.monotone ? "decreases" : "does not decrease")
                << " along the sweep; offset " << rep.offset << " +- " << rep.offset_stderr << '\n';
      return 0;
    }

    if (*eisc) {
      eis::EisensteinModel m(arith::character_from_label(chi1), arith::character_from_label(chi2),
                             parse_complex(s_text));
      if (newform) m = eis::newform_normalize(m);
      const Complex z = parse_complex(z_text);
      const auto e = eis::eval_E_star(z, m);
      Table t;
      t.columns = {"route", "value_re", "value_im", "tail_bound", "terms"};
      t.rows.push_back({"fourier", number(e.value.real()), number(e.value.imag()), number(e.tail_bound), e.n_max});
      if (oracle) {
        const auto o = eis::direct_series_oracle(z, m, 60);
        t.rows.push_back({"lattice", number(o.value.real()), number(o.value.imag()), number(o.tail_bound), 60});
      }
      emit_table("eis", t, format);
      return 0;
    }

    if (*geo) {
      const Complex z = parse_complex(z_text);
      const auto routed = geom::route(z, N);
      Table t;
      t.columns = {"N", "cosets", "volume", "routed_re", "routed_im", "cusp"};
      t.rows.push_back({N, static_cast<long long>(geom::coset_reps(N).reps.size()), number(geom::volume(N)),
                        number(routed.w.real()), number(routed.w.imag()), geom::to_string(routed.cusp)});
      emit_table("geom", t, format);
      return 0;
    }

    if (*lv) {
      const auto chi = arith::character_from_label(label);
      const Complex s = parse_complex(s_text);
      Table t;
      t.columns = {"char", "s_re", "s_im", "k", "value_re", "value_im"};
      const Complex v = k == 0 ? lfun::dirichlet_l(s, chi) : lfun::log_derivative(s, chi, k).value;
      t.rows.push_back({chi.label(), s.real(), s.imag(), k, number(v.real()), number(v.imag())});
      emit_table("lvalue", t, format);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
