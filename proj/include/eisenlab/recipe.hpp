#pragma once

#include <array>
#include <string>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/lfunctions.hpp"
#include "eisenlab/numeric.hpp"
#include "eisenlab/report.hpp"

namespace eisenlab::recipe {

using arith::DirichletCharacter;
using arith::Int;

enum class ChiKind { complex, quadratic };
ChiKind kind_of(const DirichletCharacter& chi);
std::string to_string(ChiKind k);

struct ShiftState {
  std::array<int, 4> eps{1, 1, 1, 1};
  std::array<Complex, 4> alpha{};
  double T = 0.0;
  Int N = 1;
  ChiKind kind = ChiKind::complex;
};

/// alpha_0 = (0, 0, 2iT, -2iT).
std::array<Complex, 4> alpha0(double T);

/// Gamma((1/2 - a + it)/2) Gamma((1/2 - a - it)/2) / (Gamma((1/2 + a + it)/2) Gamma((1/2 + a - it)/2)).
Complex gamma_ratio(Complex a, double t);

/// Product of the Gamma fractions attached to the negative signs; the pi and N
/// powers of the functional-equation factors are divided out, so no N remains.
Complex h_weight(const ShiftState& state, double t);

struct FepsOptions {
  double t_max = 16.0;
  double panel = 1.0;
  int nodes = 16;
};

/// (1/pi^2) int t sinh(pi t) prod B(...) h(t) dt.
Complex F_eps(const ShiftState& state, const FepsOptions& opt = {});

struct DiagonalSum {
  Complex value;
  double tail_bound = 0.0;
  Int X = 0;
};

/// sum over n1 n2 = n3 n4 <= X of chi^{e3}(n3) conj(chi)^{e4}(n4) / prod n_j^{1/2 + e_j a_j}.
DiagonalSum quadruple_diagonal_sum(const ShiftState& state, const DirichletCharacter& chi, Int X);

/// The closed form of the same sum as four L-values over one.
Complex ramanujan_ratio(const ShiftState& state, const DirichletCharacter& chi);

struct RecipeTerm {
  ShiftState state;
  Complex value;
  int case_label = 0;
  lfun::LaurentExpansion leading;
};

int case_label(int eps3, int eps4, ChiKind kind, double T);

/// S(eps, alpha) assembled in closed form.
RecipeTerm S_term(const ShiftState& state, const DirichletCharacter& chi, const FepsOptions& opt = {});

struct LimitOptions {
  double eta = 1e-2;        // contour radius for the eta Laurent expansion
  double eta_prime = 1e-3;  // contour radius for the eta' limit
  int eta_nodes = 16;
  int eta_prime_nodes = 16;
  FepsOptions feps;
};

struct PairResult {
  int eps3 = 1, eps4 = 1;
  int case_label = 0;
  Complex pole_residual;  // coefficient of 1/eta' in the eps1, eps2 sum at eta = LimitOptions::eta
  Complex richardson;     // 2 f(eta'/2) - f(eta') at real eta', eta, for comparison with the contour limit
  Complex contour_limit;  // eta' -> 0 limit at the same eta by the circle mean
  lfun::LaurentExpansion R;  // R_{eps3, eps4}(eta) around eta = 0
};

struct LimitPath {
  std::vector<PairResult> pairs;  // (+,+), (+,-), (-,+), (-,-)
  Complex total;                  // sum of the eta^0 coefficients
  Complex pole_sum;               // sum of the eta^{-1} coefficients (cancels)
};

LimitPath limit_path_evaluate(Int N, double T, const DirichletCharacter& chi, const LimitOptions& opt = {});

/// R_{eps3, eps4}(eta) from the displayed final form, with the O(log log N) term dropped.
Complex R_display(int eps3, int eps4, Complex eta, double T, const DirichletCharacter& chi, const FepsOptions& opt = {});

double main_prediction(Int N, double T, ChiKind kind);

struct I2Estimate {
  double main = 0.0;
  double correction_band = 0.0;
  Complex first_log_derivative;
  Complex second_log_derivative;
};

I2Estimate i2_estimate(Int N, double T, const DirichletCharacter& psi);

struct ThresholdRow {
  double T = 0.0;
  double x = 0.0;         // 4 T log N
  double bracket = 0.0;   // sin(x) / (2T), or 2 log N at T = 0
  double small_x = 0.0;   // 2 log N
  double envelope = 0.0;  // 1 / (2|T|)
};

std::vector<ThresholdRow> threshold_scan(Int N, const std::vector<double>& schedule);
/// T from 0 to 20 / log N in 40 steps.
std::vector<double> auto_schedule(Int N);

MomentReport corollary_consistency(Int N, double T, ChiKind kind);

}  // namespace eisenlab::recipe
