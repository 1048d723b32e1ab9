#pragma once

#include <string>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/numeric.hpp"
#include "eisenlab/report.hpp"

namespace eisenlab::moment {

using arith::DirichletCharacter;
using arith::Int;

struct PipelineContext {
  Int N = 5;
  DirichletCharacter psi;  // even quadratic character mod N
  double Y = 2.0;
  double c = 0.05;  // abscissa of the shifted line Re s = -c
};

/// Prime N = 1 mod 4 with its quadratic character; Y > 1 and 0 < c < 3.
PipelineContext make_context(Int N, double Y, double c = 0.05);

/// int_x^oo K_0(y)^2 dy.
double g_function(double x);

/// 2^{s-2} Gamma((1+s)/2)^4 / (s Gamma(1+s)).
Complex mellin_G(Complex s);

/// int_0^oo g(x) x^{s-1} dx by quadrature of g itself.
Complex mellin_of_g_numeric(Complex s);

struct RankinSelberg {
  Complex brute;
  Complex closed;
  double tail_bound = 0.0;
  Int X = 0;
};

/// lambda_{1,psi}(n, 0) = sum_{d | n} psi(d) for n = 0..X (index 0 unused).
std::vector<double> divisor_character_sums(const DirichletCharacter& psi, Int X);

/// sum_{n <= X} lambda^2(n) / n^{1+s} against zeta^2(1+s) L^2(1+s,psi) / zeta(2+2s) prod_{p|N} (1 + p^{-1-s})^{-1}.
RankinSelberg rankin_selberg_series(Complex s, const DirichletCharacter& psi, Int X);

/// Gamma^4((1+s)/2) / Gamma(1+s) (pi Y)^{-s} L^2(1+s,psi) / zeta(2+2s) prod_{p|N} (1 + p^{-1-s})^{-1};
/// H(s) = zeta(1+s)^2 K(s) / s.
Complex K_function(Complex s, const PipelineContext& ctx);
Complex integrand_H(Complex s, const PipelineContext& ctx);

struct Residue {
  Complex value;
  Complex K0, K1, K2;  // K(0), K'(0), K''(0)
  double derivative_error = 0.0;
};

/// (gamma_0^2 + 2 c_1) K(0) + 2 gamma_0 K'(0) + K''(0) / 2 with zeta(1+s) = 1/s + gamma_0 + c_1 s + ...
Residue residue_at_zero(const PipelineContext& ctx);

struct LineIntegral {
  Complex value;
  double tail_bound = 0.0;
  double t_max = 0.0;
};

/// (1 / 2 pi i) int_{Re s = -c} H(s) ds, truncated at |Im s| = t_max.
LineIntegral shifted_contour_integral(const PipelineContext& ctx, double t_max = 60.0);

/// The residue and line integral in binary128; the two nearly cancel, so their
/// sum is only meaningful at that precision.
struct ContourParts {
  double residue = 0.0;
  double line = 0.0;
  double sum = 0.0;         // residue + line, formed before rounding to binary64
  double tail_bound = 0.0;  // truncated line tail plus the Laurent remainder
};
ContourParts contour_parts(const PipelineContext& ctx);

enum class Route { quadrature, coefficient_sum, contour };
std::string to_string(Route r);
Route route_from_string(const std::string& s);

struct RouteValue {
  Route route = Route::quadrature;
  double value = 0.0;
  double err_bound = 0.0;
  double runtime_ms = 0.0;
};

/// 12 / Lambda^2(1,psi) int_Y^oo int_0^1 y |E*_{1,psi}(z,1/2) - constant term|^2 dmu by the chosen route.
RouteValue cuspzone_integral(const PipelineContext& ctx, Route route);

struct CrossTerm {
  double lhs = 0.0;         // int over the cusp zones of (E^Y)^3 e
  double zone_square = 0.0; // int over the cusp zones of (E^Y)^2 e^2
  double fourth = 0.0;      // int over the fundamental domain of (E^Y)^4
  double fourth_coarse = 0.0;
  double rhs = 0.0;         // sqrt(zone_square * fourth)
  MomentReport report;
};
CrossTerm cross_term(const PipelineContext& ctx);

struct SweepRow {
  Int N = 0;
  double Y = 0.0;
  double cleaned = 0.0;
  double normalized = 0.0;  // cleaned / (log^2 N / nu(N))
};

struct Theorem0Diff {
  std::vector<SweepRow> rows;
  bool monotone = false;
  double offset = 0.0;  // intercept of normalized against 1/log N
  double offset_stderr = 0.0;
  MomentReport report;
};
Theorem0Diff theorem0diff_report(const std::vector<Int>& levels, double Y);

}  // namespace eisenlab::moment
