#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/numeric.hpp"

namespace eisenlab::geom {

using arith::Int;

struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  Complex apply(Complex z) const {
    return (static_cast<double>(a) * z + static_cast<double>(b)) / (static_cast<double>(c) * z + static_cast<double>(d));
  }
  Int det() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // for det 1
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

bool in_gamma0(const Mat2& g, Int N);

struct CosetList {
  Int N = 1;
  std::vector<Mat2> reps;  // Gamma_0(N) g_j, identity first
  std::vector<std::pair<Int, Int>> keys;  // normalized bottom rows in P^1(Z/N)

  /// Index j with Gamma_0(N) g = Gamma_0(N) reps[j].
  std::size_t index_of(const Mat2& g) const;
};

CosetList coset_reps(Int N);
double volume(Int N);

/// Moves z into the standard domain |x| <= 1/2, |z| >= 1; returns w = g z.
Mat2 reduce_to_standard(Complex z, Complex* w = nullptr);

struct Node {
  Complex z;
  double weight = 0.0;
};

/// Gauss-Legendre nodes on the standard domain for dx dy / y^2, in the
/// coordinates (x, t = 1/y) where the measure is dx dt.
struct QuadratureGrid {
  int nx = 24;
  int order = 12;
  double t_panel = 0.05;
  std::vector<Node> base;
};

QuadratureGrid make_grid(int nx = 24, int order = 12, double t_panel = 0.05);

struct IntegrationResult {
  Complex value;
  Complex coarse;  // same integral on the half-resolution grid
  double refinement = 0.0;
  long evaluations = 0;
};

/// Integral of f over Gamma_0(N)\H as the union of reps[j] applied to the base grid.
IntegrationResult integrate(const std::function<Complex(Complex)>& f, Int N, const QuadratureGrid& grid);

enum class Cusp { infinity, zero };
std::string to_string(Cusp c);

struct CuspData {
  Cusp label = Cusp::infinity;
  Mat2 scaling;  // sends infinity to the cusp (entries scaled by sqrt(N) for zero)
  double width = 1.0;
};
CuspData cusp_data(Cusp c, Int N);

/// Highest image of z under Gamma_0(N) and its Fricke coset.
struct Routed {
  Complex w;         // image point
  Cusp cusp = Cusp::infinity;
  Mat2 gamma;        // Gamma_0(N) element; w = gamma z, or w = -1/(N gamma z) for the zero cusp
};
Routed route(Complex z, Int N, bool allow_fricke = true);

/// The cusp whose zone of height Y contains z, if any.
std::optional<Cusp> cuspidal_zone_membership(Complex z, Int N, double Y);

}  // namespace eisenlab::geom
