#include "eisenlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "eisenlab/parallel.hpp"
#include "eisenlab/quadrature.hpp"

namespace eisenlab::geom {

namespace {

// Returns g = gcd(a, b) and x, y with a x + b y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Int q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Completes (c, d) with gcd 1 to a matrix of determinant 1.
Mat2 complete_bottom(Int c, Int d) {
  Int x = 0, y = 0;
  ext_gcd(d, c, x, y);  // d x + c y = 1
  return {x, -y, c, d};
}

// Completes (a, b) with gcd 1 to a matrix [a b; c d] of determinant 1 with N | c.
Mat2 complete_top_gamma0(Int a, Int b, Int N) {
  Int x = 0, y = 0;
  ext_gcd(a, N * b, x, y);  // a x + N b y = 1
  return {a, b, -N * y, x};
}

std::pair<Int, Int> p1_key(Int c, Int d, Int N) {
  if (N == 1) return {0, 0};
  c = arith::mod(c, N);
  d = arith::mod(d, N);
  std::pair<Int, Int> best{N, N};
  for (Int u = 1; u < N; ++u) {
    if (arith::gcd(u, N) != 1) continue;
    best = std::min(best, std::pair<Int, Int>{arith::mod(u * c, N), arith::mod(u * d, N)});
  }
  return best;
}

}  // namespace

bool in_gamma0(const Mat2& g, Int N) { return g.det() == 1 && arith::mod(g.c, N) == 0; }

std::size_t CosetList::index_of(const Mat2& g) const {
  const auto k = p1_key(g.c, g.d, N);
  const auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) throw InvalidArgument("coset lookup failed");
  return static_cast<std::size_t>(it - keys.begin());
}

CosetList coset_reps(Int N) {
  if (N < 1) throw InvalidArgument("coset_reps: N must be positive");
  CosetList out;
  out.N = N;
  std::map<std::pair<Int, Int>, Mat2> classes;
  for (Int c = 0; c < N; ++c) {
    for (Int d = 0; d < N; ++d) {
      if (arith::gcd(arith::gcd(c, d), N) != 1 && N != 1) continue;
      const auto key = p1_key(c, d, N);
      if (classes.count(key)) continue;
      Mat2 m;
      if (arith::mod(c, N) == 0) {
        m = Mat2{};
      } else {
        Int dd = d;
        while (arith::gcd(c, dd) != 1) dd += N;
        m = complete_bottom(c, dd);
      }
      classes.emplace(key, m);
    }
  }
  for (auto& [k, m] : classes) {
    out.keys.push_back(k);
    out.reps.push_back(m);
  }
  // identity class (0 : 1) is the smallest key only after normalisation; move it first
  const auto id = out.index_of(Mat2{});
  if (id != 0) {
    std::rotate(out.keys.begin(), out.keys.begin() + static_cast<long>(id), out.keys.begin() + static_cast<long>(id) + 1);
    std::rotate(out.reps.begin(), out.reps.begin() + static_cast<long>(id), out.reps.begin() + static_cast<long>(id) + 1);
  }
  return out;
}

double volume(Int N) { return kPi / 3.0 * static_cast<double>(arith::level_data(N).nu); }

Mat2 reduce_to_standard(Complex z, Complex* w) {
  if (!(z.imag() > 0.0)) throw InvalidArgument("reduce_to_standard: point must lie in the upper half plane");
  Mat2 g;
  for (int iter = 0; iter < 1000; ++iter) {
    const Int k = static_cast<Int>(std::floor(z.real() + 0.5));
    if (k != 0) {
      z -= static_cast<double>(k);
      g = Mat2{1, -k, 0, 1} * g;
    }
    if (std::norm(z) < 1.0 - 1e-15) {
      z = -1.0 / z;
      g = Mat2{0, -1, 1, 0} * g;
    } else {
      break;
    }
  }
  if (w) *w = z;
  return g;
}

QuadratureGrid make_grid(int nx, int order, double t_panel) {
  if (nx < 2 || order < 2 || !(t_panel > 0.0)) throw InvalidArgument("make_grid: bad resolution");
  QuadratureGrid g;
  g.nx = nx;
  g.order = order;
  g.t_panel = t_panel;
  const auto& rx = quad::gauss_legendre<double>(nx);
  const auto& rt = quad::gauss_legendre<double>(order);
  for (std::size_t i = 0; i < rx.nodes.size(); ++i) {
    const double x = 0.5 * rx.nodes[i];
    const double wx = 0.5 * rx.weights[i];
    const double t_top = 1.0 / std::sqrt(1.0 - x * x);
    for (double lo = 0.0; lo < t_top - 1e-15; lo += t_panel) {
      const double hi = std::min(lo + t_panel, t_top);
      const double half = (hi - lo) / 2, mid = (hi + lo) / 2;
      for (std::size_t j = 0; j < rt.nodes.size(); ++j) {
        const double t = mid + half * rt.nodes[j];
        g.base.push_back({Complex{x, 1.0 / t}, wx * half * rt.weights[j]});
      }
    }
  }
  return g;
}

IntegrationResult integrate(const std::function<Complex(Complex)>& f, Int N, const QuadratureGrid& grid) {
  const CosetList cosets = coset_reps(N);
  auto run = [&](const QuadratureGrid& g) {
    std::vector<Complex> partial(cosets.reps.size());
    parallel_for(cosets.reps.size(), [&](std::size_t j) {
      Accumulator<Complex> acc;
      for (const Node& n : g.base) acc += f(cosets.reps[j].apply(n.z)) * n.weight;
      partial[j] = acc.value();
    });
    Accumulator<Complex> total;
    for (const auto& p : partial) total += p;
    return total.value();
  };
  IntegrationResult r;
  r.value = run(grid);
  const QuadratureGrid coarse = make_grid(std::max(2, grid.nx / 2), std::max(2, grid.order / 2), grid.t_panel * 2);
  r.coarse = run(coarse);
  r.refinement = std::abs(r.value - r.coarse);
  r.evaluations = static_cast<long>((grid.base.size() + coarse.base.size()) * cosets.reps.size());
  return r;
}

std::string to_string(Cusp c) { return c == Cusp::infinity ? "infinity" : "zero"; }

CuspData cusp_data(Cusp c, Int N) {
  CuspData d;
  d.label = c;
  d.width = 1.0;
  if (c == Cusp::zero) d.scaling = Mat2{0, -1, N, 0};
  return d;
}

Routed route(Complex z, Int N, bool allow_fricke) {
  if (!(z.imag() > 0.0)) throw InvalidArgument("route: point must lie in the upper half plane");
  const double x = z.real(), y = z.imag();
  const double Nd = static_cast<double>(N);
  Routed best;
  best.w = z;
  double h = y;
  Int bc = 0, bd = 1;
  for (Int c = 1; Nd * static_cast<double>(c) * y < 1.0; ++c) {
    const double C = Nd * static_cast<double>(c);
    const Int lo = static_cast<Int>(std::floor(-C * x - 1.0)), hi = static_cast<Int>(std::ceil(-C * x + 1.0));
    for (Int d = lo; d <= hi; ++d) {
      if (arith::gcd(N * c, d) != 1) continue;
      const double hh = y / std::norm(C * z + static_cast<double>(d));
      if (hh > h * (1.0 + 1e-13)) {
        h = hh;
        bc = N * c;
        bd = d;
      }
    }
  }
  Mat2 g = (bc == 0) ? Mat2{} : complete_bottom(bc, bd);
  Cusp cusp = Cusp::infinity;
  // Fricke coset: heights y / (N |a z + b|^2) with gcd(a, N) = gcd(a, b) = 1.
  for (Int a = 1; allow_fricke && N > 1 && static_cast<double>(a) * y * std::sqrt(Nd * h / y) < 1.0; ++a) {
    if (arith::gcd(a, N) != 1) continue;
    const double r = std::sqrt(y / (Nd * h));
    const Int lo = static_cast<Int>(std::floor(-static_cast<double>(a) * x - r)),
              hi = static_cast<Int>(std::ceil(-static_cast<double>(a) * x + r));
    for (Int b = lo; b <= hi; ++b) {
      if (arith::gcd(a, b) != 1) continue;
      const double hh = y / (Nd * std::norm(static_cast<double>(a) * z + static_cast<double>(b)));
      if (hh > h * (1.0 + 1e-13)) {
        h = hh;
        g = complete_top_gamma0(a, b, N);
        cusp = Cusp::zero;
      }
    }
  }
  Complex w = cusp == Cusp::infinity ? g.apply(z) : -1.0 / (Nd * g.apply(z));
  const Int k = static_cast<Int>(std::floor(w.real() + 0.5));
  if (k != 0) {
    w -= static_cast<double>(k);
    g = (cusp == Cusp::infinity ? Mat2{1, -k, 0, 1} : Mat2{1, 0, N * k, 1}) * g;
  }
  best.w = w;
  best.cusp = cusp;
  best.gamma = g;
  return best;
}

std::optional<Cusp> cuspidal_zone_membership(Complex z, Int N, double Y) {
  if (!(Y > 1.0)) throw InvalidArgument("cuspidal_zone_membership: Y must exceed 1");
  const Routed r = route(z, N);
  if (r.w.imag() > Y) return r.cusp;
  return std::nullopt;
}

}  // namespace eisenlab::geom
