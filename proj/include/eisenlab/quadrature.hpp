#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "eisenlab/errors.hpp"

namespace eisenlab::quad {

/// Gauss-Legendre nodes and weights on [-1, 1].
template <class R>
struct Rule {
  std::vector<R> nodes;
  std::vector<R> weights;
};

// Newton iteration on P_n, carried out in the working precision R so the
// same code yields binary64 and binary128 rules.
template <class R>
Rule<R> make_gauss_legendre(int n) {
  using std::abs;
  using std::cos;
  const R pi = boost::math::constants::pi<R>();
  const R eps = std::numeric_limits<R>::epsilon();
  Rule<R> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    R x = cos(pi * (R(i) + R(0.75)) / (R(n) + R(0.5)));
    R dp = 0;
    for (int it = 0; it < 100; ++it) {
      R p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      R dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= 4 * eps) break;
    }
    // Refresh derivative at the converged node.
    R p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      R p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    R w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

template <class R>
const Rule<R>& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule<R>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre<R>(n)).first;
  return it->second;
}

template <class R, class F>
auto fixed(F&& f, R a, R b, const Rule<R>& rule) {
  const R half = (b - a) / 2, mid = (a + b) / 2;
  using V = decltype(f(a));
  V acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return V(acc * half);
}

template <class V, class R>
struct Result {
  V value{};
  R error{};
  int evaluations = 0;
};

/// Adaptive bisection with an n-point Gauss-Legendre rule; a panel is
/// accepted when it agrees with the sum of its halves to its share of the
/// tolerance.
template <class R, class F>
auto adaptive(F&& f, R a, R b, R abs_tol, R rel_tol = R(0), int order = 16, int max_panels = 20000) {
  using std::abs;
  using V = decltype(f(a));
  const Rule<R>& rule = gauss_legendre<R>(order);
  Result<V, R> out;
  if (a == b) return out;
  struct Panel {
    R lo, hi;
    V whole;
  };
  V first = fixed(f, a, b, rule);
  out.evaluations += order;
  R tol = abs_tol;
  if (rel_tol > 0) tol = std::max(tol, R(rel_tol * abs(first)));
  const R width = b - a;
  std::vector<Panel> stack{{a, b, first}};
  int panels = 0;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    R mid = (p.lo + p.hi) / 2;
    V left = fixed(f, p.lo, mid, rule);
    V right = fixed(f, mid, p.hi, rule);
    out.evaluations += 2 * order;
    R err = abs(left + right - p.whole);
    R share = tol * abs((p.hi - p.lo) / width);
    // Differences below rounding noise carry no information.
    R noise = R(20) * std::numeric_limits<R>::epsilon() * (abs(left) + abs(right));
    if (err <= share || err <= noise || ++panels > max_panels || abs(p.hi - p.lo) < abs(width) * R(1e-12)) {
      out.value += left + right;
      out.error += err;
    } else {
      stack.push_back({mid, p.hi, right});
      stack.push_back({p.lo, mid, left});
    }
  }
  if (panels > max_panels) throw BudgetExceeded("adaptive quadrature exceeded its panel budget");
  return out;
}

}  // namespace eisenlab::quad
