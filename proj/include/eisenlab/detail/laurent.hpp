#pragma once

#include <cmath>
#include <vector>

#include "eisenlab/detail/gamma_kernel.hpp"

namespace eisenlab::detail {

/// Coefficients c_k, k = -pole_order .. -pole_order + n - 1, of f around s0 by
/// the trapezoid rule on |s - s0| = r.
template <class R, class C, class F>
std::vector<C> laurent_coefficients(F&& f, const C& s0, int pole_order, int n, R r, int nodes) {
  using std::cos;
  using std::sin;
  std::vector<C> samples(static_cast<std::size_t>(nodes));
  std::vector<C> dirs(static_cast<std::size_t>(nodes));
  const R two_pi = R(2) * pi<R>();
  for (int j = 0; j < nodes; ++j) {
    const R th = two_pi * R(j) / R(nodes);
    dirs[static_cast<std::size_t>(j)] = C(cos(th), sin(th));
    samples[static_cast<std::size_t>(j)] = f(s0 + r * dirs[static_cast<std::size_t>(j)]);
  }
  std::vector<C> out;
  for (int i = 0; i < n; ++i) {
    const int k = i - pole_order;
    C acc(R(0), R(0));
    for (int j = 0; j < nodes; ++j) {
      // (r e^{i th})^{-k}
      C w = C(R(1), R(0));
      const C d = R(1) / (r * dirs[static_cast<std::size_t>(j)]);
      const C e = r * dirs[static_cast<std::size_t>(j)];
      for (int m = 0; m < (k > 0 ? k : -k); ++m) w *= (k > 0 ? d : e);
      acc += samples[static_cast<std::size_t>(j)] * w;
    }
    out.push_back(acc / R(nodes));
  }
  return out;
}

}  // namespace eisenlab::detail
