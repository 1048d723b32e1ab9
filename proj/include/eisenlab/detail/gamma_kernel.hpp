#pragma once

// Gamma-type kernels templated on a real type R and its complex type C, so the
// same code serves std::complex<double> and the binary128 contour route.

#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "eisenlab/errors.hpp"

namespace eisenlab::detail {

template <class R>
inline bool is_extended() {
  return std::numeric_limits<R>::digits > 64;
}

template <class R>
R pi() {
  return boost::math::constants::pi<R>();
}

/// B_{2k} for k = 0..n-1.
template <class R>
const std::vector<R>& bernoulli_table() {
  static const std::vector<R> table = [] {
    std::vector<R> t;
    for (int k = 0; k < 40; ++k) t.push_back(boost::math::bernoulli_b2n<R>(k));
    return t;
  }();
  return table;
}

/// (e^w - 1) / w, accurate near w = 0.
template <class R, class C>
C expm1_over(const C& w) {
  using std::abs;
  using std::exp;
  if (abs(w) < R(0.25)) {
    C term(R(1), R(0)), sum(R(1), R(0));
    for (int n = 2; n < 40; ++n) {
      term *= w / R(n);
      sum += term;
      if (abs(term) < std::numeric_limits<R>::epsilon() * R(0.01)) break;
    }
    return sum;
  }
  return (exp(w) - R(1)) / w;
}

/// Principal log Gamma(z); for Re z < -60 the reflected value is only correct mod 2 pi i.
template <class R, class C>
C log_gamma(C z, R shift_to = R(-1)) {
  using std::abs;
  using std::exp;
  using std::floor;
  using std::log;
  using std::sin;
  const R x = real(z), y = imag(z);
  if (y == 0 && x <= 0 && x == floor(x)) throw PoleError("log_gamma: non-positive integer");
  const R p = pi<R>();
  if (x < R(-60)) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    C log_sin;
    if (abs(y) > R(5)) {
      const C iz = C(R(0), R(1)) * (y > 0 ? z : C(x, -y));
      C ls = -p * iz + log(R(1) - exp(R(2) * p * iz)) + log(C(R(0), R(0.5)));
      log_sin = y > 0 ? ls : C(real(ls), -imag(ls));
    } else {
      log_sin = log(sin(p * z));
    }
    return C(log(p), R(0)) - log_sin - log_gamma<R, C>(C(R(1) - x, -y), shift_to);
  }
  const bool ext = is_extended<R>();
  const R threshold = shift_to > 0 ? shift_to : (ext ? R(22) : R(10));
  const int terms = ext ? 24 : 9;
  C logs(R(0), R(0));
  C w = z;
  while (real(w) < R(0.5) || abs(w) < threshold) {
    logs += log(w);
    w += R(1);
  }
  const auto& B = bernoulli_table<R>();
  const C winv = R(1) / w;
  const C winv2 = winv * winv;
  C series(R(0), R(0));
  C pw = winv;
  for (int k = 1; k <= terms; ++k) {
    series += B[k] / R((2 * k) * (2 * k - 1)) * pw;
    pw *= winv2;
  }
  return (w - R(0.5)) * log(w) - w + log(R(2) * p) / R(2) + series - logs;
}

template <class R, class C>
C gamma(const C& z) {
  using std::exp;
  return exp(log_gamma<R, C>(z));
}

/// log |B(a, b)|^2 style helper: log Gamma(a) + log Gamma(b) - log Gamma(a + b).
template <class R, class C>
C log_beta(const C& a, const C& b) {
  return log_gamma<R, C>(a) + log_gamma<R, C>(b) - log_gamma<R, C>(a + b);
}

}  // namespace eisenlab::detail
