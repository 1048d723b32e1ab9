#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "eisenlab/detail/gamma_kernel.hpp"

namespace eisenlab::detail {

/// zeta(s, a) - 1/(s - 1) by Euler-Maclaurin; finite at s = 1.
template <class R, class C>
C hurwitz_zeta_regular(const C& s, const R& a) {
  using std::abs;
  using std::exp;
  using std::log;
  const bool ext = is_extended<R>();
  const int K = ext ? 30 : 20;
  const R sabs = abs(s);
  int M = static_cast<int>(static_cast<double>(sabs)) + (ext ? 40 : 20);
  M = std::max(M, ext ? 80 : 40);
  C sum(R(0), R(0));
  for (int n = 0; n < M; ++n) sum += exp(-s * log(R(n) + a));
  const R x = R(M) + a;
  const R lx = log(x);
  const C xs = exp(-s * lx);  // x^{-s}
  // (x^{1-s} - 1) / (s - 1) = -log x * expm1(w) / w, w = (1 - s) log x
  sum += -lx * expm1_over<R, C>((R(1) - s) * lx);
  sum += xs / R(2);
  const auto& B = bernoulli_table<R>();
  C rising = s;           // s (s+1) ... (s+2k-2)
  C xp = xs / x;          // x^{-s-2k+1}
  R fact = R(2);          // (2k)!
  for (int k = 1; k <= K; ++k) {
    sum += B[k] / fact * rising * xp;
    rising *= (s + R(2 * k - 1)) * (s + R(2 * k));
    xp /= x * x;
    fact *= R((2 * k + 1) * (2 * k + 2));
  }
  return sum;
}

template <class R, class C>
C hurwitz_zeta(const C& s, const R& a) {
  if (s == C(R(1), R(0))) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_zeta_regular<R, C>(s, a) + R(1) / (s - R(1));
}

/// L(s, chi) from character values chi[0..q-1]; pole at s = 1 only when sum chi != 0.
template <class R, class C>
C dirichlet_l(const C& s, const std::vector<C>& chi) {
  using std::abs;
  using std::exp;
  using std::log;
  const int q = static_cast<int>(chi.size());
  C acc(R(0), R(0)), total(R(0), R(0));
  for (int a = 1; a <= q; ++a) {
    const C& c = chi[static_cast<std::size_t>(a % q)];
    if (c == C(R(0), R(0))) continue;
    acc += c * hurwitz_zeta_regular<R, C>(s, R(a) / R(q));
    total += c;
  }
  if (abs(total) > R(1e-9)) {
    if (s == C(R(1), R(0))) throw PoleError("dirichlet_l: pole at s = 1");
    acc += total / (s - R(1));
  }
  return exp(-s * log(R(q))) * acc;
}

/// Riemann zeta via the principal character mod 1.
template <class R, class C>
C riemann_zeta(const C& s) {
  return hurwitz_zeta<R, C>(s, R(1));
}

}  // namespace eisenlab::detail
