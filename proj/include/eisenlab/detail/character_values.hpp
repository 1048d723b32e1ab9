#pragma once

#include <cmath>
#include <vector>

#include "eisenlab/characters.hpp"
#include "eisenlab/detail/gamma_kernel.hpp"

namespace eisenlab::detail {

/// chi(a) for a = 0..q-1 in the requested precision.
template <class R, class C>
std::vector<C> character_values(const arith::DirichletCharacter& chi) {
  using std::cos;
  using std::sin;
  const auto q = chi.modulus();
  const auto L = chi.order_base();
  std::vector<C> v(static_cast<std::size_t>(q), C(R(0), R(0)));
  for (arith::Int a = 0; a < q; ++a) {
    const auto e = chi.exponent(a);
    if (e < 0) continue;
    if (e == 0) {
      v[static_cast<std::size_t>(a)] = C(R(1), R(0));
    } else if (2 * e == L) {
      v[static_cast<std::size_t>(a)] = C(R(-1), R(0));
    } else {
      const R th = R(2) * pi<R>() * R(e) / R(L);
      v[static_cast<std::size_t>(a)] = C(cos(th), sin(th));
    }
  }
  return v;
}

}  // namespace eisenlab::detail
