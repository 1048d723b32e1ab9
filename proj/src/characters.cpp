#include "eisenlab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "eisenlab/errors.hpp"

namespace eisenlab::arith {

namespace {

Int powmod(Int b, Int e, Int m) {
  __int128 r = 1 % m, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<Int>(r);
}

Int inverse(Int a, Int m) {
  Int g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    Int t = g / a1;
    g -= t * a1;
    std::swap(g, a1);
    x -= t * x1;
    std::swap(x, x1);
  }
  if (g != 1) throw InvalidArgument("no inverse");
  return mod(x, m);
}

Int ipow(Int p, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

Int smallest_primitive_root(Int p, int k) {
  const Int pk = ipow(p, k);
  const Int phi = pk / p * (p - 1);
  const auto fs = factorize(phi);
  for (Int g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto [r, e] : fs) {
      if (powmod(g, phi / r, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

std::pair<Int, Int> add_turns(std::pair<Int, Int> a, std::pair<Int, Int> b) {
  Int num = a.first * b.second + b.first * a.second;
  Int den = a.second * b.second;
  Int g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

}  // namespace

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int euler_phi(Int n) {
  Int r = n;
  for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> ds{1};
  for (auto [p, k] : factorize(n)) {
    const std::size_t m = ds.size();
    Int pp = 1;
    for (int i = 1; i <= k; ++i) {
      pp *= p;
      for (std::size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pp);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

struct DirichletCharacter::Basis {
  Int q = 1;
  std::vector<Int> gens;     // residues mod q
  std::vector<Int> orders;
  Int base = 1;              // lcm of orders
  // logs[a * r + j] = discrete log of a against generator j; unused for gcd(a, q) > 1.
  std::vector<Int> logs;
  std::vector<bool> unit;
};

const DirichletCharacter::Basis& DirichletCharacter::basis(Int q) {
  static std::mutex mu;
  static std::map<Int, std::unique_ptr<Basis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (slot) return *slot;
  if (q < 1) throw InvalidArgument("character modulus must be positive");
  if (q > 2000000) throw InvalidArgument("character modulus too large");

  auto b = std::make_unique<Basis>();
  b->q = q;
  auto lift = [q](Int g, Int pk) {
    const Int rest = q / pk;
    if (rest == 1) return mod(g, q);
    const Int t = mod((g - 1) % pk * inverse(rest, pk), pk);
    return mod(1 + rest * t, q);
  };
  for (auto [p, k] : factorize(q)) {
    const Int pk = ipow(p, k);
    if (p == 2) {
      if (k >= 2) {
        b->gens.push_back(lift(pk - 1, pk));
        b->orders.push_back(2);
      }
      if (k >= 3) {
        b->gens.push_back(lift(5, pk));
        b->orders.push_back(pk / 4);
      }
    } else {
      b->gens.push_back(lift(smallest_primitive_root(p, k), pk));
      b->orders.push_back(pk / p * (p - 1));
    }
  }
  for (Int o : b->orders) b->base = std::lcm(b->base, o);

  const std::size_t r = b->gens.size();
  b->logs.assign(static_cast<std::size_t>(q) * std::max<std::size_t>(r, 1), 0);
  b->unit.assign(static_cast<std::size_t>(q), false);
  std::vector<Int> e(r, 0);
  while (true) {
    Int a = 1 % q;
    for (std::size_t j = 0; j < r; ++j) a = static_cast<Int>(static_cast<__int128>(a) * powmod(b->gens[j], e[j], q) % q);
    b->unit[static_cast<std::size_t>(a)] = true;
    for (std::size_t j = 0; j < r; ++j) b->logs[static_cast<std::size_t>(a) * r + j] = e[j];
    std::size_t j = r;
    while (j > 0) {
      --j;
      if (++e[j] < b->orders[j]) break;
      e[j] = 0;
      if (j == 0) {
        j = r + 1;
        break;
      }
    }
    if (r == 0 || j == r + 1) break;
  }
  slot = std::move(b);
  return *slot;
}

std::vector<Int> DirichletCharacter::generator_residues(Int q) { return basis(q).gens; }

DirichletCharacter DirichletCharacter::build(Int q, std::vector<Int> index) {
  const Basis& b = basis(q);
  const std::size_t r = b.gens.size();
  if (index.size() != r) throw InvalidArgument("generator exponent vector has wrong length");
  DirichletCharacter c;
  c.q_ = q;
  c.position_ = 0;
  for (std::size_t j = 0; j < r; ++j) {
    index[j] = mod(index[j], b.orders[j]);
    c.position_ = c.position_ * b.orders[j] + index[j];
  }
  c.index_ = index;
  c.exps_.assign(static_cast<std::size_t>(q), -1);
  Int g = b.base;
  for (Int a = 0; a < q; ++a) {
    if (!b.unit[static_cast<std::size_t>(a)]) continue;
    __int128 s = 0;
    for (std::size_t j = 0; j < r; ++j)
      s += static_cast<__int128>(index[j]) * b.logs[static_cast<std::size_t>(a) * r + j] * (b.base / b.orders[j]);
    const Int v = static_cast<Int>(s % b.base);
    c.exps_[static_cast<std::size_t>(a)] = v;
    g = std::gcd(g, v);
  }
  if (g == 0) g = b.base;
  c.base_ = b.base / g;
  for (auto& v : c.exps_)
    if (v >= 0) v /= g;

  c.parity_ = (q <= 2 || c.exponent(q - 1) == 0) ? 1 : -1;

  c.conductor_ = q;
  for (Int d : divisors(q)) {
    bool trivial = true;
    for (Int a = 1 % d; a < q && trivial; a += d) {
      if (b.unit[static_cast<std::size_t>(a)] && c.exps_[static_cast<std::size_t>(a)] != 0) trivial = false;
    }
    if (trivial) {
      c.conductor_ = d;
      break;
    }
  }
  return c;
}

DirichletCharacter DirichletCharacter::from_generator_exponents(Int q, std::vector<Int> index) {
  return build(q, std::move(index));
}

DirichletCharacter DirichletCharacter::from_generator_turns(Int q, const std::vector<std::pair<Int, Int>>& turns) {
  const Basis& b = basis(q);
  std::vector<Int> index(turns.size());
  for (std::size_t j = 0; j < turns.size(); ++j) {
    auto [num, den] = turns[j];
    const __int128 k = static_cast<__int128>(num) * b.orders[j];
    if (k % den != 0) throw InvalidArgument("values do not define a character");
    index[j] = static_cast<Int>(k / den);
  }
  return build(q, std::move(index));
}

Complex DirichletCharacter::operator()(Int n) const {
  const Int e = exponent(n);
  if (e < 0) return {0.0, 0.0};
  if (e == 0) return {1.0, 0.0};
  if (2 * e == base_) return {-1.0, 0.0};
  if (4 * e == base_) return {0.0, 1.0};
  if (4 * e == 3 * base_) return {0.0, -1.0};
  const double th = 2.0 * kPi * static_cast<double>(e) / static_cast<double>(base_);
  return {std::cos(th), std::sin(th)};
}

int DirichletCharacter::real_value(Int n) const {
  const Int e = exponent(n);
  if (e < 0) return 0;
  if (e == 0) return 1;
  if (2 * e == base_) return -1;
  throw InvalidArgument("character is not real");
}

bool DirichletCharacter::is_principal() const { return base_ == 1; }
bool DirichletCharacter::is_real() const { return base_ <= 2; }

std::string DirichletCharacter::label() const {
  return std::to_string(q_) + ":" + std::to_string(position_);
}

DirichletCharacter DirichletCharacter::power(int k) const {
  std::vector<Int> idx = index_;
  for (auto& v : idx) v *= k;
  return build(q_, std::move(idx));
}

DirichletCharacter DirichletCharacter::conj() const { return power(-1); }

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.q_ != b.q_) throw InvalidArgument("product of characters with different moduli");
  std::vector<Int> idx = a.index_;
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] += b.index_[j];
  return DirichletCharacter::build(a.q_, std::move(idx));
}

std::vector<Int> DirichletCharacter::generator_orders(Int q) { return basis(q).orders; }

std::vector<DirichletCharacter> enumerate_characters(Int q) {
  const std::vector<Int> orders = DirichletCharacter::generator_orders(q);
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(euler_phi(q)));
  std::vector<Int> e(orders.size(), 0);
  while (true) {
    out.push_back(DirichletCharacter::from_generator_exponents(q, e));
    std::size_t j = e.size();
    bool done = true;
    while (j > 0) {
      --j;
      if (++e[j] < orders[j]) {
        done = false;
        break;
      }
      e[j] = 0;
    }
    if (done) break;
  }
  return out;
}

DirichletCharacter principal_character(Int q) {
  return DirichletCharacter::from_generator_exponents(q, std::vector<Int>(DirichletCharacter::generator_orders(q).size(), 0));
}

DirichletCharacter quadratic_character(Int q) {
  const auto all = enumerate_characters(q);
  for (const auto& c : all)
    if (c.is_real() && !c.is_principal() && c.is_primitive()) return c;
  for (const auto& c : all)
    if (c.is_real() && !c.is_principal()) return c;
  throw InvalidArgument("no real non-principal character mod " + std::to_string(q));
}

DirichletCharacter character_from_label(const std::string& label) {
  const auto colon = label.find(':');
  if (colon == std::string::npos) throw InvalidArgument("character label must be q:index or q:quad");
  Int q = 0;
  try {
    std::size_t used = 0;
    q = std::stoll(label.substr(0, colon), &used);
    if (used != colon) throw InvalidArgument("bad modulus in " + label);
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad modulus in " + label);
  }
  if (q < 1) throw InvalidArgument("bad modulus in " + label);
  const std::string rest = label.substr(colon + 1);
  if (rest == "quad") return quadratic_character(q);
  Int idx = -1;
  try {
    std::size_t used = 0;
    idx = std::stoll(rest, &used);
    if (used != rest.size()) idx = -1;
  } catch (const std::logic_error&) {
    idx = -1;
  }
  if (idx < 0 || idx >= euler_phi(q)) throw InvalidArgument("bad character index in " + label);
  return enumerate_characters(q)[static_cast<std::size_t>(idx)];
}

DirichletCharacter induce(const DirichletCharacter& chi, Int Q) {
  const Int q = chi.modulus();
  if (Q % q != 0) throw InvalidArgument("induce: target modulus must be a multiple");
  return DirichletCharacter::from_turns(Q, [&](Int g) { return std::pair<Int, Int>{chi.exponent(g), chi.order_base()}; });
}

DirichletCharacter primitive_of(const DirichletCharacter& chi) {
  const Int q = chi.modulus();
  const Int f = chi.conductor();
  if (f == q) return chi;
  return DirichletCharacter::from_turns(f, [&](Int g) {
    Int x = g;
    while (gcd(x, q) != 1) x += f;
    return std::pair<Int, Int>{chi.exponent(x), chi.order_base()};
  });
}

Complex gauss_sum(const DirichletCharacter& chi) {
  const Int q = chi.modulus();
  const Int L = chi.order_base();
  Accumulator<Complex> acc;
  for (Int a = 0; a < q; ++a) {
    const Int e = chi.exponent(a);
    if (e < 0) continue;
    const Int num = mod(static_cast<Int>((static_cast<__int128>(e) * q + static_cast<__int128>(a) * L) % (L * q)), L * q);
    const double th = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(L * q);
    acc += Complex{std::cos(th), std::sin(th)};
  }
  return acc.value();
}

Decomposition decompose(const DirichletCharacter& chi, Int f) {
  const Int N = chi.modulus();
  if (f < 1 || N % f != 0) throw InvalidArgument("decompose: f must divide the modulus");
  const Int M = N / f;
  if (gcd(f, M) != 1) throw InvalidArgument("decompose: gcd(f, N/f) must be 1");
  if (!chi.is_primitive()) throw InvalidArgument("decompose: character must be primitive");
  // x = a mod m, x = 1 mod (N/m)
  auto crt_one = [N](Int a, Int m) {
    const Int other = N / m;
    if (other == 1) return mod(a, N);
    if (m == 1) return Int{1};
    const Int t = mod(mod(a - 1, m) * inverse(other, m), m);
    return mod(1 + other * t, N);
  };
  auto part = [&](Int m) {
    return DirichletCharacter::from_turns(m, [&](Int g) {
      return std::pair<Int, Int>{chi.exponent(crt_one(g, m)), chi.order_base()};
    });
  };
  Decomposition d;
  d.chi1 = part(M);
  d.chi2 = part(f).conj();
  d.psi = DirichletCharacter::from_turns(N, [&](Int g) {
    return add_turns({d.chi1.exponent(g), d.chi1.order_base()}, {d.chi2.exponent(g), d.chi2.order_base()});
  });
  return d;
}

LevelData level_data(Int N) {
  if (N < 1) throw InvalidArgument("level must be positive");
  LevelData L;
  L.N = N;
  L.factors = factorize(N);
  L.nu = 1;
  Int sigma = 1;
  for (auto [p, k] : L.factors) {
    L.nu *= ipow(p, k - 1) * (p + 1);
    sigma *= (ipow(p, k + 1) - 1) / (p - 1);
  }
  const Int g = gcd(sigma, N);
  L.sigma_minus_one = {sigma / g, N / g};
  return L;
}

bool admissible_level(Int N, double delta) {
  const LevelData L = level_data(N);
  const double excess = static_cast<double>(L.sigma_minus_one.num - L.sigma_minus_one.den) /
                        static_cast<double>(L.sigma_minus_one.den);
  return excess <= std::pow(static_cast<double>(N), -delta) * (1.0 + 1e-12);
}

}  // namespace eisenlab::arith
