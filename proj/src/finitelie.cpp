#include "almostcyclic/finitelie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "almostcyclic/errors.hpp"

namespace acyc {

namespace {

using u128 = unsigned __int128;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>(static_cast<u128>(a) * b % m); }

int64_t reduce(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; static_cast<u128>(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::pair<uint64_t, int> prime_power_base(uint64_t q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  if (mod == 1) return 0;
  uint64_t r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

uint64_t multiplicative_order(uint64_t q, uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(q % n, n) != 1) return 0;
  uint64_t x = q % n;
  for (uint64_t j = 1;; ++j) {
    if (x == 1) return j;
    x = mul_mod(x, q, n);
  }
}

uint64_t power_plus_one(uint64_t q, int r) {
  u128 v = 1;
  for (int k = 0; k < r; ++k) {
    v *= q;
    if (v >= (static_cast<u128>(1) << 64) - 1) throw Error(ErrorCode::InvalidArgument, "q^r + 1 exceeds 64 bits");
  }
  return static_cast<uint64_t>(v) + 1;
}

std::string ZsigmondyResult::status_name() const {
  switch (status) {
    case Status::Prime: return "prime";
    case Status::ExceptionalPower: return "exceptional_power";
    case Status::NoneFound: return "none_found";
  }
  return "none_found";
}

ZsigmondyResult zsigmondy(uint64_t q, int r) {
  if (prime_power_base(q).first == 0) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  ZsigmondyResult z;
  const uint64_t n = power_plus_one(q, r);
  if (r == 1) {
    auto f = factorize(q + 1);
    const bool two_power = f.size() == 1 && f.front().first == 2;
    if (q == 8 || two_power) {
      z.status = ZsigmondyResult::Status::ExceptionalPower;
      z.ell = f.front().first;
      z.exponent = f.front().second;
      return z;
    }
  }
  for (const auto& [ell, e] : factorize(n)) {
    if (ell == 2) continue;
    if (multiplicative_order(q, ell) > static_cast<uint64_t>(r)) {
      z.status = ZsigmondyResult::Status::Prime;
      z.ell = ell;
      return z;
    }
  }
  z.status = ZsigmondyResult::Status::NoneFound;
  std::set<uint64_t> primes;
  for (const auto& [ell, e] : factorize(n - 2)) primes.insert(ell);
  for (const auto& [ell, e] : factorize(n)) primes.insert(ell);
  for (uint64_t ell : primes) {
    if (ell != 2) z.evidence.emplace_back(ell, multiplicative_order(q, ell));
  }
  return z;
}

int sl2_min_field(uint64_t p, int d, int i) {
  if (prime_power_base(p).second != 1) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (d < 2 || i < 1) throw Error(ErrorCode::InvalidArgument, "need d >= 2 and i >= 1");
  if (i % d == 0) throw Error(ErrorCode::InvalidArgument, "representation reducible over the subfield: d divides i");
  if (d % 2 == 0 && i % d == d / 2) return d / 2;
  return d;
}

int sl2_trace_field_degree(uint64_t p, int d, int i) {
  if (prime_power_base(p).second != 1) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (d < 1 || i < 0) throw Error(ErrorCode::InvalidArgument, "need d >= 1 and i >= 0");
  const u128 q1 = static_cast<u128>(power_plus_one(p, d)) - 2;
  const u128 e = static_cast<u128>(power_plus_one(p, i % d)) % q1;
  for (int m = 1; m <= d; ++m) {
    if (d % m != 0) continue;
    const u128 pm1 = static_cast<u128>(power_plus_one(p, m)) - 2;
    if ((e * pm1) % q1 == 0) return m;
  }
  return d;
}

Sl2Classification sl2_classify(uint64_t p, int i, uint64_t a_order) {
  if (prime_power_base(p).second != 1) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "need i >= 1");
  if (a_order == 0 || 2 % a_order == 0) throw Error(ErrorCode::InvalidArgument, "a^2 = 1: element is central");
  Sl2Classification c;
  c.p = p;
  c.i = i;
  c.a_order = a_order;
  const int64_t n = static_cast<int64_t>(a_order);
  const int64_t pi = static_cast<int64_t>(pow_mod(p, static_cast<uint64_t>(i), a_order));
  for (int64_t e : {pi + 1, pi - 1, -(pi - 1), -(pi + 1)}) c.exponents.push_back(reduce(e, n));
  std::map<int64_t, int> counts;
  for (auto e : c.exponents) ++counts[e];
  int repeated = 0;
  std::vector<int> sizes;
  for (const auto& [e, k] : counts) {
    c.classes.emplace_back(e, k);
    c.m_s = std::max(c.m_s, k);
    if (k > 1) ++repeated;
    sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end());
  c.cyclic = repeated == 0;
  c.almost_cyclic = repeated <= 1;
  c.almost_cyclic_with_mult2 = sizes == std::vector<int>{1, 1, 2};
  const uint64_t full = power_plus_one(p, i) - 1;
  if ((full + 1) % a_order == 0 || (full - 1) % a_order == 0) {
    c.membership = "s";
  } else if ((2 * (full + 1)) % a_order == 0 || (2 * (full - 1)) % a_order == 0) {
    c.membership = "s_squared";
  } else {
    c.membership = "none";
  }
  return c;
}

Ev3Witness ev3_witness(uint64_t q, int r) {
  if (prime_power_base(q).first == 0) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  const uint64_t n = power_plus_one(q, r);
  if (n == 4) throw Error(ErrorCode::InvalidArgument, "q^r = 3 is excluded");
  Ev3Witness w;
  w.q = q;
  w.r = r;
  const auto z = zsigmondy(q, r);
  if (z.status == ZsigmondyResult::Status::Prime) {
    w.s_order = z.ell;
    w.s_order_source = "zsigmondy_prime";
  } else if (z.status == ZsigmondyResult::Status::ExceptionalPower) {
    w.s_order = q + 1;
    w.s_order_source = "exceptional_power";
  } else {
    std::vector<uint64_t> powers;
    for (const auto& [ell, e] : factorize(n)) {
      uint64_t v = 1;
      for (int k = 0; k < e; ++k) {
        v *= ell;
        powers.push_back(v);
      }
    }
    std::sort(powers.begin(), powers.end());
    for (uint64_t v : powers) {
      if (v > 2 && multiplicative_order(q, v) == static_cast<uint64_t>(2 * r)) {
        w.s_order = v;
        break;
      }
    }
    if (w.s_order == 0) throw Error(ErrorCode::Unsupported, "no prime power of q^r + 1 has q of order 2r");
    w.s_order_source = "fallback_prime_power";
  }
  const int64_t so = static_cast<int64_t>(w.s_order);
  w.order_of_q = multiplicative_order(q, w.s_order);
  w.one_mult = 2 * r;
  std::vector<int64_t> exps(static_cast<size_t>(2 * r), 0);
  std::set<int64_t> rest;
  for (int64_t base : {int64_t{2}, int64_t{-2}}) {
    int64_t x = reduce(base, so);
    for (int k = 0; k < r; ++k) {
      exps.push_back(x);
      x = static_cast<int64_t>(mul_mod(static_cast<uint64_t>(x), q, w.s_order));
    }
  }
  for (size_t k = static_cast<size_t>(2 * r); k < exps.size(); ++k) {
    if (exps[k] == 0) ++w.one_mult;
    else rest.insert(exps[k]);
  }
  w.complement_dim = 2 * r;
  std::sort(exps.begin(), exps.end());
  w.exponents = exps;
  std::set<int64_t> done;
  for (int64_t e : rest) {
    if (done.count(e)) continue;
    uint64_t size = 0;
    int64_t x = e;
    do {
      done.insert(x);
      ++size;
      x = static_cast<int64_t>(mul_mod(static_cast<uint64_t>(x), q, w.s_order));
    } while (x != e);
    w.orbit_sizes.push_back(size);
  }
  std::map<int64_t, int> counts;
  for (auto e : exps) ++counts[e];
  for (const auto& [e, k] : counts) w.m_s = std::max(w.m_s, k);
  w.complement_irreducible = w.orbit_sizes.size() == 1 && w.orbit_sizes.front() == static_cast<uint64_t>(2 * r) &&
                             w.one_mult == 2 * r;
  return w;
}

X6xResult x6x_check(uint64_t p, int i, int i_prime, int j) {
  if (prime_power_base(p).second != 1) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  if (i < 1 || i_prime < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "need positive i, i', j");
  X6xResult x;
  x.p = p;
  x.i = i;
  x.i_prime = i_prime;
  x.j = j;
  x.hypotheses_met = j % i == 0 && j % i_prime == 0 && i != i_prime && i < j && i_prime < j;
  const uint64_t order = power_plus_one(p, i);
  auto has_one = [&](int k) {
    const uint64_t pk = pow_mod(p, static_cast<uint64_t>(k), order);
    return (pk + 1) % order == 0 || (pk + order - 1) % order == 0;
  };
  x.one_for_rho_i = has_one(i);
  x.one_for_rho_i_prime = has_one(i_prime);
  x.distinguished = x.one_for_rho_i && !x.one_for_rho_i_prime;
  return x;
}

}  // namespace acyc
