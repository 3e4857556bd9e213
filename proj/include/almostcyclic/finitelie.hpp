#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);
// (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<uint64_t, int> prime_power_base(uint64_t q);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);
// Least j >= 1 with q^j = 1 mod n; 0 if gcd(q, n) != 1.
uint64_t multiplicative_order(uint64_t q, uint64_t n);
// q^r + 1, throwing if it overflows 64 bits.
uint64_t power_plus_one(uint64_t q, int r);

struct ZsigmondyResult {
  enum class Status { Prime, ExceptionalPower, NoneFound };
  Status status = Status::NoneFound;
  uint64_t ell = 0;
  int exponent = 0;
  // For NoneFound: odd primes of q^(2r) - 1 with the least j such that they divide q^j - 1.
  std::vector<std::pair<uint64_t, uint64_t>> evidence;

  std::string status_name() const;
};

ZsigmondyResult zsigmondy(uint64_t q, int r);

// Least m such that the image of SL_2(p^d) under highest weight (1 + p^i) w1 is realized over GF(p^m).
int sl2_min_field(uint64_t p, int d, int i);

// Degree over GF(p) of the field generated by the traces x^(1+p^i), x in GF(p^d).
int sl2_trace_field_degree(uint64_t p, int d, int i);

struct Sl2Classification {
  uint64_t p = 0;
  int i = 0;
  uint64_t a_order = 0;
  std::vector<int64_t> exponents;  // (p^i+1), (p^i-1), -(p^i-1), -(p^i+1) mod a_order
  std::vector<std::pair<int64_t, int>> classes;  // exponent -> multiplicity, ascending
  int m_s = 0;
  bool cyclic = false;
  bool almost_cyclic = false;
  bool almost_cyclic_with_mult2 = false;
  std::string membership;  // "s", "s_squared" or "none"
};

Sl2Classification sl2_classify(uint64_t p, int i, uint64_t a_order);

struct Ev3Witness {
  uint64_t q = 0;
  int r = 0;
  uint64_t s_order = 0;
  std::string s_order_source;  // "zsigmondy_prime", "exceptional_power", "fallback_prime_power"
  std::vector<int64_t> exponents;     // eigenvalue exponents over the closure, ascending
  std::vector<uint64_t> orbit_sizes;  // Frobenius orbits of the nonzero exponents
  int one_mult = 0;
  int complement_dim = 0;
  int m_s = 0;
  bool complement_irreducible = false;
  uint64_t order_of_q = 0;
};

Ev3Witness ev3_witness(uint64_t q, int r);

struct X6xResult {
  uint64_t p = 0;
  int i = 0;
  int i_prime = 0;
  int j = 0;
  bool hypotheses_met = false;    // i | j, i' | j, i != i', i < j, i' < j
  bool one_for_rho_i = false;     // rho_i(s_i) has eigenvalue 1
  bool one_for_rho_i_prime = false;
  bool distinguished = false;     // present for rho_i and absent for rho_i'
};

// s_i has order p^i + 1; rho_k has highest weight (1 + p^k) w1.
X6xResult x6x_check(uint64_t p, int i, int i_prime, int j);

}  // namespace acyc
