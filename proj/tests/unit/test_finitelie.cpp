#include <gtest/gtest.h>

#include "almostcyclic/errors.hpp"
#include "almostcyclic/finitelie.hpp"

using namespace acyc;

namespace {

uint64_t slow_pow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

// Smallest odd prime dividing q^r + 1 and no q^j - 1 with j <= r, or 0.
uint64_t brute_zsigmondy(uint64_t q, int r) {
  uint64_t n = slow_pow(q, r) + 1;
  std::vector<uint64_t> primes;
  while (n % 2 == 0) n /= 2;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  for (uint64_t ell : primes) {
    bool primitive = true;
    for (int j = 1; j <= r; ++j) {
      if ((slow_pow(q, j) - 1) % ell == 0) primitive = false;
    }
    if (primitive) return ell;
  }
  return 0;
}

}  // namespace

TEST(Arithmetic, FactorizeAndOrders) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(1), (std::vector<std::pair<uint64_t, int>>{}));
  EXPECT_EQ(prime_power_base(64), (std::pair<uint64_t, int>{2, 6}));
  EXPECT_EQ(prime_power_base(12), (std::pair<uint64_t, int>{0, 0}));
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(2, 9), 6u);
  EXPECT_EQ(multiplicative_order(3, 6), 0u);
  EXPECT_EQ(pow_mod(3, 100, 7), 4u);
  EXPECT_THROW(power_plus_one(1ull << 32, 2), Error);
}

TEST(Zsigmondy, AgreesWithBruteForce) {
  for (uint64_t q = 2; q <= 64; ++q) {
    if (prime_power_base(q).first == 0) continue;
    for (int r = 1; r <= 6; ++r) {
      const auto z = zsigmondy(q, r);
      const uint64_t ell = brute_zsigmondy(q, r);
      if (z.status == ZsigmondyResult::Status::Prime) {
        EXPECT_EQ(z.ell, ell) << q << "^" << r;
      } else if (z.status == ZsigmondyResult::Status::ExceptionalPower) {
        EXPECT_EQ(r, 1);
        EXPECT_EQ(slow_pow(z.ell, z.exponent), q + 1);
        EXPECT_TRUE(ell == 0 || ell == z.ell) << q;
      } else {
        EXPECT_EQ(ell, 0u) << q << "^" << r;
      }
    }
  }
}

TEST(Zsigmondy, ExceptionalCases) {
  const auto e8 = zsigmondy(8, 1);
  EXPECT_EQ(e8.status_name(), "exceptional_power");
  EXPECT_EQ(e8.ell, 3u);
  EXPECT_EQ(e8.exponent, 2);
  const auto e3 = zsigmondy(3, 1);
  EXPECT_EQ(e3.status_name(), "exceptional_power");
  EXPECT_EQ(e3.ell, 2u);
  EXPECT_EQ(e3.exponent, 2);
  const auto n = zsigmondy(2, 3);
  EXPECT_EQ(n.status_name(), "none_found");
  EXPECT_EQ(n.evidence, (std::vector<std::pair<uint64_t, uint64_t>>{{3, 2}, {7, 3}}));
  EXPECT_EQ(zsigmondy(2, 2).ell, 5u);
  EXPECT_EQ(zsigmondy(5, 1).ell, 3u);
  EXPECT_THROW(zsigmondy(6, 1), Error);
  EXPECT_THROW(zsigmondy(2, 0), Error);
}

TEST(Sl2Fields, MinimalFieldMatchesTraceField) {
  for (uint64_t p : {2, 3, 5}) {
    for (int d = 2; d <= 6; ++d) {
      for (int i = 1; i <= 12; ++i) {
        if (i % d == 0) {
          EXPECT_THROW(sl2_min_field(p, d, i), Error);
          continue;
        }
        EXPECT_EQ(sl2_min_field(p, d, i), sl2_trace_field_degree(p, d, i)) << p << " " << d << " " << i;
      }
    }
  }
}

TEST(Sl2Fields, FrozenValues) {
  EXPECT_EQ(sl2_min_field(2, 2, 1), 1);
  EXPECT_EQ(sl2_min_field(2, 4, 2), 2);
  EXPECT_EQ(sl2_min_field(2, 4, 6), 2);
  EXPECT_EQ(sl2_min_field(2, 4, 1), 4);
  EXPECT_EQ(sl2_min_field(3, 6, 3), 3);
  EXPECT_EQ(sl2_min_field(3, 6, 2), 6);
  EXPECT_EQ(sl2_min_field(5, 5, 7), 5);
}

TEST(Sl2Classify, TwistedFourDimensionalModules) {
  const auto c = sl2_classify(2, 1, 3);
  EXPECT_EQ(c.exponents, (std::vector<int64_t>{0, 1, 2, 0}));
  EXPECT_TRUE(c.almost_cyclic_with_mult2);
  EXPECT_EQ(c.m_s, 2);
  EXPECT_EQ(c.membership, "s");
  const auto c8 = sl2_classify(3, 1, 8);
  EXPECT_TRUE(c8.almost_cyclic_with_mult2);
  EXPECT_EQ(c8.membership, "s_squared");
  const auto c4 = sl2_classify(3, 1, 4);
  EXPECT_FALSE(c4.almost_cyclic);
  EXPECT_EQ(c4.m_s, 2);
  for (uint64_t p : {2, 3, 5}) {
    for (int i : {1, 2}) EXPECT_TRUE(sl2_classify(p, i, p == 3 ? 8 : p + 1).almost_cyclic_with_mult2) << p << i;
  }
  EXPECT_THROW(sl2_classify(3, 1, 2), Error);
}

TEST(Ev3, WitnessesForSmallParameters) {
  for (auto [q, r] : std::vector<std::pair<uint64_t, int>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto w = ev3_witness(q, r);
    EXPECT_EQ(w.one_mult, 2 * r) << q << "," << r;
    EXPECT_TRUE(w.complement_irreducible) << q << "," << r;
    EXPECT_EQ(w.exponents.size(), static_cast<size_t>(4 * r));
    EXPECT_EQ(w.order_of_q, static_cast<uint64_t>(2 * r));
  }
  EXPECT_EQ(ev3_witness(2, 2).s_order, 5u);
  EXPECT_EQ(ev3_witness(3, 2).s_order, 5u);
  const auto fallback = ev3_witness(2, 3);
  EXPECT_EQ(fallback.s_order, 9u);
  EXPECT_EQ(fallback.s_order_source, "fallback_prime_power");
  EXPECT_THROW(ev3_witness(3, 1), Error);
}

TEST(X6x, EigenvalueOneDistinguishesTwists) {
  const auto x = x6x_check(2, 2, 1, 4);
  EXPECT_TRUE(x.hypotheses_met);
  EXPECT_TRUE(x.one_for_rho_i);
  EXPECT_FALSE(x.one_for_rho_i_prime);
  EXPECT_TRUE(x.distinguished);
  const auto y = x6x_check(2, 1, 2, 2);
  EXPECT_TRUE(y.one_for_rho_i);
  EXPECT_TRUE(y.one_for_rho_i_prime);
  EXPECT_FALSE(y.distinguished);
}
