#include <gtest/gtest.h>

#include "almostcyclic/torus.hpp"

using namespace acyc;

TEST(AbelianValue, GroupOperationsAndRendering) {
  const ValueContext ctx{2, 12};
  const auto a1 = AbelianValue::generator(ctx, 0);
  const auto a2 = AbelianValue::generator(ctx, 1);
  const auto z = AbelianValue::root_of_unity(ctx, 1);
  const auto v = a1.times(2) - a2 + z.times(3);
  EXPECT_EQ(v.str(), "a1^2*a2^-1*z^3");
  EXPECT_EQ(AbelianValue(ctx).str(), "1");
  EXPECT_TRUE((v - v).is_identity());
  EXPECT_EQ(z.times(12), AbelianValue(ctx));
  EXPECT_EQ(AbelianValue::minus_one(ctx), z.times(6));
  EXPECT_TRUE(AbelianValue::minus_one(ctx).is_involution());
  EXPECT_FALSE(z.is_involution());
}

TEST(AbelianValue, MinusOneNeedsEvenTorsion) {
  EXPECT_THROW(AbelianValue::minus_one(ValueContext{0, 9}), Error);
  EXPECT_THROW(AbelianValue::minus_one(ValueContext{1, 1}), Error);
}

TEST(AbelianValue, ContextMismatchIsReported) {
  const auto a = AbelianValue::root_of_unity(ValueContext{0, 4}, 1);
  const auto b = AbelianValue::root_of_unity(ValueContext{0, 6}, 1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContextMismatch);
  }
}

TEST(AbelianValue, Division) {
  const ValueContext ctx{1, 8};
  const auto v = AbelianValue::generator(ctx, 0).times(4) + AbelianValue::root_of_unity(ctx, 6);
  const auto h = v.divide(2);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->times(2), v);
  EXPECT_EQ(h->str(), "a1^2*z^3");
  EXPECT_FALSE(AbelianValue::generator(ctx, 0).divide(2).has_value());
  EXPECT_FALSE(AbelianValue::root_of_unity(ValueContext{0, 8}, 1).divide(2).has_value());
}

TEST(TorusElement, FundamentalValuesEvaluate) {
  auto a2 = build_root_system(Family::A, 2);
  const ValueContext ctx{0, 7};
  auto s = torus_from_fundamental_values(a2, ctx, {AbelianValue::root_of_unity(ctx, 1), AbelianValue::root_of_unity(ctx, 3)});
  EXPECT_EQ(s.evaluate(Weight{1, 2}).str(), "1");
  EXPECT_EQ(s.evaluate(Weight{2, -1}).str(), "z^6");
  EXPECT_THROW(torus_from_fundamental_values(a2, ctx, {AbelianValue(ctx)}), Error);
}

TEST(TorusElement, EpsilonValuesInTypeA) {
  auto a2 = build_root_system(Family::A, 2);
  const ValueContext ctx{0, 7};
  auto z = [&](int k) { return AbelianValue::root_of_unity(ctx, k); };
  auto s = torus_from_eps_values(a2, ctx, {z(1), z(2), z(4)});
  EXPECT_EQ(s.image(0), z(1));
  EXPECT_EQ(s.image(1), z(3));
  EXPECT_THROW(torus_from_eps_values(a2, ctx, {z(1), z(2), z(3)}), Error);
}

TEST(TorusElement, SpinValuesByHalving) {
  auto b2 = build_root_system(Family::B, 2);
  const ValueContext ctx{0, 12};
  auto z = [&](int k) { return AbelianValue::root_of_unity(ctx, k); };
  auto s = torus_from_eps_values(b2, ctx, {z(2), z(4)});
  EXPECT_EQ(s.image(0), z(2));
  EXPECT_EQ(s.image(1).times(2), z(6));
  auto t = torus_from_eps_values(b2, ctx, {z(2), z(4)}, {{2, z(9)}});
  EXPECT_EQ(t.image(1), z(9));
  EXPECT_THROW(torus_from_eps_values(b2, ctx, {z(2), z(4)}, {{2, z(4)}}), Error);
  const ValueContext free{1, 1};
  const auto a = AbelianValue::generator(free, 0);
  auto f = torus_from_eps_values(b2, free, {a, AbelianValue(free)});
  EXPECT_TRUE(f.has_image(0));
  EXPECT_FALSE(f.has_image(1));
  EXPECT_EQ(f.evaluate(Weight{0, 2}), a);
  try {
    f.evaluate(Weight{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpinEvaluation);
  }
}

TEST(TorusElement, EpsilonRouteForTypeE) {
  auto e6 = build_root_system(Family::E, 6);
  const ValueContext ctx{0, 5};
  try {
    torus_from_eps_values(e6, ctx, std::vector<AbelianValue>(8, AbelianValue(ctx)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
}

TEST(TorusElement, RegularityPredicates) {
  auto a1 = build_root_system(Family::A, 1);
  const ValueContext ctx{0, 8};
  auto s = [&](int k) { return torus_from_fundamental_values(a1, ctx, {AbelianValue::root_of_unity(ctx, k)}); };
  EXPECT_FALSE(is_regular(s(4)));
  EXPECT_TRUE(is_central(s(4)));
  EXPECT_TRUE(is_regular(s(1)));
  EXPECT_TRUE(is_strictly_regular(s(1)));
  EXPECT_TRUE(is_regular(s(2)));
  EXPECT_FALSE(is_strictly_regular(s(2)));
}

TEST(Sampling, CounterHashIsStable) {
  EXPECT_EQ(counter_hash(0, 0, 0), counter_hash(0, 0, 0));
  EXPECT_NE(counter_hash(0, 0, 0), counter_hash(0, 0, 1));
  EXPECT_NE(counter_hash(0, 1, 0), counter_hash(1, 0, 0));
  auto d4 = build_root_system(Family::D, 4);
  const auto a = sample_torus(d4, 60, 7, 123);
  const auto b = sample_torus(d4, 60, 7, 123);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(a.image(i), b.image(i));
    EXPECT_GE(a.image(i).torsion(), 0);
    EXPECT_LT(a.image(i).torsion(), 60);
  }
  EXPECT_THROW(sample_torus(d4, 0, 0, 0), Error);
}
