#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "almostcyclic/rootsys.hpp"

using namespace acyc;

namespace {

struct Counts {
  const char* family;
  int rank;
  size_t roots;
  uint64_t weyl;
  int e;
};

// |Phi| and |W| from the closed formulas for each Cartan type.
const Counts kCounts[] = {
    {"A", 1, 2, 2, 1},          {"A", 2, 6, 6, 1},         {"A", 4, 20, 120, 1},
    {"B", 2, 8, 8, 2},          {"B", 3, 18, 48, 2},       {"C", 3, 18, 48, 2},
    {"C", 4, 32, 384, 2},       {"D", 4, 24, 192, 1},      {"D", 5, 40, 1920, 1},
    {"G", 2, 12, 12, 3},        {"F", 4, 48, 1152, 2},     {"E", 6, 72, 51840, 1},
    {"E", 7, 126, 2903040, 1},  {"E", 8, 240, 696729600, 1},
};

}  // namespace

TEST(RootSystem, RootCountsAndWeylOrders) {
  for (const auto& c : kCounts) {
    auto rs = build_root_system(c.family, c.rank);
    EXPECT_EQ(rs->roots().size(), c.roots) << rs->name();
    EXPECT_EQ(rs->positive_roots().size(), c.roots / 2) << rs->name();
    EXPECT_EQ(rs->weyl_order(), c.weyl) << rs->name();
    EXPECT_EQ(rs->e_value(), c.e) << rs->name();
  }
}

TEST(RootSystem, G2CartanConvention) {
  auto rs = build_root_system("G", 2);
  // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3, <alpha_1, alpha_2^vee> = -1.
  EXPECT_EQ(rs->cartan(0, 0), 2);
  EXPECT_EQ(rs->cartan(0, 1), -3);
  EXPECT_EQ(rs->cartan(1, 0), -1);
  EXPECT_EQ(rs->length_factor(0), 1);
  EXPECT_EQ(rs->length_factor(1), 3);
}

TEST(RootSystem, InvalidInputsAreRejected) {
  EXPECT_THROW(build_root_system("H", 3), Error);
  EXPECT_THROW(build_root_system("E", 5), Error);
  EXPECT_THROW(build_root_system("B", 1), Error);
  EXPECT_THROW(build_root_system("A", 9), Error);
  try {
    build_root_system("Q", 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidType);
  }
}

TEST(RootSystem, HighestRootHeights) {
  // Coxeter number minus one.
  const std::vector<std::tuple<const char*, int, int>> cases = {
      {"A", 3, 3}, {"B", 3, 5}, {"C", 3, 5}, {"D", 4, 5}, {"G", 2, 5}, {"F", 4, 11}, {"E", 6, 11}, {"E", 8, 29}};
  for (const auto& [f, n, h] : cases) {
    auto rs = build_root_system(f, n);
    int best = 0;
    for (const auto& c : rs->positive_root_coords()) {
      int s = 0;
      for (int x : c) s += x;
      best = std::max(best, s);
    }
    EXPECT_EQ(best, h) << rs->name();
  }
}

TEST(RootSystem, WeylOrbitSizes) {
  auto a3 = build_root_system("A", 3);
  EXPECT_EQ(weyl_orbit(*a3, a3->fundamental(2)).size(), 6u);
  auto e6 = build_root_system("E", 6);
  EXPECT_EQ(weyl_orbit(*e6, e6->fundamental(1)).size(), 27u);
  auto e7 = build_root_system("E", 7);
  EXPECT_EQ(weyl_orbit(*e7, e7->fundamental(7)).size(), 56u);
  auto g2 = build_root_system("G", 2);
  EXPECT_EQ(weyl_orbit(*g2, g2->rho()).size(), 12u);
}

TEST(RootSystem, DominanceOrder) {
  auto a2 = build_root_system("A", 2);
  const Weight adj{1, 1};
  EXPECT_TRUE(dominance_leq(*a2, a2->zero(), adj));
  EXPECT_FALSE(dominance_leq(*a2, a2->fundamental(1), adj));
  EXPECT_EQ(depth_below(*a2, a2->zero(), adj), 2);
  EXPECT_EQ(depth_below(*a2, a2->fundamental(1), adj), -1);
  const auto below = dominant_subweights(*a2, Weight{3, 0});
  EXPECT_EQ(below, (std::vector<Weight>{Weight{3, 0}, Weight{1, 1}, Weight{0, 0}}));
}

TEST(RootSystem, RadicalAndMinuscule) {
  auto c3 = build_root_system("C", 3);
  EXPECT_FALSE(is_radical(*c3, c3->fundamental(1)));
  EXPECT_TRUE(is_radical(*c3, c3->fundamental(2)));
  EXPECT_TRUE(is_minuscule(*c3, c3->fundamental(1)));
  EXPECT_FALSE(is_minuscule(*c3, c3->fundamental(3)));
  auto d5 = build_root_system("D", 5);
  EXPECT_TRUE(is_minuscule(*d5, d5->fundamental(4)));
  EXPECT_TRUE(is_minuscule(*d5, d5->fundamental(5)));
  auto e8 = build_root_system("E", 8);
  for (int i = 1; i <= 8; ++i) EXPECT_TRUE(is_radical(*e8, e8->fundamental(i)));
}

TEST(RootSystem, EpsilonCoordinatesOfG2) {
  auto g2 = build_root_system("G", 2);
  const auto w1 = to_eps(*g2, g2->fundamental(1));
  const auto w2 = to_eps(*g2, g2->fundamental(2));
  EXPECT_EQ(w1, (RationalVector{0, -1, 1}));
  EXPECT_EQ(w2, (RationalVector{-1, -1, 2}));
  EXPECT_EQ(from_eps(*g2, RationalVector{1, -1, 0}), g2->simple_roots()[0]);
  EXPECT_EQ(from_eps(*g2, RationalVector{-2, 1, 1}), g2->simple_roots()[1]);
}

TEST(RootSystem, EpsilonRoundTrip) {
  for (const auto& c : kCounts) {
    auto rs = build_root_system(c.family, c.rank);
    if (rs->family() == Family::E) continue;
    for (const auto& r : rs->roots()) EXPECT_EQ(from_eps(*rs, to_eps(*rs, r)), r);
    EXPECT_EQ(from_eps(*rs, to_eps(*rs, rs->rho())), rs->rho());
  }
}

TEST(RootSystem, SpinWeightOutsideLattice) {
  auto b3 = build_root_system("B", 3);
  EXPECT_EQ(from_eps(*b3, RationalVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}), b3->fundamental(3));
  try {
    from_eps(*b3, RationalVector{Rational(1, 2), 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInLattice);
  }
}

TEST(RootSystem, InvariantFormOnRoots) {
  auto b2 = build_root_system("B", 2);
  std::set<Rational> lengths;
  for (const auto& r : b2->roots()) lengths.insert(b2->form(r, r));
  ASSERT_EQ(lengths.size(), 2u);
  EXPECT_EQ(*lengths.rbegin() / *lengths.begin(), 2);
}

TEST(Weight, ArithmeticAndRendering) {
  Weight a{1, -2, 3};
  Weight b{0, 1, 1};
  EXPECT_EQ(a + b, (Weight{1, -1, 4}));
  EXPECT_EQ(a - b, (Weight{1, -3, 2}));
  EXPECT_EQ(2 * b, (Weight{0, 2, 2}));
  EXPECT_EQ(-a, (Weight{-1, 2, -3}));
  EXPECT_EQ(a.str(), "(1,-2,3)");
  EXPECT_FALSE(a.is_dominant());
  EXPECT_TRUE(b.is_restricted(2));
  EXPECT_FALSE((Weight{0, 2, 2}).is_restricted(2));
}
