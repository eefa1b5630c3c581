#include <gtest/gtest.h>

#include <map>

#include "rothe/oracle.hpp"
#include "support.hpp"

using namespace rothe;
using testing_support::C;
using testing_support::P;
using testing_support::X;
using testing_support::Y;
using testing_support::xy;

TEST(OracleTest, CanBuildLongestElements) {
  EXPECT_EQ(C(ring_for(1), 1), grothendieck_longest(1));
  const auto r2 = ring_for(2);
  EXPECT_EQ(X(r2, 1) + Y(r2, 1) - X(r2, 1) * Y(r2, 1), grothendieck_longest(2));
  const auto r3 = ring_for(3);
  EXPECT_EQ(xy(r3, 1, 1) * xy(r3, 1, 2) * xy(r3, 2, 1), grothendieck_longest(3));
  EXPECT_EQ(X(r2, 1) - Y(r2, 1), schubert_longest(2));
}

TEST(OracleTest, CanComputeSmallPolynomials) {
  GrothendieckOracle o(3);
  const auto r = o.ring();
  EXPECT_EQ(C(r, 1), o.double_grothendieck(Permutation::identity(3)));
  EXPECT_EQ(grothendieck_longest(3), o.double_grothendieck(P("321")));

  auto a = xy(r, 1, 2), b = xy(r, 2, 1);
  auto g132 = o.double_grothendieck(P("132"));
  EXPECT_EQ(a + b - a * b, g132);
  EXPECT_EQ(15u, g132.size());

  EXPECT_EQ(X(r, 1) + X(r, 2) - Y(r, 1) - Y(r, 2),
            o.double_schubert(P("132")));
  EXPECT_EQ(X(r, 1) + X(r, 2), o.single_schubert(P("132")));
  EXPECT_EQ(C(r, 1), o.single_grothendieck(Permutation::identity(3)));
  EXPECT_EQ(C(r, 1), o.double_schubert(Permutation::identity(3)));

  GrothendieckOracle o2(2);
  EXPECT_EQ(X(o2.ring(), 1), o2.single_grothendieck(P("21")));
}

TEST(OracleTest, IdentityIsOneForSmallN) {
  for (unsigned n = 1; n <= 5; ++n) {
    GrothendieckOracle o(n);
    EXPECT_EQ(C(o.ring(), 1), o.double_grothendieck(Permutation::identity(n)));
    EXPECT_EQ(C(o.ring(), 1), o.double_schubert(Permutation::identity(n)));
  }
}

TEST(OracleTest, RecursionIsPathIndependent) {
  for (unsigned n = 2; n <= 5; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      const auto g = o.double_grothendieck(w);
      const auto s = o.double_schubert(w);
      for (unsigned i = 1; i < n; ++i) {
        if (w(i) > w(i + 1))
          continue;
        auto up = w.times_simple(i);
        EXPECT_EQ(g, isobaric(o.double_grothendieck(up), i))
            << w.to_string() << " via s_" << i;
        EXPECT_EQ(s, divided_difference(o.double_schubert(up), i))
            << w.to_string() << " via s_" << i;
      }
    }
  }
}

TEST(OracleTest, LowestComponentGivesSchubert) {
  for (unsigned n = 1; n <= 5; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      auto g = o.double_grothendieck(w);
      auto low = lowest_degree_component(g);
      EXPECT_EQ(w.length(), low.terms().front().monomial.degree());
      EXPECT_EQ(o.double_schubert(w), negate_y(low)) << w.to_string();
      EXPECT_EQ(o.double_schubert(w), o.double_schubert_from_grothendieck(w));
    }
  }
}

TEST(OracleTest, SingleVersionsAreSpecializations) {
  for (unsigned n = 1; n <= 5; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      EXPECT_EQ(set_y_zero(o.double_grothendieck(w)),
                o.single_grothendieck(w));
      EXPECT_EQ(set_y_zero(o.double_schubert(w)), o.single_schubert(w));
    }
  }
}

TEST(OracleTest, SweepsMatchMemoizedRecursion) {
  for (unsigned n = 1; n <= 5; ++n) {
    GrothendieckOracle o(n);
    std::map<Permutation, int> seen;
    sweep_double_grothendieck(n, [&](const Permutation &w,
                                     const Polynomial &g) {
      ++seen[w];
      EXPECT_EQ(o.double_grothendieck(w), g) << w.to_string();
    });
    sweep_double_schubert(n, [&](const Permutation &w, const Polynomial &s) {
      ++seen[w];
      EXPECT_EQ(o.double_schubert(w), s) << w.to_string();
    });
    EXPECT_EQ(all_permutations(n).size(), seen.size());
    for (const auto &[w, count] : seen)
      EXPECT_EQ(2, count) << w.to_string();
  }
}
