#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "rothe/error.hpp"
#include "rothe/integer.hpp"
#include "rothe/polynomial.hpp"
#include "support.hpp"

using namespace rothe;
using testing_support::C;
using testing_support::X;
using testing_support::Y;
using testing_support::xy;

namespace {

const Ring R{4, 4};

} // namespace

TEST(IntegerTest, PromotesOnOverflow) {
  Integer a(std::int64_t{1} << 62);
  Integer b = a + a;
  EXPECT_FALSE(b.fits_int64());
  EXPECT_EQ(Integer::Big(1) << 63, b.to_big());
  EXPECT_EQ("9223372036854775808", b.to_string());

  Integer c = b - a - a;
  EXPECT_TRUE(c.is_zero());
  EXPECT_TRUE(c.fits_int64());

  Integer d = a * a;
  EXPECT_EQ(Integer::Big(1) << 124, d.to_big());
  EXPECT_EQ(-1, (-d).sign());
  EXPECT_EQ(Integer::parse("-21267647932558653966460912964485513216"), -d);
  EXPECT_THROW(Integer::parse("12x"), std::invalid_argument);
}

TEST(IntegerTest, MatchesMultiprecisionOnRandomProducts) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40),
                                                   std::int64_t{1} << 40);
  for (int k = 0; k < 200; ++k) {
    std::int64_t a = dist(rng), b = dist(rng), c = dist(rng);
    Integer x = Integer(a) * Integer(b) * Integer(c) - Integer(a);
    Integer::Big y = Integer::Big(a) * b * c - a;
    EXPECT_EQ(y, x.to_big());
  }
}

TEST(PolynomialTest, CanCompareInCanonicalForm) {
  auto f = X(R, 1) + Y(R, 2) - X(R, 1);
  EXPECT_EQ(Y(R, 2), f);
  EXPECT_EQ(1u, f.size());
  EXPECT_TRUE((X(R, 1) - X(R, 1)).is_zero());
  EXPECT_EQ("0", Polynomial(R).to_string());
  EXPECT_EQ("x1 + y2 - x1*y2", xy(R, 1, 2).to_string());
  EXPECT_THROW(X(R, 1) + X(Ring{3, 3}, 1), Error);
}

TEST(PolynomialTest, CanComputeOplus) {
  EXPECT_EQ(X(R, 1) + Y(R, 1) - X(R, 1) * Y(R, 1), xy(R, 1, 1));
  auto f = X(R, 2) * X(R, 2) - C(R, 3) * Y(R, 1);
  EXPECT_EQ(f, oplus(f, Polynomial(R)));
  EXPECT_EQ(C(R, 1), oplus(C(R, 1), f));
}

TEST(PolynomialTest, CanApplyDividedDifferences) {
  EXPECT_EQ(C(R, 1), divided_difference(X(R, 1), 1));
  EXPECT_TRUE(divided_difference(X(R, 1) * X(R, 2), 1).is_zero());
  EXPECT_EQ(X(R, 1) + X(R, 2), divided_difference(X(R, 1) * X(R, 1), 1));
  EXPECT_TRUE(divided_difference(Y(R, 1), 1).is_zero());
  EXPECT_EQ(C(R, -1), divided_difference(X(R, 3), 2));
}

TEST(PolynomialTest, CanApplyIsobaricOperators) {
  EXPECT_EQ(C(R, 1), isobaric(X(R, 1), 1));
  EXPECT_EQ(X(R, 1) + X(R, 2) - X(R, 1) * X(R, 2),
            isobaric(X(R, 1) * X(R, 1), 1));
  EXPECT_EQ(X(R, 1) + X(R, 2) - C(R, 1), isobaric(X(R, 2), 1));
  EXPECT_EQ(C(R, 1), isobaric(C(R, 1), 1));
}

TEST(PolynomialTest, CanTakeComponents) {
  EXPECT_EQ(X(R, 1), lowest_degree_component(X(R, 1) + X(R, 1) * X(R, 2)));
  auto h = X(R, 1) * Y(R, 2) - C(R, 2) * X(R, 3) * X(R, 3);
  EXPECT_EQ(h, lowest_degree_component(h));
  EXPECT_EQ(X(R, 1) + Y(R, 1), lowest_degree_component(xy(R, 1, 1)));
  EXPECT_THROW(lowest_degree_component(Polynomial(R)), Error);

  EXPECT_EQ(-Y(R, 1), negate_y(Y(R, 1)));
  auto even = X(R, 1) * Y(R, 1) * Y(R, 2);
  EXPECT_EQ(even, negate_y(even));
  EXPECT_EQ(X(R, 1) - Y(R, 1), negate_y(X(R, 1) + Y(R, 1)));

  EXPECT_EQ(X(R, 1), set_y_zero(xy(R, 1, 1)));
  EXPECT_EQ(C(R, 5), set_y_zero(C(R, 5)));
  EXPECT_TRUE(set_y_zero(Y(R, 1)).is_zero());
}

TEST(PolynomialTest, RingAxiomsHoldOnRandomInputs) {
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    auto a = testing_support::random_polynomial(rng, R, 4, 2);
    auto b = testing_support::random_polynomial(rng, R, 4, 2);
    auto c = testing_support::random_polynomial(rng, R, 4, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);

    PolynomialSum sum(R);
    sum.add(a);
    sum.add(b, -1);
    sum.add(c);
    EXPECT_EQ(a - b + c, sum.result());
  }
}

TEST(PolynomialTest, DividedDifferenceMatchesPointEvaluation) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> point(-9, 9);
  for (int k = 0; k < 40; ++k) {
    auto f = testing_support::random_polynomial(rng, R, 5, 3);
    for (unsigned i = 1; i < R.nx; ++i) {
      auto d = divided_difference(f, i);
      std::vector<long long> xs(R.nx), ys(R.ny);
      for (auto &v : xs)
        v = point(rng);
      for (auto &v : ys)
        v = point(rng);
      if (xs[i - 1] == xs[i])
        xs[i] += 1;
      auto swapped = xs;
      std::swap(swapped[i - 1], swapped[i]);
      auto num = testing_support::evaluate(f, xs, ys) -
                 testing_support::evaluate(f, swapped, ys);
      auto lhs = testing_support::evaluate(d, xs, ys) *
                 Integer(static_cast<std::int64_t>(xs[i - 1] - xs[i]));
      EXPECT_EQ(num, lhs) << f.to_string() << " at i = " << i;
    }
  }
}

TEST(PolynomialTest, OperatorRelationsHoldOnRandomInputs) {
  std::mt19937 rng(2024);
  const Ring r{5, 2};
  for (int k = 0; k < 120; ++k) {
    auto f = testing_support::random_polynomial(rng, r, 5, 4);
    for (unsigned i = 1; i < r.nx; ++i) {
      EXPECT_TRUE(divided_difference(divided_difference(f, i), i).is_zero());
      auto p = isobaric(f, i);
      EXPECT_EQ(p, isobaric(p, i));
    }
    for (unsigned i = 1; i + 1 < r.nx; ++i)
      EXPECT_EQ(isobaric(isobaric(isobaric(f, i), i + 1), i),
                isobaric(isobaric(isobaric(f, i + 1), i), i + 1));
    for (unsigned i = 1; i < r.nx; ++i)
      for (unsigned j = i + 2; j < r.nx; ++j)
        EXPECT_EQ(isobaric(isobaric(f, i), j), isobaric(isobaric(f, j), i));
  }
}

TEST(PolynomialTest, SwapCommutesWithAntisymmetricDivision) {
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    auto f = testing_support::random_polynomial(rng, R, 5, 3);
    auto anti = f - swap_x(f, 2);
    EXPECT_NO_THROW(divided_difference(anti, 2));
    EXPECT_EQ(swap_x(swap_x(f, 2), 2), f);
  }
}

TEST(PolynomialTest, CanSubstituteVariables) {
  const Ring small{2, 1};
  auto f = Polynomial::x(small, 1) * Polynomial::y(small, 1) +
           Polynomial::x(small, 2);
  std::vector<Polynomial> xs{X(R, 3), X(R, 1) + C(R, 1)};
  std::vector<Polynomial> ys{Y(R, 4)};
  EXPECT_EQ(X(R, 3) * Y(R, 4) + X(R, 1) + C(R, 1),
            f.substitute(xs, ys, R));
}

TEST(LemmaProductTest, CanEvaluateSmallCases) {
  const Ring r{2, 4};
  std::vector<unsigned> one{1};
  EXPECT_EQ(Polynomial::constant(r, 1), lemma41_rhs(r, 1, one));
  EXPECT_EQ(isobaric(xy(r, 1, 1), 1), lemma41_rhs(r, 1, one));

  std::vector<unsigned> two{1, 2};
  EXPECT_EQ(isobaric(xy(r, 1, 1) * xy(r, 1, 2), 1), lemma41_rhs(r, 1, two));

  EXPECT_THROW(lemma41_rhs(r, 1, std::vector<unsigned>{}), Error);
}

TEST(LemmaProductTest, HoldsForShortSequences) {
  const Ring r{3, 4};
  std::vector<std::vector<unsigned>> seqs{{}};
  for (unsigned len = 1; len <= 4; ++len) {
    std::vector<std::vector<unsigned>> next;
    for (const auto &s : seqs) {
      if (s.size() != len - 1)
        continue;
      for (unsigned v = 1; v <= 4; ++v) {
        auto t = s;
        t.push_back(v);
        next.push_back(t);
      }
    }
    seqs.insert(seqs.end(), next.begin(), next.end());
  }
  unsigned checked = 0;
  for (const auto &a : seqs) {
    if (a.empty())
      continue;
    for (unsigned rr = 1; rr <= 2; ++rr) {
      Polynomial product = Polynomial::constant(r, 1);
      for (auto v : a)
        product *= xy(r, rr, v);
      auto rhs = lemma41_rhs(r, rr, a);
      EXPECT_EQ(isobaric(product, rr), rhs);
      EXPECT_EQ(rhs, swap_x(rhs, rr));
      ++checked;
    }
  }
  EXPECT_EQ(2u * (4 + 16 + 64 + 256), checked);
}
