#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "rothe/error.hpp"
#include "rothe/oracle.hpp"
#include "rothe/tableaux.hpp"
#include "support.hpp"

using namespace rothe;
using testing_support::C;
using testing_support::P;
using testing_support::X;
using testing_support::Y;
using testing_support::xy;

namespace {

using Lists = std::vector<std::vector<unsigned>>;

std::set<Lists> as_set(const std::vector<SetValuedTableau> &ts) {
  std::set<Lists> out;
  for (const auto &t : ts)
    out.insert(testing_support::as_lists(t));
  return out;
}

SetValuedTableau tableau(const Permutation &w,
                         std::vector<std::vector<unsigned>> sets) {
  SetValuedTableau t;
  t.shape = rothe_diagram(w);
  for (const auto &s : sets)
    t.entries.push_back(entry_set(s));
  return t;
}

// D(426315) row-major: (1,1) (1,2) (1,3) (2,1) (3,1) (3,3) (3,5) (4,1).
SetValuedTableau sample_svrt() {
  return tableau(P("426315"),
                 {{1}, {1}, {1}, {2}, {3}, {2, 3}, {1, 2}, {4}});
}

SetValuedTableau sample_limit() {
  return tableau(P("426315"),
                 {{1}, {1}, {1}, {2}, {3}, {1, 2}, {1, 2}, {4}});
}

SetValuedTableau sample_pick() {
  return tableau(P("426315"), {{1}, {1}, {1}, {2}, {3}, {2}, {1}, {4}});
}

} // namespace

TEST(EntrySetTest, CanConvertValues) {
  auto s = entry_set({3, 1, 2});
  EXPECT_EQ((std::vector<unsigned>{1, 2, 3}), entry_values(s));
  EXPECT_EQ(1u, entry_min(s));
  EXPECT_EQ(3u, entry_max(s));
  EXPECT_EQ(3u, entry_count(s));
  EXPECT_TRUE(entry_contains(s, 2));
  EXPECT_FALSE(entry_contains(s, 4));
  EXPECT_EQ("{3,2,1}", entry_to_string(s));
}

TEST(SvrtTest, CanEnumerateSmallCases) {
  auto t132 = enumerate_svrt(P("132"));
  ASSERT_EQ(3u, t132.size());
  std::set<Lists> expected{{{1}}, {{2}}, {{1, 2}}};
  EXPECT_EQ(expected, as_set(t132));

  auto id = enumerate_svrt(Permutation::identity(4));
  ASSERT_EQ(1u, id.size());
  EXPECT_TRUE(id.front().entries.empty());

  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(1u, enumerate_svrt(Permutation::longest(n)).size());
    EXPECT_EQ(1u, enumerate_srt(Permutation::longest(n)).size());
  }
  EXPECT_EQ(2u, enumerate_srt(P("132")).size());
  EXPECT_EQ(1u, enumerate_srt(Permutation::identity(3)).size());
}

TEST(SvrtTest, MatchesBruteForceEnumeration) {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto &w : all_permutations(n)) {
      auto svrt = enumerate_svrt(w);
      auto srt = enumerate_srt(w);
      auto brute = testing_support::brute_svrt(w, false);
      auto brute_single = testing_support::brute_svrt(w, true);
      EXPECT_EQ(brute.size(), svrt.size()) << w.to_string();
      EXPECT_EQ(std::set<Lists>(brute.begin(), brute.end()), as_set(svrt))
          << w.to_string();
      EXPECT_EQ(std::set<Lists>(brute_single.begin(), brute_single.end()),
                as_set(srt))
          << w.to_string();
      for (const auto &t : svrt) {
        EXPECT_TRUE(is_svrt(w, t));
        EXPECT_EQ(t.single_valued(), is_srt(w, t));
      }
    }
}

TEST(SvrtTest, SampleTableauIsValid) {
  const auto w = P("426315");
  auto b = sample_svrt();
  EXPECT_TRUE(is_svrt(w, b));
  EXPECT_FALSE(is_srt(w, b));
  EXPECT_EQ(10u, b.size());
  auto all = enumerate_svrt(w);
  EXPECT_NE(all.end(), std::find(all.begin(), all.end(), b));

  auto broken = b;
  broken.entries[4] = entry_set({2}); // (3,1) below (2,1) = {2}
  EXPECT_FALSE(is_svrt(w, broken));
}

TEST(SvrtTest, EnumerationIsInRowMajorOrder) {
  for (const auto &w : all_permutations(4)) {
    auto ts = enumerate_svrt(w);
    for (const auto &t : ts)
      EXPECT_EQ(rothe_diagram(w), t.shape);
  }
}

TEST(LimitTableauTest, CanEnumerateSmallCases) {
  EXPECT_EQ(3u, enumerate_lsvrt(P("132")).size());
  EXPECT_EQ(1u, enumerate_lsvrt(Permutation::identity(3)).size());
  EXPECT_EQ(1u, enumerate_lsvrt(Permutation::longest(4)).size());
}

TEST(LimitTableauTest, SampleFillingLeavesEscapeSet) {
  // This filling has 1 at (3,3), but (1,3) is 1 in every SRT, so
  // E_(3,3) = {2,3}. It admits its selection without being in LSVRT.
  const auto w = P("426315");
  EXPECT_EQ(entry_set({2, 3}), escape_set_E(w, {3, 3}));
  EXPECT_TRUE(admits_srt_selection(w, sample_limit()));
  EXPECT_FALSE(is_lsvrt(w, sample_limit()));
  EXPECT_FALSE(is_svrt(w, sample_limit()));
  auto pick = sample_pick();
  EXPECT_TRUE(is_srt(w, pick));
  for (std::size_t k = 0; k < pick.entries.size(); ++k)
    EXPECT_EQ(pick.entries[k], pick.entries[k] & sample_limit().entries[k]);

  auto trimmed = sample_limit();
  const auto k = trimmed.shape.index_of({3, 3});
  trimmed.entries[k] &= escape_set_E(w, {3, 3});
  EXPECT_TRUE(is_lsvrt(w, trimmed));
  auto all = enumerate_lsvrt(w);
  EXPECT_NE(all.end(), std::find(all.begin(), all.end(), trimmed));
  EXPECT_EQ(all.end(), std::find(all.begin(), all.end(), sample_limit()));
}

TEST(LimitTableauTest, SelectionClassBreaksLimitSum) {
  // Summing the escape-set weights over every filling that admits an SRT
  // selection overcounts already for 231.
  for (const auto &w : all_permutations(3)) {
    const RotheCells cells(w);
    const auto escape = escape_sets(w);
    const Ring r = ring_for(3);
    PolynomialSum wide(r);
    std::vector<EntrySet> e(cells.size(), 1);
    std::size_t extra = 0;
    while (true) {
      SetValuedTableau t{cells.diagram, e};
      if (admits_srt_selection(w, t)) {
        extra += !is_lsvrt(w, t);
        Polynomial p = C(r, 1);
        for (std::size_t k = 0; k < e.size(); ++k) {
          for (unsigned v : entry_values(e[k]))
            p *= testing_support::xy(r, v, cells.y_index(k, v));
          for (unsigned v : entry_values(escape[k] & ~e[k]))
            p *= (C(r, 1) - X(r, v)) * (C(r, 1) - Y(r, cells.y_index(k, v)));
        }
        wide.add(p);
      }
      std::size_t k = 0;
      while (k < e.size() && ++e[k] >= (EntrySet{1} << cells.row(k)))
        e[k++] = 1;
      if (k == e.size())
        break;
    }
    EXPECT_EQ(extra == 0, wide.result() == formula_theorem14_limit(w))
        << w.to_string();
    if (w == P("231")) {
      EXPECT_EQ(1u, extra);
    }
  }
}

TEST(LimitTableauTest, MatchesBruteForceEnumeration) {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto &w : all_permutations(n)) {
      auto srt = testing_support::brute_svrt(w, true);
      const auto cells = testing_support::scanned_diagram(w);
      std::vector<unsigned> ground(cells.size(), 0);
      for (const auto &t : srt)
        for (std::size_t k = 0; k < cells.size(); ++k)
          ground[k] |= 1u << (t[k][0] - 1);

      std::set<Lists> expected;
      std::vector<unsigned> pick(cells.size(), 1);
      while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < cells.size(); ++k)
          ok &= (pick[k] & ~ground[k]) == 0;
        bool contains = false;
        for (const auto &t : srt) {
          bool all = ok;
          for (std::size_t k = 0; k < cells.size() && all; ++k)
            all = (pick[k] >> (t[k][0] - 1)) & 1u;
          contains |= all;
        }
        if (ok && contains) {
          Lists l;
          for (auto m : pick)
            l.push_back(entry_values(m));
          expected.insert(l);
        }
        std::size_t k = 0;
        while (k < cells.size() && ++pick[k] == (1u << cells[k].row))
          pick[k++] = 1;
        if (k == cells.size())
          break;
      }
      EXPECT_EQ(expected, as_set(enumerate_lsvrt(w))) << w.to_string();
    }
}

TEST(EscapeSetTest, CanComputeEscapeSets) {
  EXPECT_EQ(entry_set({1, 2}), escape_set_E(P("132"), {2, 2}));
  const auto w0 = Permutation::longest(5);
  const auto d0 = rothe_diagram(w0);
  for (const auto &s : d0.squares())
    EXPECT_EQ(entry_set({s.row}), escape_set_E(w0, s));
  EXPECT_THROW(escape_set_E(P("132"), {1, 1}), Error);

  // Brute-force union over SRT(25143).
  const auto w = P("25143");
  const auto cells = testing_support::scanned_diagram(w);
  auto srt = testing_support::brute_svrt(w, true);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    EntrySet u = 0;
    for (const auto &t : srt)
      u |= entry_set({t[k][0]});
    EXPECT_EQ(u, escape_set_E(w, cells[k]))
        << cells[k].row << "," << cells[k].col;
  }
  EXPECT_EQ(entry_set({2, 3, 4}), escape_set_E(w, {4, 3}));
}

TEST(EscapeSetTest, CanComputeUpwardMoves) {
  const auto w = P("132");
  EXPECT_EQ(entry_set({2}), upward_moves_Y(w, tableau(w, {{1}}), {2, 2}));
  EXPECT_EQ(0u, upward_moves_Y(w, tableau(w, {{2}}), {2, 2}));
  const auto w0 = Permutation::longest(4);
  auto t0 = enumerate_srt(w0).front();
  for (const auto &s : t0.shape.squares())
    EXPECT_EQ(0u, upward_moves_Y(w0, t0, s));
}

TEST(EscapeSetTest, UpwardMovesMatchBruteForce) {
  for (const auto &w : all_permutations(5)) {
    auto srt = enumerate_srt(w);
    std::set<Lists> members = as_set(srt);
    for (const auto &t : srt)
      for (std::size_t k = 0; k < t.entries.size(); ++k) {
        const auto s = t.shape.squares()[k];
        EntrySet y = 0;
        for (unsigned m = entry_min(t.entries[k]) + 1; m <= s.row; ++m) {
          auto l = testing_support::as_lists(t);
          l[k] = {m};
          if (members.count(l))
            y |= entry_set({m});
        }
        EXPECT_EQ(y, upward_moves_Y(w, t, s)) << w.to_string();
      }
  }
}

TEST(WeightTest, UsesDiagramStatistic) {
  const auto w = P("426315");
  auto factors = weight_factors(w, sample_svrt());
  ASSERT_EQ(10u, factors.size());
  for (const auto &f : factors) {
    EXPECT_EQ(f.t, f.x_index);
    EXPECT_EQ(m_statistic(w, f.square.row, f.square.col) + f.square.row - f.t,
              f.y_index);
  }
  const auto r = ring_for(6);
  Polynomial expected = C(r, 1);
  for (const auto &f : factors)
    expected *= xy(r, f.x_index, f.y_index);
  // |T| - l(w) = 2, so the sign is +1.
  EXPECT_EQ(expected, weight_svrt(w, sample_svrt()));
}

TEST(FormulaTest, CanEvaluateSmallCases) {
  const auto r = ring_for(3);
  auto a = xy(r, 1, 2), b = xy(r, 2, 1);
  auto g132 = a + b - a * b;
  EXPECT_EQ(g132, formula_theorem11(P("132")));
  EXPECT_EQ(g132, formula_theorem14_limit(P("132")));
  EXPECT_EQ(g132, formula_theorem14_srt(P("132")));
  EXPECT_EQ(g132, formula_matsumura_321(P("132")));

  auto escape = [&](unsigned t, unsigned y) {
    return (C(r, 1) - X(r, t)) * (C(r, 1) - Y(r, y));
  };
  EXPECT_EQ(a * escape(2, 1) + b * escape(1, 2) + a * b,
            formula_theorem14_limit(P("132")));
  EXPECT_EQ(a * escape(2, 1) + b, formula_theorem14_srt(P("132")));

  EXPECT_EQ(X(r, 1) + X(r, 2), formula_corollary13_single(P("132")));
  EXPECT_EQ(X(r, 1) + X(r, 2) - Y(r, 1) - Y(r, 2),
            formula_corollary13_double(P("132")));
  EXPECT_EQ(X(r, 1) + X(r, 2) - X(r, 1) * X(r, 2),
            formula_corollary12(P("132")));

  const auto r2 = ring_for(2);
  EXPECT_EQ(X(r2, 1) - Y(r2, 1), formula_corollary13_double(P("21")));

  const auto id = Permutation::identity(4);
  for (auto f : {formula_theorem11, formula_theorem14_limit,
                 formula_theorem14_srt, formula_corollary12,
                 formula_corollary13_double, formula_corollary13_single})
    EXPECT_EQ(C(ring_for(4), 1), f(id));
  EXPECT_EQ(C(ring_for(4), 1), formula_matsumura_321(id));

  for (unsigned n = 1; n <= 5; ++n) {
    const auto w0 = Permutation::longest(n);
    EXPECT_EQ(grothendieck_longest(n), formula_theorem11(w0));
    EXPECT_EQ(grothendieck_longest(n), formula_theorem14_limit(w0));
    EXPECT_EQ(grothendieck_longest(n), formula_theorem14_srt(w0));
  }
}

TEST(FormulaTest, SignedSumMatchesOracleExactlyOnAvoiders) {
  for (unsigned n = 1; n <= 5; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      const bool avoids = !contains_pattern(w, P("1432"));
      const auto g = o.double_grothendieck(w);
      EXPECT_EQ(avoids, formula_theorem11(w) == g) << w.to_string();
      if (!avoids)
        continue;
      EXPECT_EQ(o.single_grothendieck(w), formula_corollary12(w));
      EXPECT_EQ(o.double_schubert(w), formula_corollary13_double(w));
      EXPECT_EQ(o.single_schubert(w), formula_corollary13_single(w));
      EXPECT_EQ(set_y_zero(formula_theorem11(w)), formula_corollary12(w));
    }
  }
}

TEST(FormulaTest, EscapeFormulasMatchOracleOnAvoiders) {
  for (unsigned n = 1; n <= 4; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      if (contains_pattern(w, P("1432")))
        continue;
      const auto g = o.double_grothendieck(w);
      EXPECT_EQ(g, formula_theorem14_limit(w)) << w.to_string();
      EXPECT_EQ(g, formula_theorem14_srt(w)) << w.to_string();
    }
  }
}

TEST(FormulaTest, WeightsAreSummedWithSigns) {
  for (const auto &w : all_permutations(4)) {
    PolynomialSum sum(ring_for(4));
    for (const auto &t : enumerate_svrt(w))
      sum.add(weight_svrt(w, t));
    EXPECT_EQ(sum.result(), formula_theorem11(w)) << w.to_string();
  }
}

TEST(SkewTableauTest, MatchesOracleForThreeTwoOneAvoiders) {
  EXPECT_THROW(formula_matsumura_321(P("321")), Error);
  for (unsigned n = 2; n <= 5; ++n) {
    GrothendieckOracle o(n);
    for (const auto &w : all_permutations(n)) {
      if (contains_pattern(w, P("321")))
        continue;
      EXPECT_EQ(o.double_grothendieck(w), formula_matsumura_321(w))
          << w.to_string();
      EXPECT_TRUE(index_identity_violations(w).empty()) << w.to_string();
      if (!w.is_identity()) {
        EXPECT_EQ(enumerate_svrt(w).size(),
                  enumerate_skew_tableaux(skew_shape_321(w)).size());
      }
    }
  }
  GrothendieckOracle o6(6);
  EXPECT_EQ(o6.double_grothendieck(P("312465")),
            formula_matsumura_321(P("312465")));
}

TEST(SkewTableauTest, RowsIncreaseAndColumnsStrictlyIncrease) {
  auto shape = skew_shape_321(P("312465"));
  const auto cells = shape.cells();
  auto all = enumerate_skew_tableaux(shape);
  EXPECT_FALSE(all.empty());
  for (const auto &t : all)
    for (std::size_t a = 0; a < cells.size(); ++a) {
      EXPECT_LE(entry_max(t[a]), shape.flag[cells[a].row - 1]);
      for (std::size_t b = 0; b < cells.size(); ++b) {
        if (cells[a].row == cells[b].row && cells[a].col < cells[b].col) {
          EXPECT_LE(entry_max(t[a]), entry_min(t[b]));
        }
        if (cells[a].col == cells[b].col && cells[a].row < cells[b].row) {
          EXPECT_LT(entry_max(t[a]), entry_min(t[b]));
        }
      }
    }
}
