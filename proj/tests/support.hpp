#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls the enumeration or formula code under test.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rothe/oracle.hpp"
#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"
#include "rothe/tableaux.hpp"

namespace testing_support {

using rothe::Integer;
using rothe::Permutation;
using rothe::Polynomial;
using rothe::Ring;
using rothe::Square;

inline Permutation P(const std::string &text) {
  return Permutation::parse(text);
}

inline Polynomial X(Ring r, unsigned i) { return Polynomial::x(r, i); }
inline Polynomial Y(Ring r, unsigned j) { return Polynomial::y(r, j); }
inline Polynomial C(Ring r, long long c) {
  return Polynomial::constant(r, Integer(static_cast<std::int64_t>(c)));
}

inline Polynomial xy(Ring r, unsigned i, unsigned j) {
  return rothe::oplus(X(r, i), Y(r, j));
}

/// Squares found by scanning for a dot to the right in the row and a dot
/// below in the column, as in the picture of a Rothe diagram.
inline std::vector<Square> scanned_diagram(const Permutation &w) {
  const unsigned n = w.size();
  std::vector<Square> out;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      bool dot_here_or_left = false, dot_above = false;
      for (unsigned c = 1; c <= j; ++c)
        dot_here_or_left |= w(i) == c;
      for (unsigned r = 1; r <= i; ++r)
        dot_above |= w(r) == j;
      if (!dot_here_or_left && !dot_above)
        out.push_back({i, j});
    }
  }
  return out;
}

/// Pattern containment by checking every index subset.
inline bool brute_contains(const Permutation &w, const Permutation &p) {
  const unsigned n = w.size(), k = p.size();
  if (k > n)
    return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<unsigned> vals;
    for (unsigned i = 0; i < n; ++i)
      if (pick[i])
        vals.push_back(w(i + 1));
    bool same = true;
    for (unsigned a = 0; a < k && same; ++a)
      for (unsigned b = 0; b < k && same; ++b)
        same = (vals[a] < vals[b]) == (p(a + 1) < p(b + 1));
    if (same)
      return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Set-valued fillings of D(w) checked against the definition pair by pair:
/// every square gets a nonempty subset of {1..row}, rows weakly decrease and
/// columns strictly increase in the max/min set order.
inline std::vector<std::vector<std::vector<unsigned>>>
brute_svrt(const Permutation &w, bool single) {
  const auto sq = scanned_diagram(w);
  std::vector<std::vector<std::vector<unsigned>>> choices;
  for (const auto &s : sq) {
    std::vector<std::vector<unsigned>> c;
    for (unsigned mask = 1; mask < (1u << s.row); ++mask) {
      std::vector<unsigned> set;
      for (unsigned t = 1; t <= s.row; ++t)
        if (mask & (1u << (t - 1)))
          set.push_back(t);
      if (!single || set.size() == 1)
        c.push_back(set);
    }
    choices.push_back(c);
  }
  std::vector<std::vector<std::vector<unsigned>>> out;
  std::vector<std::size_t> idx(sq.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < sq.size() && ok; ++a)
      for (std::size_t b = 0; b < sq.size() && ok; ++b) {
        const auto &A = choices[a][idx[a]];
        const auto &B = choices[b][idx[b]];
        if (sq[a].row == sq[b].row && sq[a].col < sq[b].col)
          ok = B.back() <= A.front();
        if (sq[a].col == sq[b].col && sq[a].row < sq[b].row)
          ok = A.back() < B.front();
      }
    if (ok) {
      std::vector<std::vector<unsigned>> t;
      for (std::size_t a = 0; a < sq.size(); ++a)
        t.push_back(choices[a][idx[a]]);
      out.push_back(t);
    }
    std::size_t k = 0;
    while (k < sq.size() && ++idx[k] == choices[k].size())
      idx[k++] = 0;
    if (k == sq.size())
      break;
  }
  return out;
}

inline std::vector<std::vector<unsigned>>
as_lists(const rothe::SetValuedTableau &t) {
  std::vector<std::vector<unsigned>> out;
  for (auto e : t.entries)
    out.push_back(rothe::entry_values(e));
  return out;
}

/// Evaluates f at integer points; x_i -> xs[i-1], y_j -> ys[j-1].
inline Integer evaluate(const Polynomial &f, const std::vector<long long> &xs,
                        const std::vector<long long> &ys) {
  Integer total;
  for (const auto &t : f.terms()) {
    Integer v = t.coefficient;
    for (unsigned i = 1; i <= f.ring().nx; ++i)
      for (unsigned e = 0; e < f.x_exponent(t.monomial, i); ++e)
        v *= Integer(static_cast<std::int64_t>(xs[i - 1]));
    for (unsigned j = 1; j <= f.ring().ny; ++j)
      for (unsigned e = 0; e < f.y_exponent(t.monomial, j); ++e)
        v *= Integer(static_cast<std::int64_t>(ys[j - 1]));
    total += v;
  }
  return total;
}

/// Random polynomial with small coefficients and degrees.
inline Polynomial random_polynomial(std::mt19937 &rng, Ring r,
                                    unsigned terms = 6, unsigned max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5), expo(0, max_exp);
  std::vector<rothe::Term> out;
  for (unsigned k = 0; k < terms; ++k) {
    rothe::Term t;
    t.coefficient = Integer(coeff(rng));
    for (unsigned v = 0; v < r.variables(); ++v)
      t.monomial.exps[v] = static_cast<std::uint8_t>(expo(rng));
    out.push_back(std::move(t));
  }
  return Polynomial::from_terms(r, std::move(out));
}

} // namespace testing_support
