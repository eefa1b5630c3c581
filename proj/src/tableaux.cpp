#include "rothe/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rothe/error.hpp"
#include "rothe/oracle.hpp"

namespace rothe {

// Entry sets ---------------------------------------------------------------

EntrySet entry_set(std::initializer_list<unsigned> values) {
  return entry_set(std::span<const unsigned>(values.begin(), values.size()));
}

EntrySet entry_set(std::span<const unsigned> values) {
  EntrySet s = 0;
  for (unsigned v : values) {
    if (v < 1 || v > 32)
      throw Error(ErrorCode::ValueOutOfRange,
                  "tableau entry " + std::to_string(v) + " outside 1..32");
    s |= EntrySet{1} << (v - 1);
  }
  return s;
}

std::vector<unsigned> entry_values(EntrySet s) {
  std::vector<unsigned> out;
  for (unsigned t = 1; s != 0; ++t, s >>= 1)
    if (s & 1u)
      out.push_back(t);
  return out;
}

unsigned entry_min(EntrySet s) {
  return s == 0 ? 0 : static_cast<unsigned>(__builtin_ctz(s)) + 1;
}

unsigned entry_max(EntrySet s) {
  return s == 0 ? 0 : 32 - static_cast<unsigned>(__builtin_clz(s));
}

std::string entry_to_string(EntrySet s) {
  auto values = entry_values(s);
  std::ostringstream os;
  os << '{';
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    os << (it == values.rbegin() ? "" : ",") << *it;
  os << '}';
  return os.str();
}

std::size_t SetValuedTableau::size() const {
  std::size_t total = 0;
  for (auto e : entries)
    total += entry_count(e);
  return total;
}

bool SetValuedTableau::single_valued() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](EntrySet e) { return entry_count(e) == 1; });
}

// Cells --------------------------------------------------------------------

RotheCells::RotheCells(const Permutation &perm)
    : w(perm), diagram(rothe_diagram(perm)) {
  const auto &sq = diagram.squares();
  const std::size_t count = sq.size();
  m.assign(count, 0);
  left.assign(count, -1);
  right.assign(count, -1);
  up.assign(count, -1);
  down.assign(count, -1);
  for (std::size_t k = 0; k < count; ++k) {
    m[k] = (k > 0 && sq[k - 1].row == sq[k].row) ? m[k - 1] + 1 : 1;
    if (k > 0 && sq[k - 1].row == sq[k].row) {
      left[k] = static_cast<int>(k - 1);
      right[k - 1] = static_cast<int>(k);
    }
    for (std::size_t a = k; a-- > 0;) {
      if (sq[a].col == sq[k].col) {
        up[k] = static_cast<int>(a);
        down[a] = static_cast<int>(k);
        break;
      }
    }
  }
}

unsigned RotheCells::y_index(std::size_t k, unsigned t) const {
  const int index = static_cast<int>(m[k] + row(k)) - static_cast<int>(t);
  if (index < 1 || index > static_cast<int>(w.size()))
    throw Error(ErrorCode::Internal,
                "y index " + std::to_string(index) + " outside 1.." +
                    std::to_string(w.size()));
  return static_cast<unsigned>(index);
}

namespace {

EntrySet interval(unsigned lo, unsigned hi) {
  if (lo > hi || lo < 1)
    return 0;
  const std::uint64_t upper = (std::uint64_t{1} << hi) - 1;
  const std::uint64_t lower = (std::uint64_t{1} << (lo - 1)) - 1;
  return static_cast<EntrySet>(upper & ~lower);
}

/// Values allowed at square k given the squares before it in row-major order.
EntrySet svrt_range(const RotheCells &cells, std::size_t k,
                    const std::vector<EntrySet> &t) {
  unsigned hi = cells.row(k);
  if (cells.left[k] >= 0)
    hi = std::min(hi, entry_min(t[cells.left[k]]));
  unsigned lo = 1;
  if (cells.up[k] >= 0)
    lo = entry_max(t[cells.up[k]]) + 1;
  return interval(lo, hi);
}

/// Calls visit(sub) for every nonempty subset of `range`, increasing.
template <class F> void for_each_subset(EntrySet range, F &&visit) {
  EntrySet sub = 0;
  do {
    sub = (sub - range) & range;
    if (sub != 0)
      visit(sub);
  } while (sub != 0);
}

template <class F> void for_each_member(EntrySet range, F &&visit) {
  for (EntrySet r = range; r != 0; r &= r - 1)
    visit(r & (~r + 1));
}

void svrt_search(const RotheCells &cells, bool single, std::size_t k,
                 std::vector<EntrySet> &t, const EntryVisitor &visit) {
  if (k == cells.size()) {
    visit(t);
    return;
  }
  const EntrySet range = svrt_range(cells, k, t);
  auto step = [&](EntrySet s) {
    t[k] = s;
    svrt_search(cells, single, k + 1, t, visit);
  };
  if (single)
    for_each_member(range, step);
  else
    for_each_subset(range, step);
  t[k] = 0;
}

SetValuedTableau make_tableau(const RotheCells &cells,
                              const std::vector<EntrySet> &e) {
  return SetValuedTableau{cells.diagram, e};
}

/// Sum over the leaves of a backtracking search of the product of cached
/// per-square weights. `range(k, t)` lists the allowed sets at square k and
/// `weight(k, s)` gives the factor; `accept(t)` filters leaves.
template <class Range, class Weight, class Accept>
Polynomial weighted_sum(Ring ring, std::size_t count, Range &&range,
                        Weight &&weight, Accept &&accept) {
  PolynomialSum sum(ring);
  std::vector<EntrySet> t(count, 0);
  std::vector<Polynomial> partial(count + 1);
  partial[0] = Polynomial::constant(ring, 1);
  auto search = [&](auto &self, std::size_t k) -> void {
    if (k == count) {
      if (accept(t))
        sum.add(partial[count]);
      return;
    }
    for (EntrySet s : range(k, t)) {
      t[k] = s;
      partial[k + 1] = partial[k] * weight(k, s);
      self(self, k + 1);
    }
    t[k] = 0;
  };
  search(search, 0);
  return sum.result();
}

std::vector<EntrySet> subsets(EntrySet range) {
  std::vector<EntrySet> out;
  for_each_subset(range, [&](EntrySet s) { out.push_back(s); });
  return out;
}

std::vector<EntrySet> members(EntrySet range) {
  std::vector<EntrySet> out;
  for_each_member(range, [&](EntrySet s) { out.push_back(s); });
  return out;
}

/// Memoizes weight(k, s) per square.
class WeightCache {
public:
  template <class F>
  WeightCache(std::size_t count, F &&make)
      : cache_(count), make_(std::forward<F>(make)) {}

  const Polynomial &operator()(std::size_t k, EntrySet s) {
    auto it = cache_[k].find(s);
    if (it == cache_[k].end())
      it = cache_[k].emplace(s, make_(k, s)).first;
    return it->second;
  }

private:
  std::vector<std::unordered_map<EntrySet, Polynomial>> cache_;
  std::function<Polynomial(std::size_t, EntrySet)> make_;
};

Polynomial x_oplus_y(Ring ring, unsigned x, unsigned y) {
  return oplus(Polynomial::x(ring, x), Polynomial::y(ring, y));
}

Polynomial escape_factor(Ring ring, unsigned x, unsigned y) {
  const auto one = Polynomial::constant(ring, 1);
  return (one - Polynomial::x(ring, x)) * (one - Polynomial::y(ring, y));
}

/// Squares that must compare in the given direction for the literal checks.
bool rows_and_columns_ok(const Diagram &d, const std::vector<EntrySet> &e) {
  const auto &sq = d.squares();
  for (std::size_t a = 0; a < sq.size(); ++a) {
    for (std::size_t b = 0; b < sq.size(); ++b) {
      if (sq[a].row == sq[b].row && sq[a].col < sq[b].col &&
          entry_min(e[a]) < entry_max(e[b]))
        return false;
      if (sq[a].col == sq[b].col && sq[a].row < sq[b].row &&
          entry_max(e[a]) >= entry_min(e[b]))
        return false;
    }
  }
  return true;
}

bool fits(const Permutation &w, const SetValuedTableau &t) {
  if (!(t.shape == rothe_diagram(w)) || t.entries.size() != t.shape.size())
    return false;
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    if (t.entries[k] == 0 || entry_max(t.entries[k]) > t.shape.squares()[k].row)
      return false;
  }
  return true;
}

std::vector<std::vector<EntrySet>> srt_entries(const RotheCells &cells) {
  std::vector<std::vector<EntrySet>> out;
  for_each_srt(cells, [&](const std::vector<EntrySet> &e) { out.push_back(e); });
  return out;
}

std::vector<EntrySet> escape_sets(const RotheCells &cells,
                                  const std::vector<std::vector<EntrySet>> &srt) {
  std::vector<EntrySet> e(cells.size(), 0);
  for (const auto &t : srt)
    for (std::size_t k = 0; k < t.size(); ++k)
      e[k] |= t[k];
  return e;
}

/// Visits every filling F(B) in nonempty subsets of E_B that contains one of
/// the facets, pruning prefixes no facet is compatible with.
template <class Visit>
void limit_search(const RotheCells &cells,
                  const std::vector<std::vector<EntrySet>> &facets,
                  const std::vector<EntrySet> &escape, Visit &&visit) {
  const std::size_t count = cells.size();
  std::vector<EntrySet> t(count, 0);
  std::vector<std::size_t> all(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f)
    all[f] = f;
  auto search = [&](auto &self, std::size_t k,
                    const std::vector<std::size_t> &alive) -> void {
    if (k == count) {
      visit(t);
      return;
    }
    for_each_subset(escape[k], [&](EntrySet s) {
      std::vector<std::size_t> next;
      for (auto f : alive)
        if (facets[f][k] & s)
          next.push_back(f);
      if (next.empty())
        return;
      t[k] = s;
      self(self, k + 1, next);
    });
    t[k] = 0;
  };
  if (!facets.empty())
    search(search, 0, all);
}

EntrySet upward_moves(const RotheCells &cells, const std::vector<EntrySet> &t,
                      std::size_t k,
                      const std::set<std::vector<EntrySet>> &srt) {
  EntrySet out = 0;
  auto moved = t;
  for (unsigned m = entry_max(t[k]) + 1; m <= cells.row(k); ++m) {
    moved[k] = EntrySet{1} << (m - 1);
    if (srt.count(moved))
      out |= moved[k];
  }
  return out;
}

} // namespace

// Enumeration --------------------------------------------------------------

void for_each_svrt(const RotheCells &cells, const EntryVisitor &visit) {
  std::vector<EntrySet> t(cells.size(), 0);
  svrt_search(cells, false, 0, t, visit);
}

void for_each_srt(const RotheCells &cells, const EntryVisitor &visit) {
  std::vector<EntrySet> t(cells.size(), 0);
  svrt_search(cells, true, 0, t, visit);
}

std::vector<SetValuedTableau> enumerate_svrt(const Permutation &w) {
  const RotheCells cells(w);
  std::vector<SetValuedTableau> out;
  for_each_svrt(cells, [&](const std::vector<EntrySet> &e) {
    out.push_back(make_tableau(cells, e));
  });
  return out;
}

std::vector<SetValuedTableau> enumerate_srt(const Permutation &w) {
  const RotheCells cells(w);
  std::vector<SetValuedTableau> out;
  for_each_srt(cells, [&](const std::vector<EntrySet> &e) {
    out.push_back(make_tableau(cells, e));
  });
  return out;
}

std::vector<SetValuedTableau> enumerate_lsvrt(const Permutation &w) {
  const RotheCells cells(w);
  const auto srt = srt_entries(cells);
  const auto escape = escape_sets(cells, srt);
  std::vector<SetValuedTableau> out;
  limit_search(cells, srt, escape, [&](const std::vector<EntrySet> &e) {
    out.push_back(make_tableau(cells, e));
  });
  return out;
}

bool is_svrt(const Permutation &w, const SetValuedTableau &t) {
  return fits(w, t) && rows_and_columns_ok(t.shape, t.entries);
}

bool is_srt(const Permutation &w, const SetValuedTableau &t) {
  return t.single_valued() && is_svrt(w, t);
}

namespace {

bool hits_some_facet(const std::vector<std::vector<EntrySet>> &srt,
                     const std::vector<EntrySet> &entries) {
  return std::any_of(srt.begin(), srt.end(), [&](const auto &facet) {
    for (std::size_t k = 0; k < facet.size(); ++k)
      if (!(facet[k] & entries[k]))
        return false;
    return true;
  });
}

} // namespace

bool is_lsvrt(const Permutation &w, const SetValuedTableau &t) {
  if (!fits(w, t))
    return false;
  const RotheCells cells(w);
  const auto srt = srt_entries(cells);
  const auto escape = escape_sets(cells, srt);
  for (std::size_t k = 0; k < t.entries.size(); ++k)
    if ((t.entries[k] & ~escape[k]) != 0)
      return false;
  return hits_some_facet(srt, t.entries);
}

bool admits_srt_selection(const Permutation &w, const SetValuedTableau &t) {
  if (!fits(w, t))
    return false;
  return hits_some_facet(srt_entries(RotheCells(w)), t.entries);
}

std::vector<EntrySet> escape_sets(const Permutation &w) {
  const RotheCells cells(w);
  return escape_sets(cells, srt_entries(cells));
}

EntrySet escape_set_E(const Permutation &w, Square b) {
  const RotheCells cells(w);
  const auto k = cells.diagram.index_of(b);
  return escape_sets(cells, srt_entries(cells))[k];
}

EntrySet upward_moves_Y(const Permutation &w, const SetValuedTableau &t,
                        Square b) {
  if (!is_srt(w, t))
    throw Error(ErrorCode::InvalidArgument,
                "upward moves need a single-valued Rothe tableau");
  const RotheCells cells(w);
  const auto k = cells.diagram.index_of(b);
  const auto all = srt_entries(cells);
  const std::set<std::vector<EntrySet>> srt(all.begin(), all.end());
  return upward_moves(cells, t.entries, k, srt);
}

// Weights ------------------------------------------------------------------

std::vector<WeightFactor> weight_factors(const Permutation &w,
                                         const SetValuedTableau &t) {
  const RotheCells cells(w);
  if (!(t.shape == cells.diagram) || t.entries.size() != cells.size())
    throw Error(ErrorCode::InvalidArgument, "tableau shape is not D(w)");
  std::vector<WeightFactor> out;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (unsigned v : entry_values(t.entries[k]))
      out.push_back({cells.diagram.squares()[k], v, v, cells.y_index(k, v)});
  return out;
}

Polynomial weight_svrt(const Permutation &w, const SetValuedTableau &t) {
  const Ring ring = ring_for(w.size());
  auto out = Polynomial::constant(ring, 1);
  for (const auto &f : weight_factors(w, t))
    out *= x_oplus_y(ring, f.x_index, f.y_index);
  if ((t.size() - w.length()) % 2 != 0)
    out = -out;
  return out;
}

namespace {

enum class Factor { Oplus, X, XMinusY };

Polynomial svrt_sum(const Permutation &w, Factor factor, bool single) {
  const RotheCells cells(w);
  const Ring ring = ring_for(w.size());
  WeightCache weight(cells.size(), [&](std::size_t k, EntrySet s) {
    auto p = Polynomial::constant(ring, 1);
    for (unsigned t : entry_values(s)) {
      switch (factor) {
      case Factor::Oplus:
        p *= x_oplus_y(ring, t, cells.y_index(k, t));
        break;
      case Factor::X:
        p *= Polynomial::x(ring, t);
        break;
      case Factor::XMinusY:
        p *= Polynomial::x(ring, t) - Polynomial::y(ring, cells.y_index(k, t));
        break;
      }
    }
    return entry_count(s) % 2 == 0 ? -p : p;
  });
  return weighted_sum(
      ring, cells.size(),
      [&](std::size_t k, const std::vector<EntrySet> &t) {
        const EntrySet range = svrt_range(cells, k, t);
        return single ? members(range) : subsets(range);
      },
      weight, [](const auto &) { return true; });
}

} // namespace

Polynomial formula_theorem11(const Permutation &w) {
  return svrt_sum(w, Factor::Oplus, false);
}

Polynomial formula_corollary12(const Permutation &w) {
  return svrt_sum(w, Factor::X, false);
}

Polynomial formula_corollary13_double(const Permutation &w) {
  return svrt_sum(w, Factor::XMinusY, true);
}

Polynomial formula_corollary13_single(const Permutation &w) {
  return svrt_sum(w, Factor::X, true);
}

Polynomial formula_theorem14_limit(const Permutation &w) {
  const RotheCells cells(w);
  const Ring ring = ring_for(w.size());
  const auto srt = srt_entries(cells);
  const auto escape = escape_sets(cells, srt);
  WeightCache weight(cells.size(), [&](std::size_t k, EntrySet s) {
    auto p = Polynomial::constant(ring, 1);
    for (unsigned t : entry_values(s))
      p *= x_oplus_y(ring, t, cells.y_index(k, t));
    for (unsigned t : entry_values(escape[k] & ~s))
      p *= escape_factor(ring, t, cells.y_index(k, t));
    return p;
  });

  PolynomialSum sum(ring);
  std::vector<Polynomial> partial(cells.size() + 1);
  partial[0] = Polynomial::constant(ring, 1);
  // Products are rebuilt from the first square that changed since the
  // previous leaf.
  std::vector<EntrySet> previous(cells.size(), 0);
  limit_search(cells, srt, escape, [&](const std::vector<EntrySet> &t) {
    std::size_t from = 0;
    while (from < t.size() && t[from] == previous[from])
      ++from;
    for (std::size_t k = from; k < t.size(); ++k)
      partial[k + 1] = partial[k] * weight(k, t[k]);
    previous = t;
    sum.add(partial[cells.size()]);
  });
  return sum.result();
}

Polynomial formula_theorem14_srt(const Permutation &w) {
  const RotheCells cells(w);
  const Ring ring = ring_for(w.size());
  const auto all = srt_entries(cells);
  const std::set<std::vector<EntrySet>> srt(all.begin(), all.end());
  PolynomialSum sum(ring);
  for (const auto &t : all) {
    auto p = Polynomial::constant(ring, 1);
    for (std::size_t k = 0; k < t.size(); ++k) {
      const unsigned v = entry_min(t[k]);
      p *= x_oplus_y(ring, v, cells.y_index(k, v));
      for (unsigned m : entry_values(upward_moves(cells, t, k, srt)))
        p *= escape_factor(ring, m, cells.y_index(k, m));
    }
    sum.add(p);
  }
  return sum.result();
}

// Skew tableaux ------------------------------------------------------------

namespace {

struct SkewCells {
  explicit SkewCells(const SkewShape &s) : shape(s), cells(s.cells()) {
    left.assign(cells.size(), -1);
    up.assign(cells.size(), -1);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (std::size_t a = 0; a < k; ++a) {
        if (cells[a].row == cells[k].row && cells[a].col + 1 == cells[k].col)
          left[k] = static_cast<int>(a);
        if (cells[a].col == cells[k].col && cells[a].row + 1 == cells[k].row)
          up[k] = static_cast<int>(a);
      }
    }
  }

  EntrySet range(std::size_t k, const std::vector<EntrySet> &t) const {
    unsigned lo = 1;
    if (left[k] >= 0)
      lo = std::max(lo, entry_max(t[left[k]]));
    if (up[k] >= 0)
      lo = std::max(lo, entry_max(t[up[k]]) + 1);
    return interval(lo, shape.flag[cells[k].row - 1]);
  }

  const SkewShape &shape;
  std::vector<Square> cells;
  std::vector<int> left, up;
};

} // namespace

std::vector<std::vector<EntrySet>>
enumerate_skew_tableaux(const SkewShape &shape) {
  const SkewCells sc(shape);
  std::vector<std::vector<EntrySet>> out;
  std::vector<EntrySet> t(sc.cells.size(), 0);
  auto search = [&](auto &self, std::size_t k) -> void {
    if (k == t.size()) {
      out.push_back(t);
      return;
    }
    for_each_subset(sc.range(k, t), [&](EntrySet s) {
      t[k] = s;
      self(self, k + 1);
    });
    t[k] = 0;
  };
  search(search, 0);
  return out;
}

Polynomial formula_matsumura_321(const Permutation &w) {
  const Ring ring = ring_for(w.size());
  if (w.is_identity())
    return Polynomial::constant(ring, 1);
  const auto shape = skew_shape_321(w);
  const SkewCells sc(shape);
  const int n = static_cast<int>(w.size());
  WeightCache weight(sc.cells.size(), [&](std::size_t k, EntrySet s) {
    const auto cell = sc.cells[k];
    const int base = static_cast<int>(shape.lambda[cell.row - 1] +
                                      shape.flag[cell.row - 1]) -
                     static_cast<int>(cell.col) + 1;
    auto p = Polynomial::constant(ring, 1);
    for (unsigned t : entry_values(s)) {
      const int y = base - static_cast<int>(t);
      if (y < 1 || y > n)
        throw Error(ErrorCode::Internal,
                    "skew y index " + std::to_string(y) + " outside 1.." +
                        std::to_string(n));
      p *= x_oplus_y(ring, t, static_cast<unsigned>(y));
    }
    return entry_count(s) % 2 == 0 ? -p : p;
  });
  return weighted_sum(
      ring, sc.cells.size(),
      [&](std::size_t k, const std::vector<EntrySet> &t) {
        return subsets(sc.range(k, t));
      },
      weight, [](const auto &) { return true; });
}

std::vector<Square> index_identity_violations(const Permutation &w) {
  std::vector<Square> out;
  if (w.is_identity())
    return out;
  const auto shape = skew_shape_321(w);
  for (const auto &[d, s] : shape.correspondence) {
    const unsigned lhs =
        shape.lambda[s.row - 1] + shape.flag[s.row - 1] - s.col + 1;
    if (lhs != m_statistic(w, d.row, d.col) + d.row)
      out.push_back(d);
  }
  return out;
}

} // namespace rothe
