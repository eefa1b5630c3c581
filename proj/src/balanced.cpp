#include "rothe/balanced.hpp"

#include <algorithm>

#include "rothe/error.hpp"
#include "rothe/oracle.hpp"

namespace rothe {

std::vector<Square> Hook::path() const {
  std::vector<Square> out(arm.rbegin(), arm.rend());
  out.insert(out.end(), leg.begin() + 1, leg.end());
  return out;
}

namespace {

Hook hook_in(const Diagram &d, Square corner) {
  if (!d.contains(corner))
    throw Error(ErrorCode::SquareNotInDiagram,
                "square (" + std::to_string(corner.row) + "," +
                    std::to_string(corner.col) + ") is not in the diagram");
  Hook h{corner, {}, {}};
  for (const auto &s : d.squares()) {
    if (s.row == corner.row && s.col >= corner.col)
      h.arm.push_back(s);
    if (s.col == corner.col && s.row >= corner.row)
      h.leg.push_back(s);
  }
  return h;
}

/// Hook paths as indices into the row-major square list.
std::vector<std::vector<std::size_t>> hook_paths(const Diagram &d) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto &s : d.squares()) {
    std::vector<std::size_t> path;
    for (const auto &p : hook_in(d, s).path())
      path.push_back(d.index_of(p));
    out.push_back(std::move(path));
  }
  return out;
}

bool hook_balanced(const std::vector<std::size_t> &path, std::size_t corner,
                   std::size_t position, const std::vector<unsigned> &labels) {
  std::vector<unsigned> values;
  values.reserve(path.size());
  for (auto k : path)
    values.push_back(labels[k]);
  std::sort(values.begin(), values.end());
  return values[position] == labels[corner];
}

std::size_t corner_position(const Diagram &d, std::size_t k) {
  return hook_in(d, d.squares()[k]).corner_position();
}

} // namespace

Hook hook(const Permutation &w, unsigned i, unsigned j) {
  return hook_in(rothe_diagram(w), Square{i, j});
}

bool is_balanced(const Permutation &w, const Labeling &l) {
  const auto d = rothe_diagram(w);
  if (!(l.shape == d) || l.labels.size() != d.size())
    return false;
  const auto paths = hook_paths(d);
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!hook_balanced(paths[k], k, corner_position(d, k), l.labels))
      return false;
  return true;
}

bool is_column_strict_flagged(const Permutation &w, const Labeling &l) {
  const auto d = rothe_diagram(w);
  if (!(l.shape == d) || l.labels.size() != d.size())
    return false;
  const auto &sq = d.squares();
  for (std::size_t a = 0; a < sq.size(); ++a) {
    if (l.labels[a] < 1 || l.labels[a] > sq[a].row)
      return false;
    for (std::size_t b = a + 1; b < sq.size(); ++b)
      if (sq[a].col == sq[b].col && l.labels[a] == l.labels[b])
        return false;
  }
  return true;
}

bool in_csbl(const Permutation &w, const Labeling &l) {
  return is_column_strict_flagged(w, l) && is_balanced(w, l);
}

bool in_srt(const Permutation &w, const Labeling &l) {
  SetValuedTableau t{l.shape, {}};
  for (unsigned v : l.labels) {
    if (v < 1 || v > 32)
      return false;
    t.entries.push_back(entry_set({v}));
  }
  return is_srt(w, t);
}

Labeling labeling_from_tableau(const SetValuedTableau &t) {
  if (!t.single_valued())
    throw Error(ErrorCode::InvalidArgument,
                "only single-valued tableaux are labelings");
  Labeling l{t.shape, {}};
  for (auto e : t.entries)
    l.labels.push_back(entry_min(e));
  return l;
}

std::vector<Labeling> enumerate_csbl(const Permutation &w) {
  const auto d = rothe_diagram(w);
  const auto &sq = d.squares();
  const auto paths = hook_paths(d);
  // Hooks are checked as soon as their last square is labeled.
  std::vector<std::vector<std::size_t>> complete_at(sq.size());
  std::vector<std::size_t> positions(sq.size());
  for (std::size_t k = 0; k < sq.size(); ++k) {
    complete_at[*std::max_element(paths[k].begin(), paths[k].end())]
        .push_back(k);
    positions[k] = corner_position(d, k);
  }

  std::vector<Labeling> out;
  std::vector<unsigned> labels(sq.size(), 0);
  auto search = [&](auto &self, std::size_t k) -> void {
    if (k == sq.size()) {
      out.push_back(Labeling{d, labels});
      return;
    }
    for (unsigned v = 1; v <= sq[k].row; ++v) {
      bool repeated = false;
      for (std::size_t a = 0; a < k && !repeated; ++a)
        repeated = sq[a].col == sq[k].col && labels[a] == v;
      if (repeated)
        continue;
      labels[k] = v;
      bool ok = true;
      for (auto h : complete_at[k])
        if (!(ok = hook_balanced(paths[h], h, positions[h], labels)))
          break;
      if (ok)
        self(self, k + 1);
    }
    labels[k] = 0;
  };
  search(search, 0);
  return out;
}

Polynomial fgrs_schubert(const Permutation &w) {
  const Ring ring = ring_for(w.size());
  PolynomialSum sum(ring);
  for (const auto &l : enumerate_csbl(w)) {
    std::vector<Term> term(1);
    term[0].coefficient = 1;
    for (unsigned v : l.labels)
      ++term[0].monomial.exps[v - 1];
    sum.add(Polynomial::from_terms(ring, std::move(term)));
  }
  return sum.result();
}

Labeling counterexample_labeling(const Permutation &w) {
  static const Permutation p1432 =
      Permutation::from_one_line(std::vector<unsigned>{1, 4, 3, 2});
  const auto occurrence = find_pattern(w, p1432);
  if (!occurrence)
    throw Error(ErrorCode::No1432Occurrence,
                w.to_string() + " avoids the pattern 1432");
  const unsigned i1 = (*occurrence)[0];
  const unsigned i3 = (*occurrence)[2];

  const auto d = rothe_diagram(w);
  const auto row_i3 = d.row(i3);
  const unsigned j = row_i3.back().col;

  auto rightmost = [&](Square s) { return d.row(s.row).back() == s; };
  std::vector<unsigned> s1;
  unsigned i0 = 0;
  bool s2_above = false;
  for (const auto &s : d.column(j)) {
    if (s.row < i1 || s.row > i3)
      continue;
    if (!rightmost(s)) {
      s2_above = true;
      continue;
    }
    s1.push_back(s.row);
    if (s2_above) {
      i0 = s.row;
      break;
    }
  }
  if (i0 == 0)
    throw Error(ErrorCode::Internal, "no row i0 in the 1432 construction");

  Labeling l{d, {}};
  for (const auto &s : d.squares())
    l.labels.push_back(s.row);
  for (std::size_t p = 0; p < s1.size(); ++p)
    l.labels[d.index_of({s1[p], j})] = p == 0 ? i1 : s1[p - 1];

  if (!in_csbl(w, l) || in_srt(w, l))
    throw Error(ErrorCode::Internal,
                "constructed labeling for " + w.to_string() +
                    " is not in CSBL minus SRT");
  return l;
}

} // namespace rothe
