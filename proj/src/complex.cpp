#include "rothe/complex.hpp"

#include <algorithm>
#include <set>

#include "rothe/error.hpp"
#include "rothe/oracle.hpp"

namespace rothe {

namespace {

/// Subset tables have 2^|E| entries; this bounds them to a few hundred MB
/// whatever limit the caller asks for.
constexpr unsigned kSubsetTableLimit = 24;

using Mask = std::uint64_t;

void check_ground_set(const TableauComplex &c, unsigned max_ground_set) {
  const auto size = c.vertices.size();
  const unsigned limit = std::min(max_ground_set, kSubsetTableLimit);
  if (size > limit)
    throw Error(ErrorCode::GroundSetTooLarge,
                "ground set of " + c.w.to_string() + " has " +
                    std::to_string(size) + " elements (limit " +
                    std::to_string(limit) + ")");
}

Mask to_mask(const TableauComplex &c, const std::vector<EntrySet> &entries) {
  Mask m = 0;
  for (std::size_t k = 0; k < entries.size(); ++k)
    for (unsigned v : entry_values(entries[k]))
      m |= Mask{1} << c.vertex_index(k, v);
  return m;
}

std::vector<EntrySet> to_entries(const TableauComplex &c, Mask m) {
  std::vector<EntrySet> out(c.squares.size(), 0);
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if ((m >> v) & 1u)
      out[c.squares.index_of(c.vertices[v].square)] |=
          entry_set({c.vertices[v].value});
  return out;
}

/// is_face[F] for every subset F of E.
std::vector<std::uint8_t> face_table(const TableauComplex &c) {
  const std::size_t e = c.vertices.size();
  std::vector<std::uint8_t> is_face(std::size_t{1} << e, 0);
  for (const auto &f : c.facets)
    is_face[to_mask(c, f)] = 1;
  for (std::size_t b = 0; b < e; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < is_face.size(); ++m)
      if (m & bit)
        is_face[m] |= is_face[m ^ bit];
  }
  return is_face;
}

Polynomial t_var(Ring ring, std::size_t v) {
  return Polynomial::x(ring, static_cast<unsigned>(v + 1));
}

Polynomial one_minus_t(Ring ring, std::size_t v) {
  return Polynomial::constant(ring, 1) - t_var(ring, v);
}

} // namespace

std::size_t TableauComplex::vertex_index(std::size_t square,
                                         unsigned value) const {
  const Vertex key{squares.squares().at(square), value};
  auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
  if (it == vertices.end() || *it != key)
    throw Error(ErrorCode::InvalidArgument,
                "pair (" + std::to_string(key.square.row) + "," +
                    std::to_string(key.square.col) + ") -> " +
                    std::to_string(value) + " is not in E");
  return static_cast<std::size_t>(it - vertices.begin());
}

TableauComplex build_rothe_complex(const Permutation &w) {
  const RotheCells cells(w);
  TableauComplex c{w, cells.diagram, {}, {}, {}, {}, {}};
  for_each_srt(cells, [&](const std::vector<EntrySet> &t) {
    c.facets.push_back(t);
  });
  c.ground.assign(cells.size(), 0);
  for (const auto &f : c.facets)
    for (std::size_t k = 0; k < f.size(); ++k)
      c.ground[k] |= f[k];
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (unsigned v : entry_values(c.ground[k]))
      c.vertices.push_back({cells.diagram.squares()[k], v});

  const auto &sq = cells.diagram.squares();
  const std::size_t count = sq.size();
  c.less.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if ((sq[a].row == sq[b].row && sq[a].col > sq[b].col) ||
          (sq[a].col == sq[b].col && sq[a].row < sq[b].row))
        c.less[a][b] = true;
  for (std::size_t m = 0; m < count; ++m)
    for (std::size_t a = 0; a < count; ++a)
      if (c.less[a][m])
        for (std::size_t b = 0; b < count; ++b)
          if (c.less[m][b])
            c.less[a][b] = true;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      if (c.less[a][b] && sq[a].col == sq[b].col)
        c.psi.emplace_back(a, b);
  return c;
}

std::vector<std::vector<EntrySet>> kmy_tableaux(const TableauComplex &c) {
  const auto &sq = c.squares.squares();
  const std::size_t count = sq.size();
  std::vector<std::vector<bool>> strict(count, std::vector<bool>(count, false));
  for (const auto &[a, b] : c.psi)
    strict[a][b] = true;

  std::vector<std::vector<EntrySet>> out;
  std::vector<unsigned> f(count, 0);
  auto search = [&](auto &self, std::size_t k) -> void {
    if (k == count) {
      std::vector<EntrySet> t;
      for (unsigned v : f)
        t.push_back(entry_set({v}));
      out.push_back(std::move(t));
      return;
    }
    for (unsigned v = 1; v <= sq[k].row; ++v) {
      bool ok = true;
      for (std::size_t a = 0; a < k && ok; ++a) {
        if (c.less[a][k])
          ok = strict[a][k] ? f[a] < v : f[a] <= v;
        else if (c.less[k][a])
          ok = strict[k][a] ? v < f[a] : v <= f[a];
      }
      if (!ok)
        continue;
      f[k] = v;
      self(self, k + 1);
    }
    f[k] = 0;
  };
  search(search, 0);
  return out;
}

Ring vertex_ring(const TableauComplex &c) {
  if (c.vertices.size() > kMaxVariables)
    throw Error(ErrorCode::GroundSetTooLarge,
                "ground set of " + c.w.to_string() + " has " +
                    std::to_string(c.vertices.size()) +
                    " elements, more than the " +
                    std::to_string(kMaxVariables) + " available variables");
  return Ring{static_cast<unsigned>(c.vertices.size()), 0};
}

std::vector<SetValuedTableau> faces(const TableauComplex &c,
                                    unsigned max_ground_set) {
  check_ground_set(c, max_ground_set);
  const auto is_face = face_table(c);
  std::vector<SetValuedTableau> out;
  for (Mask m = 0; m < is_face.size(); ++m)
    if (is_face[m])
      out.push_back({c.squares, to_entries(c, m)});
  return out;
}

std::vector<std::size_t> face_vertices(const TableauComplex &c,
                                       const SetValuedTableau &f) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const auto k = c.squares.index_of(c.vertices[v].square);
    if (!entry_contains(f.entries.at(k), c.vertices[v].value))
      out.push_back(v);
  }
  return out;
}

std::vector<SetValuedTableau> u1_tableaux(const TableauComplex &c,
                                          unsigned max_ground_set) {
  check_ground_set(c, max_ground_set);
  const std::set<std::vector<EntrySet>> facets(c.facets.begin(),
                                               c.facets.end());
  const std::size_t count = c.squares.size();

  auto all_selections_are_facets = [&](const std::vector<EntrySet> &f) {
    std::vector<EntrySet> pick(count, 0);
    auto check = [&](auto &self, std::size_t k) -> bool {
      if (k == count)
        return facets.count(pick) > 0;
      for (unsigned v : entry_values(f[k])) {
        pick[k] = entry_set({v});
        if (!self(self, k + 1))
          return false;
      }
      return true;
    };
    return check(check, 0);
  };

  std::vector<SetValuedTableau> out;
  std::vector<EntrySet> f(count, 0);
  auto search = [&](auto &self, std::size_t k) -> void {
    if (k == count) {
      if (all_selections_are_facets(f))
        out.push_back({c.squares, f});
      return;
    }
    const EntrySet range = c.ground[k];
    EntrySet sub = 0;
    do {
      sub = (sub - range) & range;
      if (sub != 0) {
        f[k] = sub;
        self(self, k + 1);
      }
    } while (sub != 0);
    f[k] = 0;
  };
  if (count == 0 || !c.facets.empty())
    search(search, 0);
  return out;
}

Polynomial k_poly_definition(const TableauComplex &c,
                             unsigned max_ground_set) {
  check_ground_set(c, max_ground_set);
  const Ring ring = vertex_ring(c);
  const auto is_face = face_table(c);
  const Mask full = is_face.size() - 1;
  std::vector<long long> h(is_face.size());
  for (Mask sigma = 0; sigma < h.size(); ++sigma)
    h[sigma] = is_face[full ^ sigma];
  for (std::size_t b = 0; b < c.vertices.size(); ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask m = 0; m < h.size(); ++m)
      if (m & bit)
        h[m] -= h[m ^ bit];
  }
  std::vector<Term> terms;
  for (Mask tau = 0; tau < h.size(); ++tau) {
    if (h[tau] == 0)
      continue;
    Term t{{}, Integer(static_cast<std::int64_t>(h[tau]))};
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
      t.monomial.exps[v] = static_cast<std::uint8_t>((tau >> v) & 1u);
    terms.push_back(std::move(t));
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial kmy_formula1(const TableauComplex &c) {
  const Ring ring = vertex_ring(c);
  const RotheCells cells(c.w);
  PolynomialSum sum(ring);
  for_each_svrt(cells, [&](const std::vector<EntrySet> &t) {
    auto p = Polynomial::constant(ring, 1);
    std::size_t size = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if ((t[k] & ~c.ground[k]) != 0)
        throw Error(ErrorCode::Internal,
                    "a set-valued Rothe tableau of " + c.w.to_string() +
                        " leaves the ground set");
      for (unsigned v : entry_values(t[k])) {
        p *= one_minus_t(ring, c.vertex_index(k, v));
        ++size;
      }
    }
    sum.add(p, (size - t.size()) % 2 == 0 ? 1 : -1);
  });
  return sum.result();
}

Polynomial kmy_formula2(const TableauComplex &c, unsigned max_ground_set) {
  const Ring ring = vertex_ring(c);
  PolynomialSum sum(ring);
  for (const auto &f : faces(c, max_ground_set)) {
    auto p = Polynomial::constant(ring, 1);
    for (std::size_t k = 0; k < f.entries.size(); ++k) {
      for (unsigned v : entry_values(f.entries[k]))
        p *= one_minus_t(ring, c.vertex_index(k, v));
      for (unsigned v : entry_values(c.ground[k] & ~f.entries[k]))
        p *= t_var(ring, c.vertex_index(k, v));
    }
    sum.add(p);
  }
  return sum.result();
}

Polynomial kmy_formula3(const TableauComplex &c) {
  const Ring ring = vertex_ring(c);
  const std::set<std::vector<EntrySet>> facets(c.facets.begin(),
                                               c.facets.end());
  PolynomialSum sum(ring);
  for (const auto &f : c.facets) {
    auto p = Polynomial::constant(ring, 1);
    auto moved = f;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const unsigned value = entry_min(f[k]);
      p *= one_minus_t(ring, c.vertex_index(k, value));
      for (unsigned a = value + 1; a <= c.squares.squares()[k].row; ++a) {
        moved[k] = entry_set({a});
        if (facets.count(moved))
          p *= t_var(ring, c.vertex_index(k, a));
      }
      moved[k] = f[k];
    }
    sum.add(p);
  }
  return sum.result();
}

Polynomial specialize_vertices(const TableauComplex &c, const Polynomial &k) {
  const RotheCells cells(c.w);
  const Ring target = ring_for(c.w.size());
  const auto one = Polynomial::constant(target, 1);
  std::vector<Polynomial> image;
  for (const auto &v : c.vertices) {
    const auto square = c.squares.index_of(v.square);
    image.push_back((one - Polynomial::x(target, v.value)) *
                    (one - Polynomial::y(target,
                                         cells.y_index(square, v.value))));
  }
  return k.substitute(image, {}, target);
}

long long reduced_euler_characteristic(const TableauComplex &c,
                                       unsigned max_ground_set) {
  check_ground_set(c, max_ground_set);
  const auto is_face = face_table(c);
  const auto e = static_cast<long long>(c.vertices.size());
  long long chi = 0;
  for (Mask f = 0; f < is_face.size(); ++f) {
    if (!is_face[f])
      continue;
    const long long sigma = e - __builtin_popcountll(f);
    chi += (sigma % 2 == 1) ? 1 : -1;
  }
  return chi;
}

} // namespace rothe
