#include "rothe/oracle.hpp"

#include "rothe/error.hpp"

namespace rothe {

Ring ring_for(unsigned n) { return Ring{n, n}; }

Polynomial grothendieck_longest(unsigned n) {
  const Ring ring = ring_for(n);
  Polynomial out = Polynomial::constant(ring, 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; i + j <= n; ++j)
      out *= oplus(Polynomial::x(ring, i), Polynomial::y(ring, j));
  return out;
}

Polynomial schubert_longest(unsigned n) {
  const Ring ring = ring_for(n);
  Polynomial out = Polynomial::constant(ring, 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; i + j <= n; ++j)
      out *= Polynomial::x(ring, i) - Polynomial::y(ring, j);
  return out;
}

namespace {

void sweep(unsigned n, bool grothendieck, const OracleVisitor &visit) {
  if (n < 1 || 2 * n > kMaxVariables)
    throw Error(ErrorCode::ResourceCap,
                "oracle size " + std::to_string(n) + " is not supported");
  const unsigned top = n * (n - 1) / 2;
  std::vector<std::vector<Permutation>> levels(top + 1);
  for (auto &w : all_permutations(n))
    levels[w.length()].push_back(w);

  std::map<std::vector<unsigned>, Polynomial> above, current;
  for (unsigned len = top + 1; len-- > 0;) {
    current.clear();
    for (const auto &w : levels[len]) {
      Polynomial g;
      if (const auto r = w.first_ascent()) {
        const auto &parent = above.at(w.times_simple(*r).word());
        g = grothendieck ? isobaric(parent, *r)
                         : divided_difference(parent, *r);
      } else {
        g = grothendieck ? grothendieck_longest(n) : schubert_longest(n);
      }
      visit(w, g);
      current.emplace(w.word(), std::move(g));
    }
    std::swap(above, current);
  }
}

} // namespace

void sweep_double_grothendieck(unsigned n, const OracleVisitor &visit) {
  sweep(n, true, visit);
}

void sweep_double_schubert(unsigned n, const OracleVisitor &visit) {
  sweep(n, false, visit);
}

GrothendieckOracle::GrothendieckOracle(unsigned n) : n_(n) {
  if (n < 1 || 2 * n > kMaxVariables)
    throw Error(ErrorCode::ResourceCap,
                "oracle size " + std::to_string(n) + " is not supported");
}

void GrothendieckOracle::check_size(const Permutation &w) const {
  if (w.size() != n_)
    throw Error(ErrorCode::InvalidArgument,
                w.to_string() + " is not in S_" + std::to_string(n_));
}

Polynomial GrothendieckOracle::descend(Family family, const Permutation &w) {
  check_size(w);
  std::lock_guard lock(mutex_);
  auto &cache = family == Family::Grothendieck ? grothendieck_ : schubert_;

  // Walk up along smallest ascents until a cached permutation or w0.
  std::vector<std::pair<Permutation, unsigned>> path;
  Permutation u = w;
  while (!cache.count(u.word())) {
    const auto r = u.first_ascent();
    if (!r) {
      cache.emplace(u.word(), family == Family::Grothendieck
                                  ? grothendieck_longest(n_)
                                  : schubert_longest(n_));
      break;
    }
    path.emplace_back(u, *r);
    u = u.times_simple(*r);
  }
  Polynomial current = cache.at(u.word());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    current = family == Family::Grothendieck
                  ? isobaric(current, it->second)
                  : divided_difference(current, it->second);
    cache.emplace(it->first.word(), current);
  }
  return current;
}

Polynomial GrothendieckOracle::double_grothendieck(const Permutation &w) {
  return descend(Family::Grothendieck, w);
}

Polynomial GrothendieckOracle::double_schubert(const Permutation &w) {
  return descend(Family::Schubert, w);
}

Polynomial
GrothendieckOracle::double_schubert_from_grothendieck(const Permutation &w) {
  return negate_y(lowest_degree_component(double_grothendieck(w)));
}

Polynomial GrothendieckOracle::single_grothendieck(const Permutation &w) {
  return set_y_zero(double_grothendieck(w));
}

Polynomial GrothendieckOracle::single_schubert(const Permutation &w) {
  return set_y_zero(double_schubert(w));
}

} // namespace rothe
