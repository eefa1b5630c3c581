#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"

namespace rothe {

/// Ring used for permutations of S_n: x_1..x_n and y_1..y_n.
Ring ring_for(unsigned n);

/// prod_{i+j<=n} (x_i (+) y_j).
Polynomial grothendieck_longest(unsigned n);

/// prod_{i+j<=n} (x_i - y_j).
Polynomial schubert_longest(unsigned n);

using OracleVisitor =
    std::function<void(const Permutation &, const Polynomial &)>;

/// Visits G_w(x, y) for every w in S_n, longest permutations first and
/// lexicographically within one length. Only two length levels are held in
/// memory at a time, which keeps exhaustive sweeps over S_6 small.
void sweep_double_grothendieck(unsigned n, const OracleVisitor &visit);

/// Same traversal for the double Schubert polynomials via d_i.
void sweep_double_schubert(unsigned n, const OracleVisitor &visit);

/// Double Grothendieck and Schubert polynomials of S_n computed by the
/// operator recursions from the longest permutation. Each recursion descends
/// along the smallest ascent. Results are memoized per permutation; the cache
/// is guarded by a mutex so one instance can be shared between threads.
class GrothendieckOracle {
public:
  explicit GrothendieckOracle(unsigned n);

  unsigned n() const noexcept { return n_; }
  Ring ring() const noexcept { return ring_for(n_); }

  /// G_w(x, y), via pi_i from G_{w0}.
  Polynomial double_grothendieck(const Permutation &w);
  /// S_w(x, y), via d_i from prod (x_i - y_j).
  Polynomial double_schubert(const Permutation &w);
  /// negate_y(lowest_degree_component(G_w)).
  Polynomial double_schubert_from_grothendieck(const Permutation &w);

  Polynomial single_grothendieck(const Permutation &w);
  Polynomial single_schubert(const Permutation &w);

private:
  enum class Family { Grothendieck, Schubert };
  Polynomial descend(Family family, const Permutation &w);
  void check_size(const Permutation &w) const;

  unsigned n_;
  std::mutex mutex_;
  std::map<std::vector<unsigned>, Polynomial> grothendieck_;
  std::map<std::vector<unsigned>, Polynomial> schubert_;
};

} // namespace rothe
