#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"
#include "rothe/tableaux.hpp"

namespace rothe {

/// Default limit on |E| for computations that visit every subset of E.
inline constexpr unsigned kDefaultMaxGroundSet = 20;

/// The pair (square -> value). As a vertex of the complex it stands for
/// (square -/-> value), with variable t_k for the k-th vertex (1-based).
struct Vertex {
  Square square;
  unsigned value = 0;

  auto operator<=>(const Vertex &) const = default;
};

/// The Rothe tableau complex: facets are the SRT of w, the ground set E is
/// their union.
struct TableauComplex {
  Permutation w;
  Diagram squares;
  /// E in (row, column, value) order.
  std::vector<Vertex> vertices;
  /// E_B per square, as entry sets.
  std::vector<EntrySet> ground;
  /// Entries per square of every SRT, in enumeration order.
  std::vector<std::vector<EntrySet>> facets;

  /// Strict order on squares: less[a][b] iff a < b, the transitive closure
  /// of "same row and a right of b" or "same column and a above b".
  std::vector<std::vector<bool>> less;
  /// Pairs a < b in the same column.
  std::vector<std::pair<std::size_t, std::size_t>> psi;

  /// Index into `vertices`. Throws InvalidArgument when (square, value) is
  /// not in E.
  std::size_t vertex_index(std::size_t square, unsigned value) const;
};

TableauComplex build_rothe_complex(const Permutation &w);

/// Maps f: D(w) -> Y with f(B) in {1..i}, weakly order preserving for
/// `less` and strict on `psi`. Same entry layout as the facets.
std::vector<std::vector<EntrySet>> kmy_tableaux(const TableauComplex &c);

/// Ring of the t-variables, one x-block variable per vertex.
/// Throws GroundSetTooLarge beyond kMaxVariables.
Ring vertex_ring(const TableauComplex &c);

/// Set-valued tableaux F inside E that contain a facet.
/// Throws GroundSetTooLarge when |E| > max_ground_set.
std::vector<SetValuedTableau>
faces(const TableauComplex &c, unsigned max_ground_set = kDefaultMaxGroundSet);

/// Vertex indices of a face F: the pairs of E missing from F.
std::vector<std::size_t> face_vertices(const TableauComplex &c,
                                       const SetValuedTableau &f);

/// Set-valued tableaux F inside E, nonempty on every square, all of whose
/// single-valued selections are facets. Throws GroundSetTooLarge.
std::vector<SetValuedTableau>
u1_tableaux(const TableauComplex &c,
            unsigned max_ground_set = kDefaultMaxGroundSet);

/// sum over faces sigma of prod_{v in sigma} t_v prod_{v not in sigma}
/// (1 - t_v), expanded coefficient by coefficient with a Moebius transform
/// over subsets of E. Throws GroundSetTooLarge.
Polynomial k_poly_definition(const TableauComplex &c,
                             unsigned max_ground_set = kDefaultMaxGroundSet);

/// Signed sum over SVRT(w) of prod (1 - t). Every SVRT entry must lie in E.
Polynomial kmy_formula1(const TableauComplex &c);
/// Sum over faces of prod_{F} (1 - t) prod_{E minus F} t.
/// Throws GroundSetTooLarge.
Polynomial kmy_formula2(const TableauComplex &c,
                        unsigned max_ground_set = kDefaultMaxGroundSet);
/// Sum over facets f of prod (1 - t_{f(x)}) prod_{a in Y_f(x)} t_a.
Polynomial kmy_formula3(const TableauComplex &c);

/// t_(B -/-> a) -> (1 - x_a)(1 - y_{m_ij(w)+i-a}) into the ring of S_n.
Polynomial specialize_vertices(const TableauComplex &c, const Polynomial &k);

/// sum over faces sigma (as vertex sets) of (-1)^{|sigma|-1}.
/// Throws GroundSetTooLarge.
long long reduced_euler_characteristic(
    const TableauComplex &c, unsigned max_ground_set = kDefaultMaxGroundSet);

} // namespace rothe
