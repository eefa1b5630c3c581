#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"

namespace rothe {

/// A finite set of positive integers <= 32; bit t-1 stands for t.
using EntrySet = std::uint32_t;

EntrySet entry_set(std::initializer_list<unsigned> values);
EntrySet entry_set(std::span<const unsigned> values);
/// Increasing list of the members.
std::vector<unsigned> entry_values(EntrySet s);
unsigned entry_min(EntrySet s);
unsigned entry_max(EntrySet s);
inline unsigned entry_count(EntrySet s) {
  return static_cast<unsigned>(__builtin_popcount(s));
}
inline bool entry_contains(EntrySet s, unsigned t) {
  return t >= 1 && t <= 32 && ((s >> (t - 1)) & 1u);
}
/// "{3,2}" style, largest first.
std::string entry_to_string(EntrySet s);

/// A filling of a diagram by nonempty sets, stored in the row-major order of
/// the diagram squares. The flag is always (1, 2, ..., n).
struct SetValuedTableau {
  Diagram shape;
  std::vector<EntrySet> entries;

  /// Throws SquareNotInDiagram.
  EntrySet at(Square s) const { return entries[shape.index_of(s)]; }
  /// |T|, the total number of entries.
  std::size_t size() const;
  bool single_valued() const;

  friend bool operator==(const SetValuedTableau &,
                         const SetValuedTableau &) = default;
};

/// Per-square data of D(w) used by every tableau formula.
struct RotheCells {
  explicit RotheCells(const Permutation &w);

  Permutation w;
  Diagram diagram;
  std::vector<unsigned> m; // m_ij(w)
  /// Nearest square of D(w) to the left / right in the same row and above /
  /// below in the same column, or -1.
  std::vector<int> left, right, up, down;

  std::size_t size() const { return diagram.size(); }
  unsigned row(std::size_t k) const { return diagram.squares()[k].row; }

  /// m_ij(w) + i - t for square k. Throws Error{Internal} if the index
  /// leaves 1..n.
  unsigned y_index(std::size_t k, unsigned t) const;
};

/// x_t (+) y_{m_ij(w)+i-t}, the factor for entry t of square k.
struct WeightFactor {
  Square square;
  unsigned t = 0;
  unsigned x_index = 0;
  unsigned y_index = 0;
};

using EntryVisitor = std::function<void(const std::vector<EntrySet> &)>;

/// Backtracking enumeration in row-major square order; candidate sets are
/// visited in increasing bitmask order.
void for_each_svrt(const RotheCells &cells, const EntryVisitor &visit);
void for_each_srt(const RotheCells &cells, const EntryVisitor &visit);

std::vector<SetValuedTableau> enumerate_svrt(const Permutation &w);
std::vector<SetValuedTableau> enumerate_srt(const Permutation &w);
/// Fillings F with F(B) a nonempty subset of E_B that contain some SRT.
std::vector<SetValuedTableau> enumerate_lsvrt(const Permutation &w);

/// Literal membership tests, checking every pair of squares.
bool is_svrt(const Permutation &w, const SetValuedTableau &t);
bool is_srt(const Permutation &w, const SetValuedTableau &t);
bool is_lsvrt(const Permutation &w, const SetValuedTableau &t);
/// Flagged nonempty sets from which some SRT can be picked, with no bound
/// by E_B. Strictly larger than LSVRT; the limit sum is wrong over it.
bool admits_srt_selection(const Permutation &w, const SetValuedTableau &t);

/// E_B for every square of D(w), from the SRT.
std::vector<EntrySet> escape_sets(const Permutation &w);
/// Throws SquareNotInDiagram.
EntrySet escape_set_E(const Permutation &w, Square b);

/// Values m > T(B) such that replacing T(B) by m gives another SRT.
EntrySet upward_moves_Y(const Permutation &w, const SetValuedTableau &t,
                        Square b);

std::vector<WeightFactor> weight_factors(const Permutation &w,
                                         const SetValuedTableau &t);
/// (-1)^{|T|-l(w)} prod (x_t (+) y_{m+i-t}).
Polynomial weight_svrt(const Permutation &w, const SetValuedTableau &t);

/// Signed sum of weight_svrt over SVRT(w).
Polynomial formula_theorem11(const Permutation &w);
/// The same sum with every y set to 0 (computed directly).
Polynomial formula_corollary12(const Permutation &w);
/// Sum over SRT of prod (x_t - y_{m+i-t}).
Polynomial formula_corollary13_double(const Permutation &w);
/// Sum over SRT of prod x_t.
Polynomial formula_corollary13_single(const Permutation &w);
/// Sum over limit tableaux with escape factors over E_B minus T(B).
Polynomial formula_theorem14_limit(const Permutation &w);
/// Sum over SRT with escape factors over the upward moves.
Polynomial formula_theorem14_srt(const Permutation &w);

/// Flagged set-valued tableaux of skew shape lambda/mu: rows weakly
/// increasing, columns strictly increasing, entries of row r at most f_r.
/// Entries follow SkewShape::cells().
std::vector<std::vector<EntrySet>>
enumerate_skew_tableaux(const SkewShape &shape);

/// Signed sum over skew tableaux of sigma(w) with y-index
/// lambda_r + f_r - c - t + 1. Throws NotThreeTwoOneAvoiding.
Polynomial formula_matsumura_321(const Permutation &w);

/// Squares (i,j) of D(w) where lambda_r + f_r - c + 1 != m_ij(w) + i for the
/// corresponding skew square (r,c). Empty when the identity holds.
std::vector<Square> index_identity_violations(const Permutation &w);

} // namespace rothe
