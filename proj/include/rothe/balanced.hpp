#pragma once

#include <vector>

#include "rothe/permutation.hpp"
#include "rothe/polynomial.hpp"
#include "rothe/tableaux.hpp"

namespace rothe {

/// One positive integer per square, in the row-major order of the shape.
struct Labeling {
  Diagram shape;
  std::vector<unsigned> labels;

  /// Throws SquareNotInDiagram.
  unsigned at(Square s) const { return labels[shape.index_of(s)]; }

  friend bool operator==(const Labeling &, const Labeling &) = default;
};

/// The squares of D(w) weakly right of the corner in its row (arm, left to
/// right) and weakly below it in its column (leg, top to bottom). Both
/// include the corner.
struct Hook {
  Square corner;
  std::vector<Square> arm;
  std::vector<Square> leg;

  /// Rightmost arm square leftwards to the corner, then down the leg.
  std::vector<Square> path() const;
  /// Index of the corner in path().
  std::size_t corner_position() const { return arm.size() - 1; }
};

/// Throws SquareNotInDiagram.
Hook hook(const Permutation &w, unsigned i, unsigned j);

/// Every hook keeps its corner label after its labels are sorted weakly
/// increasing along Hook::path(). False if L does not label D(w).
bool is_balanced(const Permutation &w, const Labeling &l);

/// No repeated label within a column and L(i,j) <= i.
bool is_column_strict_flagged(const Permutation &w, const Labeling &l);

/// is_balanced and is_column_strict_flagged.
bool in_csbl(const Permutation &w, const Labeling &l);

/// True if the labeling, read as a single-valued tableau, is an SRT.
bool in_srt(const Permutation &w, const Labeling &l);

Labeling labeling_from_tableau(const SetValuedTableau &t);

/// Column strict balanced labelings with L(i,j) <= i, row-major
/// lexicographic order.
std::vector<Labeling> enumerate_csbl(const Permutation &w);

/// Sum over CSBL(w) of prod x_{L(i,j)}.
Polynomial fgrs_schubert(const Permutation &w);

/// The balanced labeling built from the lexicographically first 1432
/// occurrence. The result is checked to lie in CSBL(w) but not in SRT(w)
/// (Error{Internal} otherwise). Throws No1432Occurrence.
Labeling counterexample_labeling(const Permutation &w);

} // namespace rothe
