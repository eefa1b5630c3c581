#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rothe {

/// A cell of the n x n grid. Rows are numbered top to bottom and columns left
/// to right, both starting at 1. The default ordering is row-major.
struct Square {
  unsigned row = 0;
  unsigned col = 0;

  auto operator<=>(const Square &) const = default;
};

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
  /// Validates that `word` is a rearrangement of 1..n.
  /// Throws Error{DuplicateValue} or Error{ValueOutOfRange}.
  static Permutation from_one_line(std::span<const unsigned> word);
  static Permutation identity(unsigned n);
  static Permutation longest(unsigned n);

  unsigned size() const noexcept { return static_cast<unsigned>(word_.size()); }
  const std::vector<unsigned> &word() const noexcept { return word_; }

  /// w_i, 1-based.
  unsigned operator()(unsigned i) const { return word_[i - 1]; }
  /// w^{-1}_v, 1-based.
  unsigned position(unsigned v) const { return inverse_[v - 1]; }

  Permutation inverse() const;
  /// Number of inversions.
  unsigned length() const noexcept;
  bool is_identity() const noexcept;
  bool is_longest() const noexcept;

  /// w s_i: the word with positions i and i+1 swapped.
  Permutation times_simple(unsigned i) const;

  /// Least r with w_r < w_{r+1}; empty exactly for the longest permutation.
  std::optional<unsigned> first_ascent() const noexcept;

  /// Digits for n <= 9, comma separated otherwise.
  std::string to_string() const;
  /// Accepts "426315" style digit strings or "1,4,5,9,6,10,7,8,2,3".
  static Permutation parse(const std::string &text);

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.word_ == b.word_;
  }
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.word_ <=> b.word_;
  }

private:
  explicit Permutation(std::vector<unsigned> word);

  std::vector<unsigned> word_;
  std::vector<unsigned> inverse_;
};

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(unsigned n);

/// A finite set of squares inside an n x n grid, kept in row-major order.
class Diagram {
public:
  Diagram() = default;
  Diagram(unsigned n, std::vector<Square> squares);

  unsigned grid_size() const noexcept { return n_; }
  const std::vector<Square> &squares() const noexcept { return squares_; }
  std::size_t size() const noexcept { return squares_.size(); }
  bool empty() const noexcept { return squares_.empty(); }
  bool contains(Square s) const;

  /// Position of `s` in row-major order. Throws SquareNotInDiagram.
  std::size_t index_of(Square s) const;

  /// Squares of row i, left to right.
  std::vector<Square> row(unsigned i) const;
  /// Squares of column j, top to bottom.
  std::vector<Square> column(unsigned j) const;

  friend bool operator==(const Diagram &, const Diagram &) = default;

private:
  unsigned n_ = 0;
  std::vector<Square> squares_;
};

/// D(w) = {(i,j) : w_i > j and w^{-1}_j > i}.
Diagram rothe_diagram(const Permutation &w);

/// True iff some subsequence of w is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation &w, const Permutation &pattern);

/// First occurrence of `pattern` in lexicographic order of index tuples.
std::optional<std::vector<unsigned>> find_pattern(const Permutation &w,
                                                  const Permutation &pattern);

/// m_ij(w): squares of D(w) in row i with column <= j.
/// Throws SquareNotInDiagram when (i,j) is not in D(w).
unsigned m_statistic(const Permutation &w, unsigned i, unsigned j);

/// The skew shape lambda/mu attached to a 321-avoiding permutation together
/// with the square correspondence D(w) -> sigma(w).
struct SkewShape {
  std::vector<unsigned> lambda;
  std::vector<unsigned> mu;
  /// Increasing positions i with w_i > i.
  std::vector<unsigned> flag;
  unsigned k = 0;

  /// (square of D(w), square of sigma(w)) pairs, in row-major order of D(w).
  std::vector<std::pair<Square, Square>> correspondence;

  /// Squares (r, c) with mu_r < c <= lambda_r, row-major.
  std::vector<Square> cells() const;
  std::size_t size() const;
};

/// Throws NotThreeTwoOneAvoiding for a permutation containing 321 and
/// NotApplicable for the identity (no position with w_i > i).
SkewShape skew_shape_321(const Permutation &w);

} // namespace rothe
