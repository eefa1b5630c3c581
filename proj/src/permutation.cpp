#include "rothe/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rothe/error.hpp"

namespace rothe {

Permutation::Permutation(std::vector<unsigned> word) : word_(std::move(word)) {
  inverse_.assign(word_.size(), 0);
  for (unsigned i = 0; i < word_.size(); ++i)
    inverse_[word_[i] - 1] = i + 1;
}

Permutation Permutation::from_one_line(std::span<const unsigned> word) {
  if (word.empty())
    throw Error(ErrorCode::InvalidArgument, "permutation word is empty");
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (unsigned v : word) {
    if (v < 1 || v > n)
      throw Error(ErrorCode::ValueOutOfRange,
                  "value " + std::to_string(v) + " outside 1.." +
                      std::to_string(n));
    if (seen[v])
      throw Error(ErrorCode::DuplicateValue,
                  "value " + std::to_string(v) + " appears twice");
    seen[v] = true;
  }
  return Permutation(std::vector<unsigned>(word.begin(), word.end()));
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> word(n);
  std::iota(word.begin(), word.end(), 1u);
  return from_one_line(word);
}

Permutation Permutation::longest(unsigned n) {
  std::vector<unsigned> word(n);
  for (unsigned i = 0; i < n; ++i)
    word[i] = n - i;
  return from_one_line(word);
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

unsigned Permutation::length() const noexcept {
  unsigned count = 0;
  for (std::size_t i = 0; i < word_.size(); ++i)
    for (std::size_t j = i + 1; j < word_.size(); ++j)
      if (word_[i] > word_[j])
        ++count;
  return count;
}

bool Permutation::is_identity() const noexcept {
  for (unsigned i = 0; i < word_.size(); ++i)
    if (word_[i] != i + 1)
      return false;
  return true;
}

bool Permutation::is_longest() const noexcept { return !first_ascent(); }

Permutation Permutation::times_simple(unsigned i) const {
  if (i < 1 || i >= size())
    throw Error(ErrorCode::ValueOutOfRange,
                "simple transposition s_" + std::to_string(i) +
                    " outside S_" + std::to_string(size()));
  auto word = word_;
  std::swap(word[i - 1], word[i]);
  return Permutation(std::move(word));
}

std::optional<unsigned> Permutation::first_ascent() const noexcept {
  for (unsigned r = 1; r < size(); ++r)
    if (word_[r - 1] < word_[r])
      return r;
  return std::nullopt;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool commas = size() > 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (commas && i > 0)
      os << ',';
    os << word_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string &text) {
  std::vector<unsigned> word;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(),
                       [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorCode::ParseError,
                    "malformed permutation entry '" + item + "'");
      word.push_back(static_cast<unsigned>(std::stoul(item)));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw Error(ErrorCode::ParseError,
                    "malformed permutation '" + text +
                        "' (use commas for n > 9)");
      word.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  return from_one_line(word);
}

std::vector<Permutation> all_permutations(unsigned n) {
  std::vector<unsigned> word(n);
  std::iota(word.begin(), word.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Diagram ------------------------------------------------------------------

Diagram::Diagram(unsigned n, std::vector<Square> squares)
    : n_(n), squares_(std::move(squares)) {
  std::sort(squares_.begin(), squares_.end());
  squares_.erase(std::unique(squares_.begin(), squares_.end()),
                 squares_.end());
  for (const auto &s : squares_)
    if (s.row < 1 || s.col < 1 || s.row > n_ || s.col > n_)
      throw Error(ErrorCode::ValueOutOfRange, "square outside the grid");
}

bool Diagram::contains(Square s) const {
  return std::binary_search(squares_.begin(), squares_.end(), s);
}

std::size_t Diagram::index_of(Square s) const {
  auto it = std::lower_bound(squares_.begin(), squares_.end(), s);
  if (it == squares_.end() || *it != s)
    throw Error(ErrorCode::SquareNotInDiagram,
                "square (" + std::to_string(s.row) + "," +
                    std::to_string(s.col) + ") is not in the diagram");
  return static_cast<std::size_t>(it - squares_.begin());
}

std::vector<Square> Diagram::row(unsigned i) const {
  std::vector<Square> out;
  for (const auto &s : squares_)
    if (s.row == i)
      out.push_back(s);
  return out;
}

std::vector<Square> Diagram::column(unsigned j) const {
  std::vector<Square> out;
  for (const auto &s : squares_)
    if (s.col == j)
      out.push_back(s);
  return out;
}

Diagram rothe_diagram(const Permutation &w) {
  const unsigned n = w.size();
  std::vector<Square> squares;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (w(i) > j && w.position(j) > i)
        squares.push_back({i, j});
  return Diagram(n, std::move(squares));
}

// Patterns -----------------------------------------------------------------

namespace {

bool extend_occurrence(const Permutation &w, const Permutation &pattern,
                       std::vector<unsigned> &chosen, unsigned next) {
  const unsigned k = pattern.size();
  if (chosen.size() == k)
    return true;
  const unsigned depth = static_cast<unsigned>(chosen.size());
  for (unsigned pos = next; pos + (k - depth) <= w.size() + 1; ++pos) {
    bool ok = true;
    for (unsigned a = 0; a < depth && ok; ++a) {
      const bool pattern_less = pattern(a + 1) < pattern(depth + 1);
      const bool word_less = w(chosen[a]) < w(pos);
      ok = pattern_less == word_less;
    }
    if (!ok)
      continue;
    chosen.push_back(pos);
    if (extend_occurrence(w, pattern, chosen, pos + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

std::optional<std::vector<unsigned>> find_pattern(const Permutation &w,
                                                  const Permutation &pattern) {
  if (pattern.size() > w.size())
    return std::nullopt;
  std::vector<unsigned> chosen;
  if (extend_occurrence(w, pattern, chosen, 1))
    return chosen;
  return std::nullopt;
}

bool contains_pattern(const Permutation &w, const Permutation &pattern) {
  return find_pattern(w, pattern).has_value();
}

unsigned m_statistic(const Permutation &w, unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > w.size() || j > w.size() ||
      !(w(i) > j && w.position(j) > i))
    throw Error(ErrorCode::SquareNotInDiagram,
                "square (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not in D(" + w.to_string() + ")");
  unsigned count = 0;
  for (unsigned k = 1; k <= j; ++k)
    if (w(i) > k && w.position(k) > i)
      ++count;
  return count;
}

// Skew shape of a 321-avoiding permutation ---------------------------------

std::vector<Square> SkewShape::cells() const {
  std::vector<Square> out;
  for (unsigned r = 1; r <= k; ++r)
    for (unsigned c = mu[r - 1] + 1; c <= lambda[r - 1]; ++c)
      out.push_back({r, c});
  return out;
}

std::size_t SkewShape::size() const {
  std::size_t total = 0;
  for (unsigned r = 0; r < k; ++r)
    total += lambda[r] - mu[r];
  return total;
}

SkewShape skew_shape_321(const Permutation &w) {
  static const Permutation p321 = Permutation::longest(3);
  if (contains_pattern(w, p321))
    throw Error(ErrorCode::NotThreeTwoOneAvoiding,
                w.to_string() + " contains the pattern 321");

  SkewShape shape;
  std::vector<unsigned> excedance_values; // h(w)
  for (unsigned i = 1; i <= w.size(); ++i) {
    if (w(i) > i) {
      shape.flag.push_back(i);
      excedance_values.push_back(w(i));
    }
  }
  shape.k = static_cast<unsigned>(shape.flag.size());
  if (shape.k == 0)
    throw Error(ErrorCode::NotApplicable,
                "the identity has no skew shape (empty flag)");

  const int top = static_cast<int>(excedance_values.back()) -
                  static_cast<int>(shape.k); // w_{f_k} - k
  for (unsigned r = 1; r <= shape.k; ++r) {
    const int f = static_cast<int>(shape.flag[r - 1]);
    const int h = static_cast<int>(excedance_values[r - 1]);
    const int lambda = top - (f - static_cast<int>(r));
    const int mu = top - (h - static_cast<int>(r));
    if (mu < 0 || mu > lambda)
      throw Error(ErrorCode::Internal, "inconsistent skew shape");
    shape.lambda.push_back(static_cast<unsigned>(lambda));
    shape.mu.push_back(static_cast<unsigned>(mu));
  }
  for (unsigned r = 1; r < shape.k; ++r)
    if (shape.lambda[r] > shape.lambda[r - 1] || shape.mu[r] > shape.mu[r - 1])
      throw Error(ErrorCode::Internal, "skew shape is not a partition pair");

  // Delete the empty rows f^c(w) and the empty columns h(w), then reflect the
  // compressed diagram about a vertical line.
  const auto diagram = rothe_diagram(w);
  std::vector<unsigned> row_index(w.size() + 1, 0);
  for (unsigned r = 1; r <= shape.k; ++r)
    row_index[shape.flag[r - 1]] = r;
  std::vector<unsigned> col_index(w.size() + 1, 0);
  unsigned kept = 0;
  for (unsigned j = 1; j <= w.size(); ++j) {
    if (std::find(excedance_values.begin(), excedance_values.end(), j) ==
        excedance_values.end())
      col_index[j] = ++kept;
  }
  const unsigned width = static_cast<unsigned>(top);
  for (const auto &s : diagram.squares()) {
    if (row_index[s.row] == 0 || col_index[s.col] == 0 ||
        col_index[s.col] > width)
      throw Error(ErrorCode::Internal,
                  "Rothe square outside the compressed region");
    shape.correspondence.push_back(
        {s, Square{row_index[s.row], width - col_index[s.col] + 1}});
  }

  auto image = shape.cells();
  std::vector<Square> mapped;
  for (const auto &p : shape.correspondence)
    mapped.push_back(p.second);
  std::sort(mapped.begin(), mapped.end());
  if (mapped != image)
    throw Error(ErrorCode::Internal,
                "compressed Rothe diagram does not match lambda/mu");
  return shape;
}

} // namespace rothe
