#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rothe/integer.hpp"

namespace rothe {

/// Upper bound on the number of variables in one ring (x block + y block).
inline constexpr unsigned kMaxVariables = 32;

/// Declares the variables x_1..x_nx and y_1..y_ny. Polynomials from different
/// rings never mix.
struct Ring {
  unsigned nx = 0;
  unsigned ny = 0;

  unsigned variables() const noexcept { return nx + ny; }
  friend bool operator==(const Ring &, const Ring &) = default;
};

struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exps{};

  unsigned degree() const noexcept;
  friend bool operator==(const Monomial &, const Monomial &) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept;
};

/// Canonical term order: ascending total degree, then lexicographically
/// larger exponent vectors (x block before y block) first.
bool canonical_less(const Monomial &a, const Monomial &b) noexcept;

struct Term {
  Monomial monomial;
  Integer coefficient;
};

/// Sparse polynomial with integer coefficients. Terms are stored in canonical
/// order without zero coefficients, so equal polynomials compare equal
/// term-by-term.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const Integer &c);
  static Polynomial x(Ring ring, unsigned i);
  static Polynomial y(Ring ring, unsigned j);
  /// Builds from arbitrary terms; merges duplicates and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring &ring() const noexcept { return ring_; }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Exponent of x_i (1-based) in `m`.
  unsigned x_exponent(const Monomial &m, unsigned i) const {
    return m.exps[i - 1];
  }
  unsigned y_exponent(const Monomial &m, unsigned j) const {
    return m.exps[ring_.nx + j - 1];
  }

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Integer &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Integer &c) {
    return a *= c;
  }

  friend bool operator==(const Polynomial &a, const Polynomial &b);
  friend Polynomial divided_difference(const Polynomial &f, unsigned i);

  /// Human-readable form, e.g. "x1 + y2 - x1*y2". "0" for the zero polynomial.
  std::string to_string() const;

  /// Ring homomorphism x_i -> image_x[i-1], y_j -> image_y[j-1] into the ring
  /// of the images. Empty image lists are allowed when the block is empty.
  Polynomial substitute(std::span<const Polynomial> image_x,
                        std::span<const Polynomial> image_y,
                        Ring target) const;

private:
  void check_ring(const Polynomial &other) const;
  static std::vector<Term> merge(const std::vector<Term> &a,
                                 const std::vector<Term> &b, bool subtract);

  Ring ring_{};
  std::vector<Term> terms_;
};

/// Accumulates a long sum of polynomials without re-merging sorted term
/// lists on every addition.
class PolynomialSum {
public:
  explicit PolynomialSum(Ring ring) : ring_(ring) {}

  /// Adds sign * f. Throws Error{RingMismatch}.
  void add(const Polynomial &f, int sign = 1);
  Polynomial result() const;

private:
  Ring ring_;
  std::unordered_map<Monomial, Integer, MonomialHash> acc_;
};

/// a + b - ab.
Polynomial oplus(const Polynomial &a, const Polynomial &b);

/// s_i f: swaps x_i and x_{i+1}; y variables are fixed.
Polynomial swap_x(const Polynomial &f, unsigned i);

/// (f - s_i f) / (x_i - x_{i+1}), by synthetic division with a zero-remainder
/// check (Error{NonExactDivision} otherwise).
Polynomial divided_difference(const Polynomial &f, unsigned i);

/// pi_i f = d_i((1 - x_{i+1}) f).
Polynomial isobaric(const Polynomial &f, unsigned i);

/// Terms of minimal total degree. Throws Error{ZeroPolynomial}.
Polynomial lowest_degree_component(const Polynomial &f);

/// y_j -> -y_j for all j.
Polynomial negate_y(const Polynomial &f);

/// y_j -> 0 for all j.
Polynomial set_y_zero(const Polynomial &f);

/// Right-hand side of the product expansion of
/// pi_r((x_r + y_{a_1} - ...)...(x_r (+) y_{a_m})):
///   sum_{k=1}^m prod_{j<k} (x_r (+) y_{a_j}) prod_{j>k} (x_{r+1} (+) y_{a_j})
/// - sum_{k=1}^{m-1} prod_{j<=k} (x_r (+) y_{a_j}) prod_{j>k} (x_{r+1} (+) y_{a_j}).
/// Throws Error{EmptySequence} for an empty `a`.
Polynomial lemma41_rhs(Ring ring, unsigned r, std::span<const unsigned> a);

} // namespace rothe
