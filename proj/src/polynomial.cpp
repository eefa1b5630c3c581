#include "rothe/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_map>

#include "rothe/error.hpp"

namespace rothe {

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps)
    d += e;
  return d;
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept {
  std::uint64_t words[kMaxVariables / 8];
  std::memcpy(words, m.exps.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

bool canonical_less(const Monomial &a, const Monomial &b) noexcept {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db)
    return da < db;
  return std::memcmp(b.exps.data(), a.exps.data(), kMaxVariables) < 0;
}

namespace {

void sort_terms(std::vector<Term> &terms) {
  std::vector<std::pair<unsigned, std::size_t>> order(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k)
    order[k] = {terms[k].monomial.degree(), k};
  std::sort(order.begin(), order.end(), [&](const auto &l, const auto &r) {
    if (l.first != r.first)
      return l.first < r.first;
    return std::memcmp(terms[r.second].monomial.exps.data(),
                       terms[l.second].monomial.exps.data(),
                       kMaxVariables) < 0;
  });
  std::vector<Term> sorted;
  sorted.reserve(terms.size());
  for (const auto &o : order)
    sorted.push_back(std::move(terms[o.second]));
  terms = std::move(sorted);
}

using TermMap = std::unordered_map<Monomial, Integer, MonomialHash>;

std::vector<Term> flatten(TermMap &acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto &[m, c] : acc)
    if (!c.is_zero())
      out.push_back(Term{m, std::move(c)});
  sort_terms(out);
  return out;
}

void check_exponent(unsigned e) {
  if (e > 255)
    throw Error(ErrorCode::ResourceCap, "exponent exceeds 255");
}

} // namespace

// Construction -------------------------------------------------------------

Polynomial Polynomial::constant(Ring ring, const Integer &c) {
  Polynomial p(ring);
  if (!c.is_zero())
    p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::x(Ring ring, unsigned i) {
  if (i < 1 || i > ring.nx)
    throw Error(ErrorCode::ValueOutOfRange,
                "x_" + std::to_string(i) + " is not a variable of the ring");
  Polynomial p(ring);
  Monomial m;
  m.exps[i - 1] = 1;
  p.terms_.push_back(Term{m, 1});
  return p;
}

Polynomial Polynomial::y(Ring ring, unsigned j) {
  if (j < 1 || j > ring.ny)
    throw Error(ErrorCode::ValueOutOfRange,
                "y_" + std::to_string(j) + " is not a variable of the ring");
  Polynomial p(ring);
  Monomial m;
  m.exps[ring.nx + j - 1] = 1;
  p.terms_.push_back(Term{m, 1});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  if (ring.variables() > kMaxVariables)
    throw Error(ErrorCode::ResourceCap, "too many variables in ring");
  TermMap acc;
  for (auto &t : terms) {
    for (unsigned v = ring.variables(); v < kMaxVariables; ++v)
      if (t.monomial.exps[v] != 0)
        throw Error(ErrorCode::RingMismatch,
                    "term uses a variable outside the ring");
    acc[t.monomial] += t.coefficient;
  }
  Polynomial p(ring);
  p.terms_ = flatten(acc);
  return p;
}

void Polynomial::check_ring(const Polynomial &other) const {
  if (!(ring_ == other.ring_))
    throw Error(ErrorCode::RingMismatch,
                "polynomials belong to different rings");
}

// Arithmetic ---------------------------------------------------------------

std::vector<Term> Polynomial::merge(const std::vector<Term> &a,
                                    const std::vector<Term> &b,
                                    bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && canonical_less(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() ||
               canonical_less(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (subtract)
        out.back().coefficient = -out.back().coefficient;
    } else {
      Integer c = a[i].coefficient;
      if (subtract)
        c -= b[j].coefficient;
      else
        c += b[j].coefficient;
      if (!c.is_zero())
        out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto &t : p.terms_)
    t.coefficient = -t.coefficient;
  return p;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  check_ring(other);
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial &Polynomial::operator*=(const Integer &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  if (a.is_zero() || b.is_zero())
    return out;
  const unsigned nv = a.ring_.variables();
  if (a.size() == 1 || b.size() == 1) {
    // Multiplying by a monomial preserves the term order.
    const Term &single = a.size() == 1 ? a.terms_.front() : b.terms_.front();
    const Polynomial &other = a.size() == 1 ? b : a;
    out.terms_.reserve(other.size());
    for (const auto &t : other.terms_) {
      Term product{t.monomial, t.coefficient * single.coefficient};
      for (unsigned v = 0; v < nv; ++v) {
        const unsigned e = unsigned{product.monomial.exps[v]} +
                           single.monomial.exps[v];
        check_exponent(e);
        product.monomial.exps[v] = static_cast<std::uint8_t>(e);
      }
      out.terms_.push_back(std::move(product));
    }
    return out;
  }
  TermMap acc;
  acc.reserve(a.size() * b.size());
  for (const auto &ta : a.terms_) {
    for (const auto &tb : b.terms_) {
      Monomial m;
      for (unsigned v = 0; v < nv; ++v) {
        const unsigned e = unsigned{ta.monomial.exps[v]} + tb.monomial.exps[v];
        check_exponent(e);
        m.exps[v] = static_cast<std::uint8_t>(e);
      }
      acc[m] += ta.coefficient * tb.coefficient;
    }
  }
  out.terms_ = flatten(acc);
  return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
  *this = *this * other;
  return *this;
}

bool operator==(const Polynomial &a, const Polynomial &b) {
  if (!(a.ring_ == b.ring_))
    throw Error(ErrorCode::RingMismatch,
                "comparing polynomials from different rings");
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    Integer c = t.coefficient;
    const bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (unsigned v = 0; v < ring_.variables(); ++v) {
      const unsigned e = t.monomial.exps[v];
      if (e == 0)
        continue;
      std::string name = v < ring_.nx ? "x" + std::to_string(v + 1)
                                      : "y" + std::to_string(v - ring_.nx + 1);
      if (e > 1)
        name += "^" + std::to_string(e);
      factors.push_back(std::move(name));
    }
    if (factors.empty()) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c << '*';
    for (std::size_t k = 0; k < factors.size(); ++k)
      os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

Polynomial Polynomial::substitute(std::span<const Polynomial> image_x,
                                  std::span<const Polynomial> image_y,
                                  Ring target) const {
  if (image_x.size() != ring_.nx || image_y.size() != ring_.ny)
    throw Error(ErrorCode::InvalidArgument,
                "substitution needs one image per variable");
  for (const auto &p : image_x)
    if (!(p.ring() == target))
      throw Error(ErrorCode::RingMismatch, "image outside the target ring");
  for (const auto &p : image_y)
    if (!(p.ring() == target))
      throw Error(ErrorCode::RingMismatch, "image outside the target ring");

  // powers[v][e] = image_v^e, built lazily.
  std::vector<std::vector<Polynomial>> powers(ring_.variables());
  auto power = [&](unsigned v, unsigned e) -> const Polynomial & {
    auto &cache = powers[v];
    if (cache.empty())
      cache.push_back(Polynomial::constant(target, 1));
    const Polynomial &base = v < ring_.nx ? image_x[v] : image_y[v - ring_.nx];
    while (cache.size() <= e)
      cache.push_back(cache.back() * base);
    return cache[e];
  };

  Polynomial out(target);
  for (const auto &t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (unsigned v = 0; v < ring_.variables(); ++v)
      if (t.monomial.exps[v] != 0)
        prod *= power(v, t.monomial.exps[v]);
    out += prod;
  }
  return out;
}

// Operators ----------------------------------------------------------------

void PolynomialSum::add(const Polynomial &f, int sign) {
  if (!(f.ring() == ring_))
    throw Error(ErrorCode::RingMismatch, "polynomials from different rings");
  for (const auto &t : f.terms()) {
    auto &c = acc_[t.monomial];
    if (sign < 0)
      c -= t.coefficient;
    else
      c += t.coefficient;
  }
}

Polynomial PolynomialSum::result() const {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (const auto &[m, c] : acc_)
    if (!c.is_zero())
      terms.push_back(Term{m, c});
  return Polynomial::from_terms(ring_, std::move(terms));
}

Polynomial oplus(const Polynomial &a, const Polynomial &b) {
  return a + b - a * b;
}

namespace {

void check_operator_index(const Polynomial &f, unsigned i) {
  if (i < 1 || i + 1 > f.ring().nx)
    throw Error(ErrorCode::ValueOutOfRange,
                "operator index " + std::to_string(i) +
                    " needs x_" + std::to_string(i + 1) + " in the ring");
}

} // namespace

Polynomial swap_x(const Polynomial &f, unsigned i) {
  check_operator_index(f, i);
  std::vector<Term> terms = f.terms();
  for (auto &t : terms)
    std::swap(t.monomial.exps[i - 1], t.monomial.exps[i]);
  sort_terms(terms);
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial divided_difference(const Polynomial &f, unsigned i) {
  check_operator_index(f, i);
  const unsigned a_slot = i - 1; // x_i
  const unsigned b_slot = i;     // x_{i+1}

  // Numerator f - s_i f, keyed by the part of each monomial not involving
  // x_i or x_{i+1}. Within one key the numerator is sum_k c_k(x_{i+1}) x_i^k,
  // which is divided by (x_i - x_{i+1}) as a polynomial in x_i.
  struct Entry {
    Monomial rest;
    unsigned a;
    unsigned b;
    const Integer *coefficient;
    bool negated;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * f.size());
  for (const auto &t : f.terms()) {
    Monomial rest = t.monomial;
    const unsigned a = rest.exps[a_slot];
    const unsigned b = rest.exps[b_slot];
    if (a == b)
      continue; // cancels against its own swap
    rest.exps[a_slot] = 0;
    rest.exps[b_slot] = 0;
    entries.push_back(Entry{rest, a, b, &t.coefficient, false});
    entries.push_back(Entry{rest, b, a, &t.coefficient, true});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry &l, const Entry &r) {
              const int c = std::memcmp(l.rest.exps.data(), r.rest.exps.data(),
                                        kMaxVariables);
              if (c != 0)
                return c < 0;
              return l.a != r.a ? l.a < r.a : l.b < r.b;
            });

  std::vector<Term> quotient;
  quotient.reserve(f.size());
  std::vector<Integer> table; // table[a * width + b]
  std::vector<Integer> carry, next;
  for (std::size_t lo = 0; lo < entries.size();) {
    std::size_t hi = lo;
    unsigned top_a = 0, top_b = 0;
    while (hi < entries.size() &&
           std::memcmp(entries[hi].rest.exps.data(),
                       entries[lo].rest.exps.data(), kMaxVariables) == 0) {
      top_a = std::max(top_a, entries[hi].a);
      top_b = std::max(top_b, entries[hi].b);
      ++hi;
    }
    // Quotient exponents of x_{i+1} can reach top_a + top_b.
    const unsigned width = top_a + top_b + 2;
    table.assign((top_a + 1) * width, Integer(0));
    for (std::size_t e = lo; e < hi; ++e) {
      auto &cell = table[entries[e].a * width + entries[e].b];
      if (entries[e].negated)
        cell -= *entries[e].coefficient;
      else
        cell += *entries[e].coefficient;
    }
    const Monomial &rest = entries[lo].rest;
    lo = hi;
    if (top_a == 0)
      throw Error(ErrorCode::NonExactDivision,
                  "divided difference left a remainder");

    // q_{k-1} = c_k + x_{i+1} q_k, remainder = c_0 + x_{i+1} q_0.
    carry.assign(width, Integer(0));
    for (unsigned k = top_a; k >= 1; --k) {
      next.assign(table.begin() + k * width, table.begin() + (k + 1) * width);
      for (unsigned b = 0; b + 1 < width; ++b)
        if (!carry[b].is_zero())
          next[b + 1] += carry[b];
      for (unsigned b = 0; b < width; ++b) {
        if (next[b].is_zero())
          continue;
        check_exponent(b);
        Monomial m = rest;
        m.exps[a_slot] = static_cast<std::uint8_t>(k - 1);
        m.exps[b_slot] = static_cast<std::uint8_t>(b);
        quotient.push_back(Term{m, next[b]});
      }
      std::swap(carry, next);
    }
    for (unsigned b = 0; b < width; ++b) {
      Integer r = table[b];
      if (b > 0)
        r += carry[b - 1];
      if (!r.is_zero())
        throw Error(ErrorCode::NonExactDivision,
                    "divided difference left a remainder");
    }
    if (!carry[width - 1].is_zero())
      throw Error(ErrorCode::NonExactDivision,
                  "divided difference left a remainder");
  }
  // Quotient monomials are distinct by construction.
  sort_terms(quotient);
  Polynomial out(f.ring());
  out.terms_ = std::move(quotient);
  return out;
}

Polynomial isobaric(const Polynomial &f, unsigned i) {
  check_operator_index(f, i);
  return divided_difference(f - Polynomial::x(f.ring(), i + 1) * f, i);
}

Polynomial lowest_degree_component(const Polynomial &f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroPolynomial,
                "zero polynomial has no lowest-degree component");
  const unsigned d = f.terms().front().monomial.degree();
  std::vector<Term> terms;
  for (const auto &t : f.terms()) {
    if (t.monomial.degree() != d)
      break;
    terms.push_back(t);
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial negate_y(const Polynomial &f) {
  std::vector<Term> terms = f.terms();
  const Ring ring = f.ring();
  for (auto &t : terms) {
    unsigned ydeg = 0;
    for (unsigned j = 0; j < ring.ny; ++j)
      ydeg += t.monomial.exps[ring.nx + j];
    if (ydeg % 2 == 1)
      t.coefficient = -t.coefficient;
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial set_y_zero(const Polynomial &f) {
  std::vector<Term> terms;
  const Ring ring = f.ring();
  for (const auto &t : f.terms()) {
    bool has_y = false;
    for (unsigned j = 0; j < ring.ny && !has_y; ++j)
      has_y = t.monomial.exps[ring.nx + j] != 0;
    if (!has_y)
      terms.push_back(t);
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial lemma41_rhs(Ring ring, unsigned r, std::span<const unsigned> a) {
  if (a.empty())
    throw Error(ErrorCode::EmptySequence, "sequence must be nonempty");
  const std::size_t m = a.size();
  const Polynomial xr = Polynomial::x(ring, r);
  const Polynomial xr1 = Polynomial::x(ring, r + 1);
  std::vector<Polynomial> left, right; // x_r (+) y_{a_j}, x_{r+1} (+) y_{a_j}
  for (unsigned aj : a) {
    const Polynomial yj = Polynomial::y(ring, aj);
    left.push_back(oplus(xr, yj));
    right.push_back(oplus(xr1, yj));
  }
  // prefix[k] = prod_{j<k} left_j, suffix[k] = prod_{j>=k} right_j (0-based).
  std::vector<Polynomial> prefix(m + 1, Polynomial::constant(ring, 1));
  std::vector<Polynomial> suffix(m + 1, Polynomial::constant(ring, 1));
  for (std::size_t k = 0; k < m; ++k)
    prefix[k + 1] = prefix[k] * left[k];
  for (std::size_t k = m; k-- > 0;)
    suffix[k] = suffix[k + 1] * right[k];

  Polynomial out(ring);
  for (std::size_t k = 0; k < m; ++k)
    out += prefix[k] * suffix[k + 1];
  for (std::size_t k = 0; k + 1 < m; ++k)
    out -= prefix[k + 1] * suffix[k + 1];
  return out;
}

} // namespace rothe
