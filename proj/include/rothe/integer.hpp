#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rothe {

/// Arbitrary-precision integer that stays in a machine word until an
/// operation overflows, then switches to boost::multiprecision::cpp_int.
/// Values that fit in int64 are always stored inline.
class Integer {
public:
  using Big = boost::multiprecision::cpp_int;

  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {} // NOLINT: implicit by design
  Integer(int v) noexcept : small_(v) {}          // NOLINT
  explicit Integer(const Big &v) { assign(v); }

  Integer(const Integer &other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr) {}
  Integer(Integer &&) noexcept = default;
  Integer &operator=(const Integer &other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<Big>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer &operator=(Integer &&) noexcept = default;

  /// Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(const std::string &text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool fits_int64() const noexcept { return !big_; }
  std::int64_t to_int64() const noexcept { return small_; }
  Big to_big() const { return big_ ? *big_ : Big(small_); }
  int sign() const noexcept;
  std::string to_string() const;

  Integer &operator+=(const Integer &o);
  Integer &operator-=(const Integer &o);
  Integer &operator*=(const Integer &o);
  Integer operator-() const;

  friend Integer operator+(Integer a, const Integer &b) { return a += b; }
  friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer &b) { return a *= b; }

  friend bool operator==(const Integer &a, const Integer &b) {
    if (!a.big_ && !b.big_)
      return a.small_ == b.small_;
    return a.to_big() == b.to_big();
  }
  friend bool operator<(const Integer &a, const Integer &b) {
    if (!a.big_ && !b.big_)
      return a.small_ < b.small_;
    return a.to_big() < b.to_big();
  }
  friend bool operator>(const Integer &a, const Integer &b) { return b < a; }

  friend std::ostream &operator<<(std::ostream &os, const Integer &v);

private:
  void assign(const Big &v);

  std::int64_t small_ = 0;
  std::unique_ptr<Big> big_;
};

} // namespace rothe
