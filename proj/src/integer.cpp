#include "rothe/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace rothe {

void Integer::assign(const Big &v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    small_ = static_cast<std::int64_t>(v);
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<Big>(v);
  }
}

Integer Integer::parse(const std::string &text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+'));
  if (start == text.size())
    throw std::invalid_argument("empty integer literal");
  for (std::size_t k = start; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("malformed integer literal '" + text + "'");
  Integer out;
  out.assign(Big(text));
  return out;
}

int Integer::sign() const noexcept {
  if (big_)
    return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::string Integer::to_string() const {
  return big_ ? big_->str() : std::to_string(small_);
}

Integer &Integer::operator+=(const Integer &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(to_big() + o.to_big());
  return *this;
}

Integer &Integer::operator-=(const Integer &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(to_big() - o.to_big());
  return *this;
}

Integer &Integer::operator*=(const Integer &o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign(to_big() * o.to_big());
  return *this;
}

Integer Integer::operator-() const {
  Integer out;
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
    out.small_ = -small_;
    return out;
  }
  out.assign(-to_big());
  return out;
}

std::ostream &operator<<(std::ostream &os, const Integer &v) {
  return os << v.to_string();
}

} // namespace rothe
