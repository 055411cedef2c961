#include "choicekit/degree.hpp"

#include <ostream>

namespace choicekit {

namespace detail {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("multiplication overflow: " + std::to_string(a) + " * " +
                             std::to_string(b));
  }
  return out;
}

} // namespace detail

Degree Degree::finite(value_type value) {
  if (value == 0) {
    throw InvalidArgument("degree must be at least 1");
  }
  return Degree(value);
}

Degree::value_type Degree::value() const {
  if (!value_) {
    throw InvalidArgument("infinite degree has no finite value");
  }
  return *value_;
}

Degree operator+(const Degree& a, const Degree& b) {
  if (a.is_inf() || b.is_inf()) {
    return Degree::inf();
  }
  return Degree(detail::checked_add(*a.value_, *b.value_));
}

Degree operator*(const Degree& a, const Degree& b) {
  if (a.is_inf() || b.is_inf()) {
    return Degree::inf();
  }
  return Degree(detail::checked_mul(*a.value_, *b.value_));
}

std::string Degree::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

Optionality::Optionality(value_type value) : value_(value) {
  if (value == 0) {
    throw InvalidArgument("optionality must be at least 1");
  }
}

std::ostream& operator<<(std::ostream& os, const Optionality& o) { return os << o.value(); }

} // namespace choicekit
