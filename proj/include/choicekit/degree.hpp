#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "choicekit/error.hpp"

namespace choicekit {

namespace detail {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

} // namespace detail

/// Satisfaction degree: either a finite value >= 1 or infinity.
///
/// Lower is better; infinity means "not satisfied". Infinity is kept as a
/// separate state, so arithmetic saturates at it instead of wrapping, and
/// finite arithmetic that leaves 64 bits throws ArithmeticOverflow.
/// A default-constructed Degree is infinity.
class Degree {
public:
  using value_type = std::uint64_t;

  constexpr Degree() noexcept = default;

  static Degree finite(value_type value);
  static constexpr Degree inf() noexcept { return Degree(); }

  constexpr bool is_inf() const noexcept { return !value_.has_value(); }
  constexpr bool is_finite() const noexcept { return value_.has_value(); }

  /// Finite value; throws InvalidArgument on infinity.
  value_type value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (a.is_inf() || b.is_inf()) {
      return a.is_inf() <=> b.is_inf();
    }
    return *a.value_ <=> *b.value_;
  }

  friend Degree operator+(const Degree& a, const Degree& b);
  friend Degree operator*(const Degree& a, const Degree& b);

  /// "inf" or the decimal value.
  std::string to_string() const;

private:
  explicit constexpr Degree(value_type v) noexcept : value_(v) {}

  std::optional<value_type> value_;
};

inline const Degree kInf = Degree::inf();

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Optionality of a formula: always finite and >= 1.
class Optionality {
public:
  using value_type = std::uint64_t;

  explicit Optionality(value_type value);

  constexpr value_type value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Optionality&, const Optionality&) = default;

  /// The degree with the same numeric value.
  Degree as_degree() const { return Degree::finite(value_); }

private:
  value_type value_;
};

std::ostream& operator<<(std::ostream& os, const Optionality& o);

/// True iff `d` is infinite or does not exceed `cap`.
inline bool within(const Degree& d, const Optionality& cap) {
  return d.is_inf() || d.value() <= cap.value();
}

} // namespace choicekit
