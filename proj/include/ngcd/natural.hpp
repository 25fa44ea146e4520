#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ngcd {

/// Arbitrary-precision non-negative integer.
///
/// No negative state is representable: constructors reject negative values
/// and subtraction throws std::domain_error when the result would drop
/// below zero. Division and remainder by zero throw std::domain_error.
class Natural {
public:
  using backend_type = boost::multiprecision::cpp_int;

  Natural() = default;

  template <std::integral I>
  Natural(I x) : v_(check_sign(x)) {}

  explicit Natural(backend_type v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw std::domain_error("Natural: negative value");
  }

  const backend_type& value() const noexcept { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_even() const { return !boost::multiprecision::bit_test(v_, 0); }

  /// Number of bits in the value; 0 for the value 0.
  unsigned bit_length() const {
    return v_.is_zero() ? 0u : boost::multiprecision::msb(v_) + 1u;
  }

  std::string str() const { return v_.str(); }

  std::uint64_t to_uint64() const {
    if (v_ > (std::numeric_limits<std::uint64_t>::max)())
      throw std::overflow_error("Natural: value does not fit in 64 bits");
    return v_.convert_to<std::uint64_t>();
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  friend Natural operator+(const Natural& a, const Natural& b) {
    return Natural(backend_type(a.v_ + b.v_));
  }
  friend Natural operator-(const Natural& a, const Natural& b) {
    if (b.v_ > a.v_) throw std::domain_error("Natural: subtraction would be negative");
    return Natural(backend_type(a.v_ - b.v_));
  }
  friend Natural operator*(const Natural& a, const Natural& b) {
    return Natural(backend_type(a.v_ * b.v_));
  }
  friend Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("Natural: division by zero");
    return Natural(backend_type(a.v_ / b.v_));
  }
  friend Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("Natural: remainder by zero");
    return Natural(backend_type(a.v_ % b.v_));
  }
  friend Natural operator<<(const Natural& a, unsigned s) {
    return Natural(backend_type(a.v_ << s));
  }
  friend Natural operator>>(const Natural& a, unsigned s) {
    return Natural(backend_type(a.v_ >> s));
  }
  /// Low-bits mask probe, used for parity tests: (x & 1u) == 0u.
  friend unsigned operator&(const Natural& a, unsigned mask) {
    return static_cast<unsigned>(a.v_ & mask);
  }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator-=(const Natural& o) {
    if (o.v_ > v_) throw std::domain_error("Natural: subtraction would be negative");
    v_ -= o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  Natural& operator%=(const Natural& o) {
    if (o.is_zero()) throw std::domain_error("Natural: remainder by zero");
    v_ %= o.v_;
    return *this;
  }
  Natural& operator>>=(unsigned s) { v_ >>= s; return *this; }
  Natural& operator<<=(unsigned s) { v_ <<= s; return *this; }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

private:
  template <std::integral I>
  static backend_type check_sign(I x) {
    if constexpr (std::signed_integral<I>) {
      if (x < 0) throw std::domain_error("Natural: negative value");
    }
    return backend_type(x);
  }

  backend_type v_{};
};

inline std::string to_string(const Natural& n) { return n.str(); }

/// Parses one non-negative integer token: decimal digits, or hexadecimal
/// with a 0x/0X prefix. With assume_hex a bare token is read as hexadecimal.
/// Returns nullopt on malformed input. Leading zeros are accepted and carry
/// no octal meaning.
inline std::optional<Natural> parse_natural(std::string_view token, bool assume_hex = false) {
  auto is_dec = [](char c) { return c >= '0' && c <= '9'; };
  auto is_hex = [&](char c) {
    return is_dec(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
  };

  bool hex = assume_hex;
  if (token.size() >= 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    hex = true;
    token.remove_prefix(2);
  }
  if (token.empty()) return std::nullopt;
  for (char c : token) {
    if (hex ? !is_hex(c) : !is_dec(c)) return std::nullopt;
  }
  while (token.size() > 1 && token.front() == '0') token.remove_prefix(1);

  std::string digits(token);
  if (hex) digits.insert(0, "0x");
  return Natural(Natural::backend_type(digits));
}

}  // namespace ngcd
