#ifndef SNAKES_RATIONAL_HPP
#define SNAKES_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "snakes/error.hpp"

namespace snakes {

/// Exact rational over int64, always normalized (den > 0, gcd(num,den) = 1).
/// Exponent arithmetic never leaves the int64 range at desk scale, so no
/// bignum backend is used; comparisons cross-multiply in 128-bit.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) fail(Errc::BadExponents, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "p" or "p/q".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    std::int64_t n = 0, d = 1;
    const auto read = [](std::string_view part, std::int64_t& out) {
      const auto r = std::from_chars(part.data(), part.data() + part.size(), out);
      return r.ec == std::errc{} && r.ptr == part.data() + part.size();
    };
    if (!read(text.substr(0, slash), n) ||
        (slash != std::string_view::npos && !read(text.substr(slash + 1), d))) {
      fail(Errc::BadExponents, "cannot parse rational '" + std::string(text) + "'");
    }
    return Rational(n, d);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// A tangency order: a finite rational exponent or infinity (tord of an arc
/// with itself). Infinity compares greater than every finite value.
class TangencyOrder {
 public:
  constexpr TangencyOrder() : finite_(true), value_() {}
  TangencyOrder(Rational value) : finite_(true), value_(value) {}  // NOLINT
  static constexpr TangencyOrder infinity() {
    TangencyOrder t;
    t.finite_ = false;
    return t;
  }

  bool is_infinite() const { return !finite_; }
  const Rational& value() const {
    if (!finite_) fail(Errc::Precondition, "tangency order is infinite");
    return value_;
  }

  friend bool operator==(const TangencyOrder& a, const TangencyOrder& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator<(const TangencyOrder& a, const TangencyOrder& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const TangencyOrder& a, const TangencyOrder& b) { return b < a; }
  friend bool operator<=(const TangencyOrder& a, const TangencyOrder& b) { return !(b < a); }
  friend bool operator>=(const TangencyOrder& a, const TangencyOrder& b) { return !(a < b); }

  friend TangencyOrder min(const TangencyOrder& a, const TangencyOrder& b) {
    return a < b ? a : b;
  }

  std::string str() const { return finite_ ? value_.str() : "inf"; }

 private:
  bool finite_;
  Rational value_;
};

}  // namespace snakes

#endif  // SNAKES_RATIONAL_HPP
