#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace orbispec {

/// Exact rational number, always reduced with a positive denominator.
///
/// Labels in this library are small (ages, eigenvalue exponents, Hodge
/// indices), so 64-bit numerator/denominator suffice; every operation is
/// overflow-checked and throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  /// Largest integer <= *this.
  std::int64_t floor() const;
  /// *this - floor(*this), in [0, 1).
  Rational frac() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Accepts "p", "-p", "p/q"; surrounding whitespace is rejected.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of Q/Z held by its unique representative in [0, 1).
class CyclicRational {
 public:
  constexpr CyclicRational() = default;
  explicit CyclicRational(const Rational& r) : rep_(r.frac()) {}

  const Rational& value() const { return rep_; }

  CyclicRational& operator+=(const CyclicRational& o) {
    rep_ = (rep_ + o.rep_).frac();
    return *this;
  }
  friend CyclicRational operator+(CyclicRational a, const CyclicRational& b) { return a += b; }
  CyclicRational scaled(std::int64_t s) const { return CyclicRational(rep_ * Rational(s)); }

  friend bool operator==(const CyclicRational&, const CyclicRational&) = default;
  friend auto operator<=>(const CyclicRational& a, const CyclicRational& b) { return a.rep_ <=> b.rep_; }

 private:
  Rational rep_;
};

struct RationalSplit {
  CyclicRational frac;
  std::int64_t integer = 0;
};

/// r = integer + frac with frac in [0, 1).
RationalSplit rational_split(const Rational& r);

}  // namespace orbispec
