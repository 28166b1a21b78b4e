#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbispec/group_ring.hpp"

namespace orbispec {

/// 1 + a_1 T + ... + a_N T^N over Z[A], exact through T^N.
///
/// The constant term is always the ring unit; only a_1..a_N are settable.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// The series 1.
  TruncatedSeries(Signature sig, std::size_t order);
  /// 1 + sum_{n>=1} higher[n-1] T^n, missing entries zero, extra entries dropped.
  TruncatedSeries(Signature sig, std::size_t order, std::vector<GroupRingElement> higher);

  const Signature& signature() const { return sig_; }
  std::size_t order() const { return order_; }
  const GroupRingElement& coeff(std::size_t n) const { return coeffs_.at(n); }
  void set_coeff(std::size_t n, GroupRingElement value);
  bool is_one() const;

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  /// Multiplicative inverse through T^N.
  TruncatedSeries inverse() const;
  /// A(T^s), truncated.
  TruncatedSeries substitute_power(std::size_t s) const;
  /// Same series at a smaller or larger truncation (new coefficients zero).
  TruncatedSeries truncated(std::size_t order) const;
  /// Coefficientwise image under the grading projection.
  TruncatedSeries projected(std::span<const std::size_t> keep) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// "1 + (elt)T^1 + ... + (elt)T^N", zero coefficients omitted.
  std::string str() const;
  static TruncatedSeries parse(std::string_view text, const Signature& sig, std::size_t order);

 private:
  Signature sig_;
  std::size_t order_ = 0;
  std::vector<GroupRingElement> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inverse(const TruncatedSeries& a);

}  // namespace orbispec
