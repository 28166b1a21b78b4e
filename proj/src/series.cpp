#include "orbispec/series.hpp"

#include <stdexcept>

#include "orbispec/errors.hpp"
#include "orbispec/kernels.hpp"

namespace orbispec {

TruncatedSeries::TruncatedSeries(Signature sig, std::size_t order)
    : sig_(std::move(sig)), order_(order), coeffs_(order + 1, GroupRingElement(sig_)) {
  coeffs_[0] = GroupRingElement::unit(sig_);
}

TruncatedSeries::TruncatedSeries(Signature sig, std::size_t order, std::vector<GroupRingElement> higher)
    : TruncatedSeries(std::move(sig), order) {
  for (std::size_t n = 1; n <= order_ && n <= higher.size(); ++n) set_coeff(n, std::move(higher[n - 1]));
}

void TruncatedSeries::set_coeff(std::size_t n, GroupRingElement value) {
  if (n == 0) throw std::invalid_argument("the constant term of a series is fixed to 1");
  if (n > order_) throw std::out_of_range("coefficient index beyond truncation order");
  if (!(value.signature() == sig_)) throw SignatureMismatch("series coefficient signature mismatch");
  coeffs_[n] = std::move(value);
}

bool TruncatedSeries::is_one() const {
  for (std::size_t n = 1; n <= order_; ++n) {
    if (!coeffs_[n].is_zero()) return false;
  }
  return true;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.sig_ == b.sig_)) throw SignatureMismatch("series ring mismatch: " + a.sig_.str() + " vs " + b.sig_.str());
  if (a.order_ != b.order_) throw std::invalid_argument("series truncation mismatch");
  std::vector<Terms> at, bt;
  at.reserve(a.order_ + 1);
  bt.reserve(b.order_ + 1);
  for (const auto& c : a.coeffs_) at.push_back(c.terms());
  for (const auto& c : b.coeffs_) bt.push_back(c.terms());
  auto prod = kernels::series_product(a.sig_, at, bt, a.order_);
  TruncatedSeries out(a.sig_, a.order_);
  for (std::size_t n = 1; n <= a.order_; ++n) out.coeffs_[n] = GroupRingElement(a.sig_, std::move(prod[n]));
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  // b_0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i}
  TruncatedSeries out(sig_, order_);
  for (std::size_t n = 1; n <= order_; ++n) {
    GroupRingElement acc(sig_);
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs_[i].is_zero() || out.coeffs_[n - i].is_zero()) continue;
      acc += coeffs_[i] * out.coeffs_[n - i];
    }
    out.coeffs_[n] = -acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t s) const {
  if (s == 0) throw std::invalid_argument("substitute_power needs s >= 1");
  TruncatedSeries out(sig_, order_);
  for (std::size_t n = 1; n * s <= order_; ++n) out.coeffs_[n * s] = coeffs_[n];
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  TruncatedSeries out(sig_, order);
  for (std::size_t n = 1; n <= order && n <= order_; ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

TruncatedSeries TruncatedSeries::projected(std::span<const std::size_t> keep) const {
  TruncatedSeries out(sig_.project(keep), order_);
  for (std::size_t n = 1; n <= order_; ++n) out.coeffs_[n] = project(coeffs_[n], keep);
  return out;
}

std::string TruncatedSeries::str() const {
  std::string out = "1";
  for (std::size_t n = 1; n <= order_; ++n) {
    if (coeffs_[n].is_zero()) continue;
    out += " + (" + coeffs_[n].str() + ")T^" + std::to_string(n);
  }
  return out;
}

TruncatedSeries TruncatedSeries::parse(std::string_view text, const Signature& sig, std::size_t order) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse series '" + std::string(text) + "': " + why);
  };
  TruncatedSeries out(sig, order);
  if (text.substr(0, 1) != "1") fail("must start with '1'");
  std::size_t i = 1;
  while (i < text.size()) {
    if (text.substr(i, 4) != " + (") fail("expected ' + ('");
    i += 4;
    // Coefficients never contain ')T^' so the first occurrence closes the group.
    auto close = text.find(")T^", i);
    if (close == std::string_view::npos) fail("expected ')T^'");
    auto elt = GroupRingElement::parse(text.substr(i, close - i), sig);
    i = close + 3;
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == i) fail("missing exponent");
    std::size_t n = std::stoul(std::string(text.substr(i, j - i)));
    if (n == 0 || n > order) fail("exponent out of range");
    out.set_coeff(n, std::move(elt));
    i = j;
  }
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries series_inverse(const TruncatedSeries& a) { return a.inverse(); }

}  // namespace orbispec
