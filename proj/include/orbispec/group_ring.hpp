#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbispec/grading.hpp"

namespace orbispec {

/// Element sum_a k_a {a} of the group ring Z[A].
///
/// Immutable value type: no zero coefficients are ever stored and terms are
/// kept in lexicographic order of their coordinates, so equal elements have
/// identical term maps and identical text forms.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(Signature sig) : sig_(std::move(sig)) {}
  GroupRingElement(Signature sig, Terms terms);

  /// {0}, the ring unit.
  static GroupRingElement unit(const Signature& sig);
  static GroupRingElement monomial(const Signature& sig, const GroupElement& a, const mpz_class& coeff = 1);
  /// Shorthand for monomial with coordinates given as rationals.
  static GroupRingElement monomial(const Signature& sig, std::vector<Rational> coords, const mpz_class& coeff = 1);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// All coefficients >= 0.
  bool is_effective() const;
  mpz_class coefficient(const GroupElement& a) const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const mpz_class& s, const GroupRingElement& a);

  /// Exact division of every coefficient; throws if some coefficient is not divisible.
  GroupRingElement divided_exactly(const mpz_class& d) const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Canonical text: "2*(0) + 1*(1/2)", "0" for the empty element.
  std::string str() const;
  static GroupRingElement parse(std::string_view text, const Signature& sig);

 private:
  Signature sig_;
  Terms terms_;
};

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);

/// Sum of all coefficients; the ring map Z[A] -> Z.
mpz_class augmentation(const GroupRingElement& x);

/// Ring endomorphism {a} -> {s*a}.
GroupRingElement adams_twist(std::int64_t s, const GroupRingElement& x);

/// Ring map induced by the projection of A onto the listed coordinates.
/// An empty list lands in Z[0] and reproduces the augmentation.
GroupRingElement project(const GroupRingElement& x, std::span<const std::size_t> keep);

/// A finite set X with a labelling psi: X -> A, up to relabelling (a multiset of labels).
struct EffectiveMapClass {
  Signature signature;
  std::vector<GroupElement> points;

  /// sum_{x in X} {psi(x)}
  GroupRingElement to_element() const;
  /// Inverse of to_element; throws std::invalid_argument on negative coefficients.
  static EffectiveMapClass from_element(const GroupRingElement& x);
};

}  // namespace orbispec
