#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "orbispec/rational.hpp"

namespace orbispec {

enum class CoordKind : std::uint8_t {
  Cyclic,    // Q/Z, representative in [0, 1)
  Rational,  // Q
  Integer,   // Z
};

/// Point of a grading group: one rational per coordinate, canonical
/// (cyclic coordinates reduced into [0, 1), integer coordinates integral).
struct GroupElement {
  std::vector<Rational> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  /// "(c1,c2,...)"
  std::string str() const;
};

/// The abelian group A = product of Q/Z, Q and Z factors.
///
/// Fixed per ring instance: elements of different signatures never mix.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<CoordKind> kinds) : kinds_(std::move(kinds)) {}

  std::size_t size() const { return kinds_.size(); }
  const std::vector<CoordKind>& kinds() const { return kinds_; }

  GroupElement zero() const;
  /// Validates and canonicalizes a raw coordinate vector.
  GroupElement element(std::vector<Rational> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const GroupElement& a, std::int64_t s) const;
  /// Keep only the listed coordinates, in the listed order.
  Signature project(std::span<const std::size_t> keep) const;

  /// Short text form, e.g. "c,q,q".
  std::string str() const;
  static Signature parse(std::string_view text);

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<CoordKind> kinds_;
};

using Terms = std::map<GroupElement, mpz_class>;

}  // namespace orbispec
