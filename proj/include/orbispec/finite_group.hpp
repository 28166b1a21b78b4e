#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbispec {

using Elem = std::uint32_t;

/// Finite group given by its multiplication table; elements are indices 0..n-1.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  /// table[a * n + b] = a * b.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table, std::vector<std::string> names = {});

  static FiniteGroup trivial();
  /// Z/n with element i = generator^i.
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  std::span<const Elem> table() const { return table_; }
  std::span<const Elem> inverses() const { return inverse_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(Elem a) const;

  /// The subgroup on the listed elements, relabelled 0..k-1 in the given order.
  /// Throws if the list is not closed under multiplication.
  FiniteGroup subgroup(std::span<const Elem> elements) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  friend class WreathGroup;
  // Tables derived from an already validated group: identity and inverses
  // are recomputed, associativity is inherited.
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Elem> table, std::vector<std::string> names,
                                        bool check_associativity);

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
  std::vector<std::string> names_;
};

struct ConjugacyClass {
  Elem representative;               // smallest element index of the class
  std::vector<Elem> elements;        // ascending
  std::vector<Elem> centralizer;     // C_G(representative), ascending
};

/// Classes sorted by representative; class_of[x] indexes into classes.
struct ConjugacyData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;

  std::size_t identity_class(const FiniteGroup& g) const { return class_of[g.identity()]; }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

/// Default cap on |G|^n * n! for materialized wreath products.
inline constexpr std::size_t kDefaultWreathBound = 20736;

struct WreathElement {
  std::vector<Elem> base;          // (g_1, ..., g_n)
  std::vector<std::size_t> perm;   // sigma as images: perm[i] = sigma(i)

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// G wr S_n = G^n x| S_n, materialized.
///
/// Product (g, s)(h, t) = (g * s(h), s t) with s(h)_i = h_{s^-1(i)} and
/// (s t)(i) = s(t(i)). On V^n it acts by y_{s(i)} = g_{s(i)} x_i.
class WreathGroup {
 public:
  static WreathGroup build(std::shared_ptr<const FiniteGroup> base, std::size_t degree,
                           std::size_t bound = kDefaultWreathBound);

  const FiniteGroup& base() const { return *base_; }
  std::shared_ptr<const FiniteGroup> base_ptr() const { return base_; }
  std::size_t degree() const { return degree_; }
  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  const WreathElement& element(Elem i) const { return elements_[i]; }
  Elem index_of(const WreathElement& w) const;

  static WreathElement multiply(const FiniteGroup& base, const WreathElement& a, const WreathElement& b);

 private:
  std::shared_ptr<const FiniteGroup> base_;
  std::size_t degree_ = 0;
  std::vector<WreathElement> elements_;
  std::map<std::vector<std::size_t>, std::size_t> perm_rank_;
  std::shared_ptr<const FiniteGroup> group_;
};

WreathGroup wreath_product(std::shared_ptr<const FiniteGroup> base, std::size_t n,
                           std::size_t bound = kDefaultWreathBound);

/// (class of G, cycle length r) -> number of r-cycles of sigma whose cycle
/// product lies in that class.
using WreathClassType = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

WreathClassType wreath_class_type(const WreathGroup& w, const ConjugacyData& base_classes, Elem element);

}  // namespace orbispec
