#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbispec/explicit_set.hpp"
#include "orbispec/finite_group.hpp"
#include "orbispec/hodge.hpp"

namespace orbispec {

/// Exponents beta_1..beta_d in [0, 1) of g acting on a tangent space.
struct AgeDatum {
  std::vector<Rational> exponents;
};

/// sum of the exponents; throws if one lies outside [0, 1).
Rational age(const AgeDatum& a);

/// Structural error in one node of a TripleModel.
class InvalidTripleNode : public std::invalid_argument {
 public:
  InvalidTripleNode(std::size_t node, const std::string& what) : std::invalid_argument(what), node_(node) {}
  std::size_t node() const { return node_; }

 private:
  std::size_t node_;
};

inline constexpr std::size_t kUnboundedDepth = std::numeric_limits<std::size_t>::max();

/// One (conjugacy class, age) stratum of a triple: either the triple itself
/// (identity class, beta = 0) or the triple (V^<g>_beta, C_G(g), phi).
struct ChildEntry {
  std::size_t class_index = 0;
  Rational beta;
  bool self = false;
  std::size_t target = 0;  // node index; ignored when self

  friend bool operator==(const ChildEntry&, const ChildEntry&) = default;
};

/// A triple (V, G, phi) known through e(V/G, phi-hat) and its fixed-point strata.
struct TripleNode {
  std::string name;
  std::optional<int> dim;  // nullopt: mixed dimension
  std::shared_ptr<const FiniteGroup> group;
  EquivariantHD quotient_hodge;
  std::vector<ChildEntry> children;
};

/// Arena of triple nodes. Children refer to nodes by index, so shared and
/// cyclic references (a point with trivial action is its own fixed locus)
/// are allowed. Call finalize() after the last edit; it validates the
/// structure and computes the available recursion depth of every node.
class TripleModel {
 public:
  std::size_t add_node(TripleNode node);
  /// target == nullopt records the self entry.
  void add_child(std::size_t parent, std::size_t class_index, Rational beta, std::optional<std::size_t> target);
  void finalize();

  std::size_t size() const { return nodes_.size(); }
  const TripleNode& node(std::size_t i) const { return nodes_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  const ConjugacyData& classes(std::size_t i) const;
  /// Largest k for which e_k(i, k) is defined; kUnboundedDepth if every chain closes into a cycle.
  std::size_t depth(std::size_t i) const;

  /// Order-k equivariant Hodge-Deligne polynomial; k = 0 is e(V/G).
  EquivariantHD e_k(std::size_t node, std::size_t k) const;
  /// Order-k Hodge spectrum in Z[Q].
  GroupRingElement hsp_k(std::size_t node, std::size_t k) const;
  /// Order-k pair spectrum in Z[Q/Z x Q].
  GroupRingElement hsp2_k(std::size_t node, std::size_t k) const;
  /// Order-k triple spectrum in Z[Q/Z x Q x Q].
  GroupRingElement hsp3_k(std::size_t node, std::size_t k) const;

 private:
  template <class Base, class Marker>
  GroupRingElement evaluate(std::size_t node, std::size_t k, const Base& base, const Marker& marker) const;
  void require_finalized() const;

  std::vector<TripleNode> nodes_;
  std::vector<ConjugacyData> classes_;
  std::vector<std::size_t> depth_;
  bool finalized_ = false;
};

/// e(X/G, phi-hat) of a finite set: one summand sum_{j<l} {(j/l, 0, 0)} per phi-hat cycle of length l on the orbits.
EquivariantHD quotient_hodge_of_finite_set(const ExplicitGSet& x);

/// Zero-dimensional triple from an explicit G-set; root is node 0.
/// Children are built recursively for depth levels.
TripleModel node_from_explicit(const ExplicitGSet& x, std::size_t depth, const std::string& name = "X");

}  // namespace orbispec
