#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "orbispec/finite_group.hpp"

namespace orbispec {

using Permutation = std::vector<std::size_t>;

/// Finite set with a G-action and a commuting finite-order automorphism phi.
class ExplicitGSet {
 public:
  /// action[g] is the permutation by which group element g acts.
  /// Validates that action is a homomorphism and phi commutes with it.
  static ExplicitGSet create(std::size_t points, std::shared_ptr<const FiniteGroup> group,
                             std::vector<Permutation> action, Permutation phi);

  /// Action given on generating elements only; the rest is obtained by
  /// closing under the group law. Throws if the generators do not define a
  /// homomorphism (conflicting images) or do not generate G.
  static ExplicitGSet from_generators(std::size_t points, std::shared_ptr<const FiniteGroup> group,
                                      const std::vector<std::pair<Elem, Permutation>>& generators, Permutation phi);

  std::size_t size() const { return points_; }
  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  std::size_t act(Elem g, std::size_t x) const { return action_[g][x]; }
  const Permutation& action(Elem g) const { return action_[g]; }
  const Permutation& phi() const { return phi_; }

  std::vector<std::size_t> fixed_points(Elem g) const;

  /// Fixed set of g with the action of the subgroup on the listed elements
  /// (which must preserve it) and phi restricted.
  ExplicitGSet restrict_to(const std::vector<std::size_t>& points, const std::vector<Elem>& subgroup) const;

 private:
  std::size_t points_ = 0;
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Permutation> action_;
  Permutation phi_;
};

/// Milnor fibre of f = z^a: the a-th roots of unity, phi = rotation by e[1/a],
/// G = mu_order acting by rotation (order must divide a).
ExplicitGSet brieskorn_zero_dim(std::size_t a, std::size_t group_order);

/// X^n with the G wr S_n action and componentwise phi.
/// Point (x_0, ..., x_{n-1}) has index sum x_i |X|^(n-1-i).
ExplicitGSet wreath_power(const ExplicitGSet& x, std::size_t n, std::size_t bound = kDefaultWreathBound);

}  // namespace orbispec
