#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbispec/group_ring.hpp"
#include "orbispec/series.hpp"

namespace orbispec {

/// How a level-s factor (1 - T^s)^{-c} is raised to an exponent m.
///
/// Substitution: (1 - T^s)^{-c m} is lambda_{c m}(T^s), i.e. plain T -> T^s.
/// Geometric:    the exponent is first Adams-twisted, lambda_{c sigma_s(m)}(T^s).
///               This is the combinatorial set-theoretic power structure,
///               whose level-i labels carry i * psi(y).
///
/// The two agree at s = 1 and whenever sigma_s fixes the labels involved.
enum class PowerMode { Substitution, Geometric };

std::string to_string(PowerMode mode);
PowerMode parse_power_mode(std::string_view text);

/// [S^n(X, psi)]: sum over size-n multisets of X of {sum of labels}, by enumeration.
GroupRingElement sym_power_effective(const EffectiveMapClass& a, std::size_t n);

/// lambda_a(T) = prod_b (1 - {b}T)^{-k_b} for a = sum k_b {b}, through T^order.
TruncatedSeries lambda_series(const GroupRingElement& a, std::size_t order);

/// (1 - {g} T^s)^{-m} through T^order.
TruncatedSeries expand_neg_power(const GroupElement& g, std::size_t s, const GroupRingElement& m, PowerMode mode,
                                 std::size_t order);

struct FactorLevel {
  std::size_t level;
  GroupRingElement exponent;

  friend bool operator==(const FactorLevel&, const FactorLevel&) = default;
};

/// A = prod_s lambda_{c_s}(T^s) through T^N; zero exponents are omitted.
using Factorization = std::vector<FactorLevel>;

Factorization factorize(const TruncatedSeries& a);
TruncatedSeries recompose(const Factorization& f, const Signature& sig, std::size_t order);

/// A^m in the power structure selected by mode.
TruncatedSeries power_expand(const TruncatedSeries& a, const GroupRingElement& m, PowerMode mode);

/// A^m by literal enumeration of the combinatorial formula: for each
/// partition sum i*n_i = n, orbits of ((M^{sum n_i} minus the big diagonal)
/// x prod X_i^{n_i}) under prod S_{n_i}, labelled sum_{i,j} (i psi(y_i^j) + psi_i(x_i^j)).
///
/// coefficients[i-1] is X_i; missing levels are empty.
TruncatedSeries power_direct_formula(const std::vector<EffectiveMapClass>& coefficients, const EffectiveMapClass& m,
                                     std::size_t order);
/// Same, for a series whose coefficients are effective; throws std::invalid_argument otherwise.
TruncatedSeries power_direct_formula(const TruncatedSeries& a, const GroupRingElement& m);

}  // namespace orbispec
