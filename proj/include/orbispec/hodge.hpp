#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbispec/group_ring.hpp"

namespace orbispec {

/// dim (H^k_alpha)^{p,q}: one row of mixed Hodge data for an eigenspace of phi^*.
struct MixedHodgeEigenDatum {
  int k = 0;
  int p = 0;
  int q = 0;
  CyclicRational alpha;
  std::int64_t dim = 1;

  friend bool operator==(const MixedHodgeEigenDatum&, const MixedHodgeEigenDatum&) = default;
};

/// Equivariant Hodge-Deligne polynomial as an element of Z[Q/Z x Q x Q]:
/// {(alpha, P, Q)} stands for omega_{e[alpha]} u^P v^Q.
using EquivariantHD = GroupRingElement;

/// (c, q, q): eigenvalue exponent, u-degree, v-degree.
const Signature& ehd_signature();
/// (c, q): pair spectrum / equivariant Poincare polynomial.
const Signature& pair_signature();
/// (q): Hodge spectrum / Poincare polynomial.
const Signature& hsp_signature();

/// Throws std::invalid_argument unless x lives in the ehd ring with
/// P, Q >= 0 and P - Q integral on every term.
void validate_ehd(const EquivariantHD& x);

EquivariantHD ehd_from_data(std::span<const MixedHodgeEigenDatum> data);

/// e(t, 1): drop the v-degree. Ring homomorphism.
GroupRingElement ehd_to_poincare_bar(const EquivariantHD& e);
/// (alpha, P, Q) -> {P + alpha}, alpha lifted to [0, 1). Additive only.
GroupRingElement ehd_to_hsp(const EquivariantHD& e);
/// (alpha, P, Q) -> (alpha, P). Ring homomorphism.
GroupRingElement ehd_to_pair(const EquivariantHD& e);
/// Identity embedding into Z[Q/Z x Q x Q].
GroupRingElement ehd_to_triple(const EquivariantHD& e);

/// {(0, beta, beta)}, {(0, beta)} and {beta}: the age markers.
GroupRingElement triple_marker(const Rational& beta);
GroupRingElement pair_marker(const Rational& beta);
GroupRingElement hsp_marker(const Rational& beta);

/// Fractional-power polynomial view of a spectrum: {0} + {1/2} -> "1 + t^{1/2}".
std::string hsp_to_poincare(const GroupRingElement& h);

}  // namespace orbispec
