#include "orbispec/hodge.hpp"

#include <array>
#include <stdexcept>

#include "orbispec/errors.hpp"

namespace orbispec {

const Signature& ehd_signature() {
  static const Signature sig({CoordKind::Cyclic, CoordKind::Rational, CoordKind::Rational});
  return sig;
}

const Signature& pair_signature() {
  static const Signature sig({CoordKind::Cyclic, CoordKind::Rational});
  return sig;
}

const Signature& hsp_signature() {
  static const Signature sig({CoordKind::Rational});
  return sig;
}

void validate_ehd(const EquivariantHD& x) {
  if (!(x.signature() == ehd_signature())) {
    throw SignatureMismatch("equivariant Hodge-Deligne value must live in c,q,q, got " + x.signature().str());
  }
  for (const auto& [key, k] : x.terms()) {
    const Rational& p = key.coords[1];
    const Rational& q = key.coords[2];
    if (p < Rational(0) || q < Rational(0)) throw std::invalid_argument("negative Hodge degree in " + key.str());
    if (!(p - q).is_integer()) throw std::invalid_argument("P - Q not integral in " + key.str());
  }
}

EquivariantHD ehd_from_data(std::span<const MixedHodgeEigenDatum> data) {
  EquivariantHD out(ehd_signature());
  for (const auto& d : data) {
    if (d.dim <= 0) throw std::invalid_argument("Hodge datum with non-positive dimension");
    if (d.k < 0 || d.p < 0 || d.q < 0) throw std::invalid_argument("Hodge datum with negative index");
    mpz_class coeff = d.k % 2 == 0 ? mpz_class(d.dim) : mpz_class(-d.dim);
    out += GroupRingElement::monomial(ehd_signature(), {d.alpha.value(), Rational(d.p), Rational(d.q)}, coeff);
  }
  return out;
}

GroupRingElement ehd_to_poincare_bar(const EquivariantHD& e) {
  static constexpr std::array<std::size_t, 2> keep{0, 1};
  return project(e, keep);
}

GroupRingElement ehd_to_pair(const EquivariantHD& e) { return ehd_to_poincare_bar(e); }

GroupRingElement ehd_to_triple(const EquivariantHD& e) {
  validate_ehd(e);
  return e;
}

GroupRingElement ehd_to_hsp(const EquivariantHD& e) {
  if (!(e.signature() == ehd_signature())) throw SignatureMismatch("ehd_to_hsp expects a c,q,q element");
  Terms out;
  for (const auto& [key, k] : e.terms()) out[GroupElement{{key.coords[1] + key.coords[0]}}] += k;
  return GroupRingElement(hsp_signature(), std::move(out));
}

GroupRingElement triple_marker(const Rational& beta) {
  return GroupRingElement::monomial(ehd_signature(), {Rational(0), beta, beta});
}

GroupRingElement pair_marker(const Rational& beta) {
  return GroupRingElement::monomial(pair_signature(), {Rational(0), beta});
}

GroupRingElement hsp_marker(const Rational& beta) { return GroupRingElement::monomial(hsp_signature(), {beta}); }

std::string hsp_to_poincare(const GroupRingElement& h) {
  if (!(h.signature() == hsp_signature())) throw SignatureMismatch("hsp_to_poincare expects a spectrum in Z[Q]");
  if (h.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, k] : h.terms()) {
    const Rational& r = key.coords[0];
    mpz_class mag = abs(k);
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    first = false;
    if (r.is_zero()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 't';
    if (r != Rational(1)) out += "^{" + r.str() + "}";
  }
  return out;
}

}  // namespace orbispec
