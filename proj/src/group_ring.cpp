#include "orbispec/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "orbispec/errors.hpp"
#include "orbispec/kernels.hpp"

namespace orbispec {

// ---- GroupElement / Signature ---------------------------------------------

bool operator<(const GroupElement& a, const GroupElement& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
}

std::string GroupElement::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += coords[i].str();
  }
  out += ')';
  return out;
}

GroupElement Signature::zero() const { return GroupElement{std::vector<Rational>(kinds_.size())}; }

GroupElement Signature::element(std::vector<Rational> coords) const {
  if (coords.size() != kinds_.size()) {
    throw SignatureMismatch("element has " + std::to_string(coords.size()) + " coordinates, signature " + str() +
                            " expects " + std::to_string(kinds_.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    switch (kinds_[i]) {
      case CoordKind::Cyclic:
        coords[i] = coords[i].frac();
        break;
      case CoordKind::Integer:
        if (!coords[i].is_integer()) {
          throw std::invalid_argument("non-integral value " + coords[i].str() + " in integer coordinate");
        }
        break;
      case CoordKind::Rational:
        break;
    }
  }
  return GroupElement{std::move(coords)};
}

GroupElement Signature::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out{std::vector<Rational>(kinds_.size())};
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    Rational v = a.coords[i] + b.coords[i];
    out.coords[i] = kinds_[i] == CoordKind::Cyclic ? v.frac() : v;
  }
  return out;
}

GroupElement Signature::scale(const GroupElement& a, std::int64_t s) const {
  GroupElement out{std::vector<Rational>(kinds_.size())};
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    Rational v = a.coords[i] * Rational(s);
    out.coords[i] = kinds_[i] == CoordKind::Cyclic ? v.frac() : v;
  }
  return out;
}

Signature Signature::project(std::span<const std::size_t> keep) const {
  std::vector<CoordKind> kinds;
  for (std::size_t idx : keep) {
    if (idx >= kinds_.size()) {
      throw std::invalid_argument("projection index " + std::to_string(idx) + " outside signature " + str());
    }
    if (std::count(keep.begin(), keep.end(), idx) > 1) {
      throw std::invalid_argument("projection index " + std::to_string(idx) + " repeated");
    }
    kinds.push_back(kinds_[idx]);
  }
  return Signature(std::move(kinds));
}

std::string Signature::str() const {
  std::string out;
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (i) out += ',';
    switch (kinds_[i]) {
      case CoordKind::Cyclic: out += 'c'; break;
      case CoordKind::Rational: out += 'q'; break;
      case CoordKind::Integer: out += 'z'; break;
    }
  }
  return out;
}

Signature Signature::parse(std::string_view text) {
  std::vector<CoordKind> kinds;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (tok == "c") kinds.push_back(CoordKind::Cyclic);
    else if (tok == "q") kinds.push_back(CoordKind::Rational);
    else if (tok == "z") kinds.push_back(CoordKind::Integer);
    else throw std::invalid_argument("unknown coordinate kind '" + std::string(tok) + "' (expected c, q or z)");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Signature(std::move(kinds));
}

// ---- GroupRingElement -------------------------------------------------------

namespace {

void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw SignatureMismatch("group ring signature mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace

GroupRingElement::GroupRingElement(Signature sig, Terms terms) : sig_(std::move(sig)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

GroupRingElement GroupRingElement::unit(const Signature& sig) { return monomial(sig, sig.zero()); }

GroupRingElement GroupRingElement::monomial(const Signature& sig, const GroupElement& a, const mpz_class& coeff) {
  GroupRingElement out(sig);
  if (coeff != 0) out.terms_.emplace(sig.element(a.coords), coeff);
  return out;
}

GroupRingElement GroupRingElement::monomial(const Signature& sig, std::vector<Rational> coords,
                                            const mpz_class& coeff) {
  return monomial(sig, GroupElement{std::move(coords)}, coeff);
}

bool GroupRingElement::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

mpz_class GroupRingElement::coefficient(const GroupElement& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [key, k] : out.terms_) k = -k;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same(sig_, o.sig_);
  for (const auto& [key, k] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) { return *this += -o; }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same(a.sig_, b.sig_);
  GroupRingElement out(a.sig_);
  out.terms_ = kernels::convolve(a.sig_, a.terms_, b.terms_);
  return out;
}

GroupRingElement operator*(const mpz_class& s, const GroupRingElement& a) {
  if (s == 0) return GroupRingElement(a.sig_);
  GroupRingElement out = a;
  for (auto& [key, k] : out.terms_) k *= s;
  return out;
}

GroupRingElement GroupRingElement::divided_exactly(const mpz_class& d) const {
  GroupRingElement out = *this;
  for (auto& [key, k] : out.terms_) {
    if (!mpz_divisible_p(k.get_mpz_t(), d.get_mpz_t())) {
      throw std::domain_error("coefficient " + k.get_str() + " not divisible by " + d.get_str());
    }
    mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, k] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += k.get_str();
    out += '*';
    out += key.str();
  }
  return out;
}

GroupRingElement GroupRingElement::parse(std::string_view text, const Signature& sig) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse group ring element '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  GroupRingElement out(sig);
  std::size_t i = 0;
  skip_ws(i);
  if (text.substr(i) == "0") return out;
  while (true) {
    skip_ws(i);
    std::size_t star = text.find('*', i);
    if (star == std::string_view::npos) fail("expected 'coeff*(...)'");
    std::string coeff_text(text.substr(i, star - i));
    mpz_class coeff;
    if (coeff.set_str(coeff_text, 10) != 0) fail("bad coefficient '" + coeff_text + "'");
    i = star + 1;
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail("missing ')'");
    std::vector<Rational> coords;
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      coords.push_back(Rational::parse(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    out += monomial(sig, std::move(coords), coeff);
    i = close + 1;
    skip_ws(i);
    if (i == text.size()) break;
    if (text[i] != '+') fail("expected '+' between terms");
    ++i;
  }
  return out;
}

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) { return x + y; }
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) { return x * y; }

mpz_class augmentation(const GroupRingElement& x) {
  mpz_class total = 0;
  for (const auto& [key, k] : x.terms()) total += k;
  return total;
}

GroupRingElement adams_twist(std::int64_t s, const GroupRingElement& x) {
  if (s < 1) throw std::invalid_argument("adams_twist needs s >= 1");
  const Signature& sig = x.signature();
  Terms out;
  for (const auto& [key, k] : x.terms()) out[sig.scale(key, s)] += k;
  return GroupRingElement(sig, std::move(out));
}

GroupRingElement project(const GroupRingElement& x, std::span<const std::size_t> keep) {
  Signature target = x.signature().project(keep);
  Terms out;
  for (const auto& [key, k] : x.terms()) {
    GroupElement img;
    img.coords.reserve(keep.size());
    for (std::size_t idx : keep) img.coords.push_back(key.coords[idx]);
    out[img] += k;
  }
  return GroupRingElement(std::move(target), std::move(out));
}

GroupRingElement EffectiveMapClass::to_element() const {
  Terms out;
  for (const auto& p : points) out[signature.element(p.coords)] += 1;
  return GroupRingElement(signature, std::move(out));
}

EffectiveMapClass EffectiveMapClass::from_element(const GroupRingElement& x) {
  if (!x.is_effective()) throw std::invalid_argument("element " + x.str() + " is not effective");
  EffectiveMapClass out{x.signature(), {}};
  for (const auto& [key, k] : x.terms()) {
    if (!k.fits_ulong_p() || k.get_ui() > 1'000'000) throw std::invalid_argument("multiplicity too large to enumerate");
    for (unsigned long j = 0; j < k.get_ui(); ++j) out.points.push_back(key);
  }
  return out;
}

}  // namespace orbispec
