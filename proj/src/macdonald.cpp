#include "orbispec/macdonald.hpp"

#include <sstream>
#include <stdexcept>

#include "orbispec/errors.hpp"

namespace orbispec {

// ---- reports ---------------------------------------------------------------

std::size_t ComparisonReport::first_mismatch() const {
  for (const auto& r : rows) {
    if (!r.equal) return r.degree;
  }
  return 0;
}

std::string ComparisonReport::to_text() const {
  std::ostringstream out;
  out << "# theorem=" << theorem << " fixture=" << fixture << " N=" << order;
  for (const auto& [key, value] : flags) out << ' ' << key << '=' << value;
  out << '\n';
  for (const auto& r : rows) {
    out << r.degree << ", " << r.lhs.str() << ", " << r.rhs.str() << ", " << (r.equal ? "equal" : "MISMATCH") << '\n';
  }
  out << "# verdict: ";
  switch (verdict) {
    case Verdict::Equal:
      out << "equal";
      break;
    case Verdict::Mismatch:
      out << "MISMATCH at degree " << first_mismatch();
      break;
    case Verdict::Unsupported:
      out << "unsupported";
      break;
  }
  if (!note.empty()) out << " (" << note << ')';
  out << '\n';
  return out.str();
}

ComparisonReport compare_series(std::string theorem, std::string fixture, const TruncatedSeries& lhs,
                                const TruncatedSeries& rhs, std::vector<std::pair<std::string, std::string>> flags) {
  if (lhs.order() != rhs.order()) throw std::invalid_argument("compared series have different truncation orders");
  if (!(lhs.signature() == rhs.signature())) throw SignatureMismatch("compared series live in different rings");
  ComparisonReport rep;
  rep.theorem = std::move(theorem);
  rep.fixture = std::move(fixture);
  rep.order = lhs.order();
  rep.flags = std::move(flags);
  rep.verdict = Verdict::Equal;
  for (std::size_t n = 1; n <= lhs.order(); ++n) {
    DegreeVerdict v{n, lhs.coeff(n), rhs.coeff(n), lhs.coeff(n) == rhs.coeff(n)};
    if (!v.equal) rep.verdict = Verdict::Mismatch;
    rep.rows.push_back(std::move(v));
  }
  return rep;
}

ComparisonReport unsupported_report(std::string theorem, std::string fixture, std::size_t order, std::string reason,
                                    std::vector<std::pair<std::string, std::string>> flags) {
  ComparisonReport rep;
  rep.theorem = std::move(theorem);
  rep.fixture = std::move(fixture);
  rep.order = order;
  rep.flags = std::move(flags);
  rep.verdict = Verdict::Unsupported;
  rep.note = std::move(reason);
  return rep;
}

// ---- symmetric powers ------------------------------------------------------

EquivariantHD sym_power_pair_oracle(std::span<const MixedHodgeEigenDatum> data, std::size_t n) {
  const Signature& sig = ehd_signature();
  struct Basis {
    GroupElement label;
    bool odd;
  };
  std::vector<Basis> basis;
  for (const auto& d : data) {
    if (d.dim <= 0) throw std::invalid_argument("Hodge datum with non-positive dimension");
    GroupElement label = sig.element({d.alpha.value(), Rational(d.p), Rational(d.q)});
    for (std::int64_t i = 0; i < d.dim; ++i) basis.push_back({label, d.k % 2 != 0});
  }

  Terms out;
  auto rec = [&](auto&& self, std::size_t idx, std::size_t left, const GroupElement& label, bool negative) -> void {
    if (left == 0) {
      out[label] += negative ? -1 : 1;
      return;
    }
    if (idx == basis.size()) return;
    const Basis& b = basis[idx];
    const std::size_t cap = b.odd ? 1 : left;
    GroupElement cur = label;
    for (std::size_t e = 0; e <= cap && e <= left; ++e) {
      self(self, idx + 1, left - e, cur, negative != (b.odd && e % 2 == 1));
      cur = sig.add(cur, b.label);
    }
  };
  rec(rec, 0, n, sig.zero(), false);
  return GroupRingElement(sig, std::move(out));
}

namespace {

TruncatedSeries geometric_one(const Signature& sig, std::size_t order) {
  TruncatedSeries s(sig, order);
  for (std::size_t n = 1; n <= order; ++n) s.set_coeff(n, GroupRingElement::unit(sig));
  return s;
}

TruncatedSeries oracle_series(std::span<const MixedHodgeEigenDatum> data, std::size_t order) {
  TruncatedSeries lhs(ehd_signature(), order);
  for (std::size_t n = 1; n <= order; ++n) lhs.set_coeff(n, sym_power_pair_oracle(data, n));
  return lhs;
}

}  // namespace

ComparisonReport verify_theorem1(const std::string& fixture, std::span<const MixedHodgeEigenDatum> data,
                                 std::size_t order) {
  const EquivariantHD e = ehd_from_data(data);
  TruncatedSeries lhs = oracle_series(data, order);
  TruncatedSeries rhs = power_expand(geometric_one(ehd_signature(), order), e, PowerMode::Substitution);
  return compare_series("1", fixture, lhs, rhs, {{"mode", "substitution"}});
}

ComparisonReport verify_corollary1(const std::string& fixture, std::span<const MixedHodgeEigenDatum> data,
                                   std::size_t order) {
  static constexpr std::size_t keep[] = {0, 1};
  const GroupRingElement e = ehd_to_pair(ehd_from_data(data));
  TruncatedSeries lhs = oracle_series(data, order).projected(keep);
  TruncatedSeries rhs = power_expand(geometric_one(pair_signature(), order), e, PowerMode::Substitution);
  return compare_series("corollary-1", fixture, lhs, rhs, {{"mode", "substitution"}});
}

// ---- exponent shifts ---------------------------------------------------------

std::string to_string(ShiftConvention s) { return s == ShiftConvention::Literal ? "literal" : "shifted"; }

ShiftConvention parse_shift(std::string_view text) {
  if (text == "literal") return ShiftConvention::Literal;
  if (text == "shifted") return ShiftConvention::Shifted;
  throw std::invalid_argument("unknown shift convention '" + std::string(text) + "' (literal|shifted)");
}

std::string to_string(ShiftChoice s) {
  switch (s) {
    case ShiftChoice::Literal:
      return "literal";
    case ShiftChoice::Shifted:
      return "shifted";
    case ShiftChoice::Audit:
      return "audit";
  }
  return "audit";
}

ShiftChoice parse_shift_choice(std::string_view text) {
  if (text == "literal") return ShiftChoice::Literal;
  if (text == "shifted") return ShiftChoice::Shifted;
  if (text == "audit") return ShiftChoice::Audit;
  throw std::invalid_argument("unknown shift '" + std::string(text) + "' (literal|shifted|audit)");
}

Rational shift_exponent(ShiftConvention s, std::size_t level, const Rational& dim) {
  const auto l = static_cast<std::int64_t>(level);
  const Rational factor = s == ShiftConvention::Literal ? Rational(l) : Rational(l - 1);
  return factor * dim * Rational(1, 2);
}

TruncatedSeries rhs_expand_theorem2(const GroupRingElement& e, const Rational& dim, std::size_t k, std::size_t order,
                                    ShiftConvention shift, PowerMode mode) {
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  const Signature& sig = e.signature();
  if (sig.size() < 1 || sig.kinds()[0] != CoordKind::Cyclic) {
    throw SignatureMismatch("theorem 2 expansions need an eigenvalue coordinate first, got " + sig.str());
  }
  auto marker = [&](std::size_t level) {
    std::vector<Rational> coords(sig.size(), shift_exponent(shift, level, dim));
    coords[0] = Rational(0);
    return sig.element(coords);
  };

  TruncatedSeries out(sig, order);
  if (k == 0) return expand_neg_power(sig.zero(), 1, e, mode, order);

  // r_1..r_k with r_1 ... r_k <= order; weight r_2 r_3^2 ... r_k^{k-1}
  auto rec = [&](auto&& self, std::size_t j, std::size_t prod, std::uint64_t weight) -> void {
    if (j > k) {
      GroupRingElement m = mpz_class(static_cast<unsigned long>(weight)) * e;
      out *= expand_neg_power(marker(prod), prod, m, mode, order);
      return;
    }
    for (std::size_t r = 1; prod * r <= order; ++r) {
      std::uint64_t w = weight;
      for (std::size_t i = 1; i < j; ++i) w *= r;
      self(self, j + 1, prod * r, w);
    }
  };
  rec(rec, 1, 1, 1);
  return out;
}

// ---- wreath left-hand sides ----------------------------------------------------

namespace {


TripleModel wreath_model(const ExplicitGSet& x, std::size_t n, std::size_t k) {
  try {
    return node_from_explicit(wreath_power(x, n), k, "X^" + std::to_string(n));
  } catch (const std::length_error& err) {
    throw UnsupportedError(err.what());
  }
}

}  // namespace

EquivariantHD wreath_lhs_explicit(const ExplicitGSet& x, std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("wreath degree must be >= 1");
  return wreath_model(x, n, k).e_k(0, k);
}

EquivariantHD wreath_lhs_k1_positive_d(const TripleModel& model, std::size_t node, std::size_t n) {
  if (n == 0) throw std::invalid_argument("wreath degree must be >= 1");
  if (n > 3) throw UnsupportedError("derived wreath rule is limited to n <= 3");
  const TripleNode& tn = model.node(node);
  if (!tn.dim) throw UnsupportedError("derived wreath rule needs a node of pure dimension");
  if (model.depth(node) < 1) {
    throw DepthError("triple node '" + tn.name + "' has no strata; the wreath rule needs depth >= 1");
  }
  const Rational d(*tn.dim);
  const ConjugacyData& cd = model.classes(node);

  // slot (class, r) -> lambda series of sum_beta e(V^<h>_beta / C(h)) {(0, b, b)}, b = beta + d(r-1)/2
  struct Slot {
    std::size_t r;
    TruncatedSeries lambda;
  };
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < cd.classes.size(); ++c) {
    for (std::size_t r = 1; r <= n; ++r) {
      EquivariantHD e(ehd_signature());
      const Rational cycle_shift = d * Rational(static_cast<std::int64_t>(r) - 1, 2);
      for (const auto& child : tn.children) {
        if (child.class_index != c) continue;
        const std::size_t target = child.self ? node : child.target;
        e += model.node(target).quotient_hodge * triple_marker(child.beta + cycle_shift);
      }
      if (e.is_zero()) continue;
      slots.push_back({r, lambda_series(e, n / r)});
    }
  }

  EquivariantHD total(ehd_signature());
  auto rec = [&](auto&& self, std::size_t idx, std::size_t left, const EquivariantHD& acc) -> void {
    if (left == 0) {
      total += acc;
      return;
    }
    if (idx == slots.size()) return;
    const Slot& s = slots[idx];
    self(self, idx + 1, left, acc);
    for (std::size_t m = 1; m * s.r <= left; ++m) {
      const GroupRingElement& c = s.lambda.coeff(m);
      if (c.is_zero()) continue;
      self(self, idx + 1, left - m * s.r, acc * c);
    }
  };
  rec(rec, 0, n, GroupRingElement::unit(ehd_signature()));
  return total;
}

const std::string& fixture_name(const Theorem2Fixture& f) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, f);
}

namespace {

struct LhsSides {
  EquivariantHD triple;
  GroupRingElement pair;
};

// Base invariant e^(k)(V, G, phi) with its pair reduction, and the dimension.
struct BaseData {
  EquivariantHD e;
  GroupRingElement pair;
  Rational dim;
};

BaseData base_data(const Theorem2Fixture& fixture, std::size_t k) {
  if (const auto* ex = std::get_if<ExplicitFixture>(&fixture)) {
    TripleModel m = node_from_explicit(ex->set, k, ex->name);
    return {m.e_k(0, k), m.hsp2_k(0, k), Rational(0)};
  }
  const auto& nf = std::get<NodeFixture>(fixture);
  const TripleNode& tn = nf.model->node(nf.node);
  if (!tn.dim) throw UnsupportedError("triple node '" + tn.name + "' has mixed dimension");
  return {nf.model->e_k(nf.node, k), nf.model->hsp2_k(nf.node, k), Rational(*tn.dim)};
}

LhsSides lhs_sides(const Theorem2Fixture& fixture, std::size_t n, std::size_t k) {
  if (const auto* ex = std::get_if<ExplicitFixture>(&fixture)) {
    TripleModel m = wreath_model(ex->set, n, k);
    return {m.e_k(0, k), m.hsp2_k(0, k)};
  }
  const auto& nf = std::get<NodeFixture>(fixture);
  if (k != 1) throw UnsupportedError("wreath powers of node fixtures are limited to k = 1");
  EquivariantHD e = wreath_lhs_k1_positive_d(*nf.model, nf.node, n);
  GroupRingElement pair = ehd_to_pair(e);
  return {std::move(e), std::move(pair)};
}

}  // namespace

std::vector<ComparisonReport> verify_theorem2(const Theorem2Fixture& fixture, std::size_t k, std::size_t n_max,
                                              ShiftChoice shift, PowerMode mode) {
  const std::string& name = fixture_name(fixture);
  std::vector<std::pair<std::string, std::string>> flags{{"k", std::to_string(k)}, {"mode", to_string(mode)}};
  const char* ids[] = {"2", "corollary-pair", "corollary-triple"};
  auto all_unsupported = [&](const std::string& reason) {
    std::vector<ComparisonReport> out;
    for (const char* id : ids) out.push_back(unsupported_report(id, name, n_max, reason, flags));
    return out;
  };
  if (n_max < 1) throw std::invalid_argument("n-max must be >= 1");

  const auto* nf = std::get_if<NodeFixture>(&fixture);
  if (nf) {
    const TripleNode& tn = nf->model->node(nf->node);
    if (!tn.dim) return all_unsupported("mixed dimension");
    if (k != 1) return all_unsupported("d > 0 wreath powers are limited to k = 1");
    if (n_max > 3) return all_unsupported("derived wreath rule is limited to n <= 3");
  }

  try {
    const BaseData base = base_data(fixture, k);
    ShiftConvention conv = ShiftConvention::Shifted;
    std::string shift_flag;
    if (shift == ShiftChoice::Audit) {
      AuditResult audit = normalization_audit(fixture, k);
      conv = audit.literal_ok && !audit.shifted_ok ? ShiftConvention::Literal : ShiftConvention::Shifted;
      shift_flag = "audit:" + to_string(conv);
    } else {
      conv = shift == ShiftChoice::Literal ? ShiftConvention::Literal : ShiftConvention::Shifted;
      shift_flag = to_string(conv);
    }
    flags.insert(flags.begin() + 1, {"d", base.dim.str()});
    flags.insert(flags.begin() + 2, {"shift", shift_flag});
    if (nf) flags.emplace_back("lhs", "derived rule");

    TruncatedSeries lhs(ehd_signature(), n_max);
    TruncatedSeries lhs_pair(pair_signature(), n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      LhsSides s = lhs_sides(fixture, n, k);
      lhs.set_coeff(n, std::move(s.triple));
      lhs_pair.set_coeff(n, std::move(s.pair));
    }
    TruncatedSeries rhs = rhs_expand_theorem2(base.e, base.dim, k, n_max, conv, mode);
    TruncatedSeries rhs_pair = rhs_expand_theorem2(base.pair, base.dim, k, n_max, conv, mode);
    TruncatedSeries rhs_triple = rhs_expand_theorem2(ehd_to_triple(base.e), base.dim, k, n_max, conv, mode);

    std::vector<ComparisonReport> out;
    out.push_back(compare_series(ids[0], name, lhs, rhs, flags));
    out.push_back(compare_series(ids[1], name, lhs_pair, rhs_pair, flags));
    out.push_back(compare_series(ids[2], name, lhs, rhs_triple, flags));
    return out;
  } catch (const UnsupportedError& err) {
    return all_unsupported(err.what());
  } catch (const DepthError& err) {
    return all_unsupported(err.what());
  }
}

// ---- normalization audit ---------------------------------------------------------

std::string AuditResult::winner() const {
  if (literal_ok && shifted_ok) return "both";
  if (literal_ok) return "literal";
  if (shifted_ok) return "shifted";
  return "none";
}

std::string AuditResult::to_text() const {
  std::ostringstream out;
  out << "# audit fixture=" << fixture << " k=" << k << " d=" << dim.str() << '\n';
  if (!supported) {
    out << "# winner: unsupported (" << note << ")\n";
    return out.str();
  }
  out << "lhs, " << lhs.str() << '\n';
  out << "literal, " << rhs_literal.str() << ", " << (literal_ok ? "consistent" : "inconsistent") << '\n';
  out << "shifted, " << rhs_shifted.str() << ", " << (shifted_ok ? "consistent" : "inconsistent") << '\n';
  out << "# winner: " << winner() << '\n';
  return out.str();
}

AuditResult normalization_audit(const Theorem2Fixture& fixture, std::size_t k) {
  AuditResult a;
  a.fixture = fixture_name(fixture);
  a.k = k;
  try {
    const BaseData base = base_data(fixture, k);
    a.dim = base.dim;
    if (const auto* ex = std::get_if<ExplicitFixture>(&fixture)) {
      a.lhs = wreath_lhs_explicit(ex->set, 1, k);
    } else {
      a.lhs = base.e;  // G_1 = G
    }
    a.rhs_literal = rhs_expand_theorem2(base.e, base.dim, k, 1, ShiftConvention::Literal, PowerMode::Substitution)
                        .coeff(1);
    a.rhs_shifted = rhs_expand_theorem2(base.e, base.dim, k, 1, ShiftConvention::Shifted, PowerMode::Substitution)
                        .coeff(1);
    a.literal_ok = a.lhs == a.rhs_literal;
    a.shifted_ok = a.lhs == a.rhs_shifted;
  } catch (const UnsupportedError& err) {
    a.supported = false;
    a.note = err.what();
  } catch (const DepthError& err) {
    a.supported = false;
    a.note = err.what();
  }
  return a;
}

}  // namespace orbispec
