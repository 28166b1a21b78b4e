#include "orbispec/lambda_power.hpp"

#include <exception>
#include <functional>
#include <stdexcept>

#include "orbispec/errors.hpp"

namespace orbispec {

std::string to_string(PowerMode mode) { return mode == PowerMode::Substitution ? "substitution" : "geometric"; }

PowerMode parse_power_mode(std::string_view text) {
  if (text == "substitution") return PowerMode::Substitution;
  if (text == "geometric") return PowerMode::Geometric;
  throw std::invalid_argument("unknown power mode '" + std::string(text) + "' (expected substitution|geometric)");
}

GroupRingElement sym_power_effective(const EffectiveMapClass& a, std::size_t n) {
  const Signature& sig = a.signature;
  if (n == 0) return GroupRingElement::unit(sig);
  const std::size_t points = a.points.size();
  Terms acc;
  if (points == 0) return GroupRingElement(sig);
  // Multisets of size n as non-decreasing index sequences.
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    GroupElement label = sig.zero();
    for (std::size_t j : idx) label = sig.add(label, a.points[j]);
    acc[label] += 1;
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == points - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < n; ++q) idx[q] = idx[pos - 1];
  }
  return GroupRingElement(sig, std::move(acc));
}

namespace {

TruncatedSeries power_of(TruncatedSeries base, unsigned long e) {
  TruncatedSeries result(base.signature(), base.order());
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace

TruncatedSeries lambda_series(const GroupRingElement& a, std::size_t order) {
  const Signature& sig = a.signature();
  TruncatedSeries result(sig, order);
  for (const auto& [label, k] : a.terms()) {
    TruncatedSeries base(sig, order);
    if (k > 0) {
      // (1 - {b}T)^{-1} = sum {n b} T^n
      for (std::size_t n = 1; n <= order; ++n) {
        base.set_coeff(n, GroupRingElement::monomial(sig, sig.scale(label, static_cast<std::int64_t>(n))));
      }
    } else if (order >= 1) {
      base.set_coeff(1, GroupRingElement::monomial(sig, label, -1));
    }
    mpz_class mag = abs(k);
    if (!mag.fits_ulong_p()) throw std::overflow_error("lambda exponent too large");
    result *= power_of(std::move(base), mag.get_ui());
  }
  return result;
}

TruncatedSeries expand_neg_power(const GroupElement& g, std::size_t s, const GroupRingElement& m, PowerMode mode,
                                 std::size_t order) {
  if (s == 0) throw std::invalid_argument("expand_neg_power needs s >= 1");
  const Signature& sig = m.signature();
  GroupElement shift = sig.element(g.coords);
  const GroupRingElement exponent = mode == PowerMode::Geometric ? adams_twist(static_cast<std::int64_t>(s), m) : m;
  TruncatedSeries out(sig, order);
  if (s > order) return out;
  TruncatedSeries lam = lambda_series(exponent, order / s);
  for (std::size_t n = 1; n * s <= order; ++n) {
    if (lam.coeff(n).is_zero()) continue;
    out.set_coeff(n * s,
                  lam.coeff(n) * GroupRingElement::monomial(sig, sig.scale(shift, static_cast<std::int64_t>(n))));
  }
  return out;
}

Factorization factorize(const TruncatedSeries& a) {
  const std::size_t order = a.order();
  Factorization out;
  TruncatedSeries rest = a;
  for (std::size_t s = 1; s <= order; ++s) {
    GroupRingElement c = rest.coeff(s);
    if (c.is_zero()) continue;
    rest *= lambda_series(-c, order / s).truncated(order).substitute_power(s);
    out.push_back({s, std::move(c)});
  }
  return out;
}

TruncatedSeries recompose(const Factorization& f, const Signature& sig, std::size_t order) {
  TruncatedSeries out(sig, order);
  for (const auto& [s, c] : f) out *= lambda_series(c, order / s).truncated(order).substitute_power(s);
  return out;
}

TruncatedSeries power_expand(const TruncatedSeries& a, const GroupRingElement& m, PowerMode mode) {
  if (!(a.signature() == m.signature())) throw SignatureMismatch("power exponent lives in a different ring");
  const Signature& sig = a.signature();
  const std::size_t order = a.order();
  const Factorization levels = factorize(a);
  std::vector<TruncatedSeries> factors(levels.size());
  std::vector<std::exception_ptr> errors(levels.size());

  // Factor expansions are independent; the product below is taken in level order.
#pragma omp parallel for schedule(dynamic) if (levels.size() > 2)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(levels.size()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    try {
      const auto& [s, c] = levels[i];
      GroupRingElement twisted = mode == PowerMode::Geometric ? adams_twist(static_cast<std::int64_t>(s), m) : m;
      factors[i] = expand_neg_power(sig.zero(), s, c * twisted, PowerMode::Substitution, order);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  TruncatedSeries out(sig, order);
  for (const auto& f : factors) out *= f;
  return out;
}

TruncatedSeries power_direct_formula(const std::vector<EffectiveMapClass>& coefficients, const EffectiveMapClass& m,
                                     std::size_t order) {
  const Signature& sig = m.signature;
  for (const auto& x : coefficients) {
    if (!(x.signature == sig)) throw SignatureMismatch("direct formula: coefficient ring differs from exponent ring");
  }
  auto level_points = [&](std::size_t i) -> const std::vector<GroupElement>* {
    return i >= 1 && i <= coefficients.size() ? &coefficients[i - 1].points : nullptr;
  };

  TruncatedSeries out(sig, order);
  for (std::size_t n = 1; n <= order; ++n) {
    GroupRingElement total(sig);
    std::vector<std::size_t> counts(n + 1, 0);  // counts[i] = n_i

    auto visit_partition = [&]() {
      // slot levels, e.g. n_1 = 2, n_2 = 1 -> [1, 1, 2]
      std::vector<std::size_t> slots;
      mpz_class symmetry = 1;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j < counts[i]; ++j) slots.push_back(i);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), counts[i]);
        symmetry *= f;
      }
      if (slots.size() > m.points.size()) return;

      Terms acc;
      std::vector<bool> used(m.points.size(), false);
      std::function<void(std::size_t, const GroupElement&)> fill = [&](std::size_t t, const GroupElement& label) {
        if (t == slots.size()) {
          acc[label] += 1;
          return;
        }
        const std::size_t level = slots[t];
        const auto* xs = level_points(level);
        if (xs == nullptr || xs->empty()) return;
        for (std::size_t y = 0; y < m.points.size(); ++y) {
          if (used[y]) continue;
          used[y] = true;
          GroupElement with_y = sig.add(label, sig.scale(m.points[y], static_cast<std::int64_t>(level)));
          for (const auto& x : *xs) fill(t + 1, sig.add(with_y, x));
          used[y] = false;
        }
      };
      fill(0, sig.zero());
      total += GroupRingElement(sig, std::move(acc)).divided_exactly(symmetry);
    };

    std::function<void(std::size_t, std::size_t)> partitions = [&](std::size_t i, std::size_t remaining) {
      if (remaining == 0) {
        visit_partition();
        return;
      }
      if (i > n) return;
      for (std::size_t c = 0; c * i <= remaining; ++c) {
        counts[i] = c;
        partitions(i + 1, remaining - c * i);
      }
      counts[i] = 0;
    };
    partitions(1, n);
    if (!total.is_zero()) out.set_coeff(n, std::move(total));
  }
  return out;
}

TruncatedSeries power_direct_formula(const TruncatedSeries& a, const GroupRingElement& m) {
  std::vector<EffectiveMapClass> xs;
  for (std::size_t i = 1; i <= a.order(); ++i) xs.push_back(EffectiveMapClass::from_element(a.coeff(i)));
  return power_direct_formula(xs, EffectiveMapClass::from_element(m), a.order());
}

}  // namespace orbispec
