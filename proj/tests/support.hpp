#pragma once

// Shared helpers for the unit and acceptance tests: seeded generators of
// random ring elements and Hodge data, and small oracles that recompute
// library results by other means.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbispec/explicit_set.hpp"
#include "orbispec/finite_group.hpp"
#include "orbispec/group_ring.hpp"
#include "orbispec/hodge.hpp"
#include "orbispec/orbifold.hpp"
#include "orbispec/series.hpp"

namespace testing {

using namespace orbispec;

inline Signature sig(const char* text) { return Signature::parse(text); }

inline GroupRingElement elt(const std::string& text, const Signature& s) { return GroupRingElement::parse(text, s); }

inline TruncatedSeries series(const std::string& text, const Signature& s, std::size_t order) {
  return TruncatedSeries::parse(text, s, order);
}

inline std::string source_path(const std::string& rel) { return std::string(ORBISPEC_SOURCE_DIR) + "/" + rel; }

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational rational(std::int64_t max_den, std::int64_t lo, std::int64_t hi) {
    std::int64_t den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  GroupElement point(const Signature& s, std::int64_t max_den = 12) {
    std::vector<Rational> coords;
    for (CoordKind kind : s.kinds()) {
      switch (kind) {
        case CoordKind::Cyclic: coords.push_back(rational(max_den, 0, 1)); break;
        case CoordKind::Rational: coords.push_back(rational(max_den, -2, 2)); break;
        case CoordKind::Integer: coords.push_back(Rational(integer(-3, 3))); break;
      }
    }
    return s.element(std::move(coords));
  }

  /// Up to max_terms terms with coefficients in [lo, hi] (zero allowed, so fewer terms may survive).
  GroupRingElement element(const Signature& s, std::size_t max_terms, std::int64_t lo, std::int64_t hi,
                           std::int64_t max_den = 12) {
    GroupRingElement x(s);
    std::size_t terms = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) x += GroupRingElement::monomial(s, point(s, max_den), integer(lo, hi));
    return x;
  }

  GroupRingElement effective(const Signature& s, std::size_t max_terms, std::int64_t max_coeff,
                             std::int64_t max_den = 12) {
    return element(s, max_terms, 0, max_coeff, max_den);
  }

  TruncatedSeries series(const Signature& s, std::size_t order, std::size_t max_terms, std::int64_t lo,
                         std::int64_t hi, std::int64_t max_den = 12) {
    std::vector<GroupRingElement> higher;
    for (std::size_t n = 1; n <= order; ++n) higher.push_back(element(s, max_terms, lo, hi, max_den));
    return TruncatedSeries(s, order, std::move(higher));
  }

  /// EHD terms with P, Q >= 0 and P - Q integral.
  EquivariantHD ehd(std::size_t max_terms, std::int64_t lo, std::int64_t hi) {
    EquivariantHD x(ehd_signature());
    std::size_t terms = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_terms)));
    for (std::size_t i = 0; i < terms; ++i) {
      Rational alpha = rational(6, 0, 1);
      Rational beta(integer(0, 3), 2);
      Rational p = beta + Rational(integer(0, 2));
      Rational q = beta + Rational(integer(0, 2));
      x += GroupRingElement::monomial(ehd_signature(), {alpha, p, q}, integer(lo, hi));
    }
    return x;
  }

  std::vector<MixedHodgeEigenDatum> hodge_data(std::size_t max_rows) {
    std::vector<MixedHodgeEigenDatum> rows;
    std::size_t count = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_rows)));
    for (std::size_t i = 0; i < count; ++i) {
      MixedHodgeEigenDatum d;
      d.k = static_cast<int>(integer(0, 3));
      d.p = static_cast<int>(integer(0, d.k));
      d.q = static_cast<int>(integer(0, d.k));
      d.alpha = CyclicRational(rational(4, 0, 1));
      d.dim = integer(1, 2);
      rows.push_back(d);
    }
    return rows;
  }

 private:
  std::mt19937 rng_;
};

/// Size-n multisets of the labels, each counted once, by stars and bars over
/// occurrence counts rather than by nondecreasing index sequences.
inline GroupRingElement multiset_oracle(const Signature& s, const std::vector<GroupElement>& labels, std::size_t n) {
  GroupRingElement out(s);
  std::vector<std::size_t> counts(labels.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i == labels.size()) {
      if (left != 0) return;
      GroupElement sum = s.zero();
      for (std::size_t j = 0; j < labels.size(); ++j) sum = s.add(sum, s.scale(labels[j], static_cast<std::int64_t>(counts[j])));
      out += GroupRingElement::monomial(s, sum);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[i] = c;
      rec(i + 1, left - c);
    }
    counts[i] = 0;
  };
  rec(0, n);
  return out;
}

/// Orbifold Euler characteristic of an explicit G-set: sum over conjugacy
/// classes [g] of the number of C_G(g)-orbits on the g-fixed points, with
/// classes and centralizers found by direct scanning of the table.
inline long orbifold_euler_oracle(const ExplicitGSet& x) {
  const FiniteGroup& g = x.group();
  std::size_t order = g.order();
  std::vector<bool> seen(order, false);
  long total = 0;
  for (Elem a = 0; a < order; ++a) {
    if (seen[a]) continue;
    for (Elem h = 0; h < order; ++h) seen[g.mul(g.mul(h, a), g.inv(h))] = true;
    std::vector<Elem> centralizer;
    for (Elem h = 0; h < order; ++h)
      if (g.mul(h, a) == g.mul(a, h)) centralizer.push_back(h);
    std::vector<std::size_t> orbit_id(x.size(), x.size());
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x.act(a, p) != p || orbit_id[p] != x.size()) continue;
      ++total;
      for (Elem h : centralizer) orbit_id[x.act(h, p)] = p;
    }
  }
  return total;
}

/// (C, mu_m, id): node 0 is the line, node 1 the origin. The generator power
/// j acts on C with eigenvalue e[j/m], so its fixed locus is the origin at age j/m.
inline TripleModel line_model(std::size_t m) {
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(m));
  TripleModel model;
  std::size_t line = model.add_node({"line", 1, group, GroupRingElement::monomial(ehd_signature(), {0, 1, 1}), {}});
  std::size_t origin = model.add_node({"origin", 0, group, GroupRingElement::unit(ehd_signature()), {}});
  model.add_child(line, 0, Rational(0), std::nullopt);
  model.add_child(origin, 0, Rational(0), std::nullopt);
  for (std::size_t j = 1; j < m; ++j) {
    model.add_child(line, j, Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(m)), origin);
    model.add_child(origin, j, Rational(0), origin);
  }
  model.finalize();
  return model;
}

}  // namespace testing
