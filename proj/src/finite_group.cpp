#include "orbispec/finite_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbispec/kernels.hpp"

namespace orbispec {
namespace {

// The associativity scan is cubic; user tables above this size are trusted.
constexpr std::size_t kAssociativityCheckLimit = 400;

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::vector<std::string> names) {
  return from_trusted_table(order, std::move(table), std::move(names), order <= kAssociativityCheckLimit);
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Elem> table, std::vector<std::string> names,
                                            bool check_associativity) {
  if (order == 0) throw std::invalid_argument("group of order 0");
  if (table.size() != order * order) {
    throw std::invalid_argument("multiplication table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(order * order));
  }
  if (!names.empty() && names.size() != order) throw std::invalid_argument("element name count differs from order");
  for (Elem v : table) {
    if (v >= order) throw std::invalid_argument("table entry " + std::to_string(v) + " out of range");
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.names_ = std::move(names);

  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool is_identity = true;
    for (std::size_t a = 0; a < order && is_identity; ++a) {
      is_identity = g.table_[e * order + a] == a && g.table_[a * order + e] == a;
    }
    if (is_identity) {
      g.identity_ = static_cast<Elem>(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("table has no identity element");

  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (g.table_[a * order + b] == g.identity_ && g.table_[b * order + a] == g.identity_) {
        g.inverse_[a] = static_cast<Elem>(b);
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }

  if (check_associativity) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        const Elem ab = g.table_[a * order + b];
        for (std::size_t c = 0; c < order; ++c) {
          if (g.table_[ab * order + c] != g.table_[a * order + g.table_[b * order + c]]) {
            throw std::invalid_argument("table is not associative at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table(1, {0}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return from_table(n, std::move(table));
}

std::string FiniteGroup::name(Elem a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

FiniteGroup FiniteGroup::subgroup(std::span<const Elem> elements) const {
  const std::size_t k = elements.size();
  std::vector<std::size_t> local(order_, k);
  for (std::size_t i = 0; i < k; ++i) local[elements[i]] = i;
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t prod = local[mul(elements[i], elements[j])];
      if (prod == k) throw std::invalid_argument("element list is not closed under multiplication");
      table[i * k + j] = static_cast<Elem>(prod);
    }
  }
  std::vector<std::string> names;
  if (!names_.empty()) {
    for (Elem e : elements) names.push_back(names_[e]);
  }
  return from_trusted_table(k, std::move(table), std::move(names), false);
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto labels = kernels::conjugation_labels(n, g.table(), g.inverses());
  ConjugacyData out;
  out.class_of.assign(n, 0);
  std::map<Elem, std::size_t> by_rep;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = by_rep.try_emplace(labels[x], out.classes.size());
    if (inserted) out.classes.push_back(ConjugacyClass{labels[x], {}, {}});
    out.classes[it->second].elements.push_back(static_cast<Elem>(x));
    out.class_of[x] = it->second;
  }
  for (auto& cls : out.classes) {
    for (std::size_t h = 0; h < n; ++h) {
      if (g.mul(static_cast<Elem>(h), cls.representative) == g.mul(cls.representative, static_cast<Elem>(h))) {
        cls.centralizer.push_back(static_cast<Elem>(h));
      }
    }
  }
  return out;
}

// ---- wreath products ------------------------------------------------------

WreathElement WreathGroup::multiply(const FiniteGroup& base, const WreathElement& a, const WreathElement& b) {
  const std::size_t n = a.perm.size();
  WreathElement out{std::vector<Elem>(n), std::vector<std::size_t>(n)};
  // s(h)_{s(i)} = h_i
  for (std::size_t i = 0; i < n; ++i) {
    out.base[a.perm[i]] = base.mul(a.base[a.perm[i]], b.base[i]);
    out.perm[i] = a.perm[b.perm[i]];
  }
  return out;
}

Elem WreathGroup::index_of(const WreathElement& w) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < degree_; ++i) code = code * base_->order() + w.base[i];
  auto it = perm_rank_.find(w.perm);
  if (it == perm_rank_.end()) throw std::invalid_argument("not a permutation of the wreath degree");
  std::size_t block = 1;
  for (std::size_t i = 0; i < degree_; ++i) block *= base_->order();
  return static_cast<Elem>(it->second * block + code);
}

WreathGroup WreathGroup::build(std::shared_ptr<const FiniteGroup> base, std::size_t degree, std::size_t bound) {
  if (degree == 0) throw std::invalid_argument("wreath degree must be >= 1");
  std::size_t size = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    size *= base->order();
    if (size > bound) break;
  }
  std::size_t block = size;
  for (std::size_t i = 2; i <= degree && size <= bound; ++i) size *= i;
  if (size > bound) {
    throw std::length_error("wreath product of order > " + std::to_string(bound) + " exceeds the configured bound");
  }

  WreathGroup w;
  w.base_ = std::move(base);
  w.degree_ = degree;
  std::vector<std::size_t> perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = i;
  std::size_t rank = 0;
  do {
    w.perm_rank_.emplace(perm, rank++);
    for (std::size_t code = 0; code < block; ++code) {
      std::vector<Elem> b(degree);
      std::size_t c = code;
      for (std::size_t i = degree; i-- > 0;) {
        b[i] = static_cast<Elem>(c % w.base_->order());
        c /= w.base_->order();
      }
      w.elements_.push_back({std::move(b), perm});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Elem> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = w.index_of(multiply(*w.base_, w.elements_[a], w.elements_[b]));
    }
  }
  w.group_ = std::make_shared<const FiniteGroup>(FiniteGroup::from_trusted_table(size, std::move(table), {}, false));
  return w;
}

WreathGroup wreath_product(std::shared_ptr<const FiniteGroup> base, std::size_t n, std::size_t bound) {
  return WreathGroup::build(std::move(base), n, bound);
}

WreathClassType wreath_class_type(const WreathGroup& w, const ConjugacyData& base_classes, Elem element) {
  const WreathElement& e = w.element(element);
  const FiniteGroup& g = w.base();
  const std::size_t n = w.degree();
  std::vector<bool> seen(n, false);
  WreathClassType out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // Walk the cycle start -> s(start) -> ...; the return map on component
    // `start` is g_{start} g_{s^-1(start)} ... which we accumulate as we go.
    std::size_t r = 0;
    Elem product = g.identity();
    std::size_t i = start;
    do {
      seen[i] = true;
      i = e.perm[i];
      product = g.mul(e.base[i], product);
      ++r;
    } while (i != start);
    ++out[{base_classes.class_of[product], r}];
  }
  return out;
}

}  // namespace orbispec
