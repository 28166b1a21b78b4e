#include "orbispec/orbifold.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "orbispec/errors.hpp"

namespace orbispec {

Rational age(const AgeDatum& a) {
  Rational total;
  for (const auto& b : a.exponents) {
    if (b < Rational(0) || !(b < Rational(1))) throw std::invalid_argument("age exponent " + b.str() + " not in [0,1)");
    total += b;
  }
  return total;
}

std::size_t TripleModel::add_node(TripleNode node) {
  if (!node.group) throw std::invalid_argument("triple node '" + node.name + "' has no group");
  nodes_.push_back(std::move(node));
  finalized_ = false;
  return nodes_.size() - 1;
}

void TripleModel::add_child(std::size_t parent, std::size_t class_index, Rational beta,
                            std::optional<std::size_t> target) {
  ChildEntry c;
  c.class_index = class_index;
  c.beta = beta;
  c.self = !target.has_value();
  c.target = target.value_or(parent);
  nodes_.at(parent).children.push_back(c);
  finalized_ = false;
}

std::optional<std::size_t> TripleModel::find(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].name == name) return i;
  }
  return std::nullopt;
}

void TripleModel::finalize() {
  classes_.clear();
  for (const auto& n : nodes_) classes_.push_back(conjugacy_classes(*n.group));

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const TripleNode& n = nodes_[i];
    const ConjugacyData& cd = classes_[i];
    const std::string where = "triple node '" + n.name + "': ";
    try {
      validate_ehd(n.quotient_hodge);
    } catch (const std::invalid_argument& err) {
      throw InvalidTripleNode(i, where + err.what());
    }
    if (n.dim && *n.dim < 0) throw InvalidTripleNode(i, where + "negative dimension");
    if (n.children.empty()) continue;

    const std::size_t id_class = cd.identity_class(*n.group);
    std::size_t identity_entries = 0;
    std::map<std::pair<std::size_t, Rational>, int> seen;
    for (const auto& c : n.children) {
      if (c.class_index >= cd.classes.size()) {
        throw InvalidTripleNode(i, where + "class index " + std::to_string(c.class_index) + " out of range");
      }
      if (c.beta < Rational(0)) throw InvalidTripleNode(i, where + "negative age " + c.beta.str());
      if (n.dim && *n.dim == 0 && !c.beta.is_zero()) {
        throw InvalidTripleNode(i, where + "zero-dimensional node with nonzero age " + c.beta.str());
      }
      if (++seen[{c.class_index, c.beta}] > 1) {
        throw InvalidTripleNode(i, where + "duplicate child for class " + std::to_string(c.class_index) +
                                    " beta " + c.beta.str());
      }
      if (c.class_index == id_class) {
        ++identity_entries;
        if (!c.self || !c.beta.is_zero()) {
          throw InvalidTripleNode(i, where + "identity class must have exactly the self entry at beta 0");
        }
        continue;
      }
      if (c.self) throw InvalidTripleNode(i, where + "self entry on a non-identity class");
      if (c.target >= nodes_.size()) throw InvalidTripleNode(i, where + "child target out of range");
      const std::size_t expected = cd.classes[c.class_index].centralizer.size();
      if (nodes_[c.target].group->order() != expected) {
        throw InvalidTripleNode(i, where + "child '" + nodes_[c.target].name + "' has group of order " +
                                    std::to_string(nodes_[c.target].group->order()) + ", centralizer has order " +
                                    std::to_string(expected));
      }
    }
    if (identity_entries != 1) throw InvalidTripleNode(i, where + "identity class needs exactly one self entry");
  }

  // Greatest fixpoint of depth(n) = 0 if no children, else 1 + min over non-self children.
  depth_.assign(nodes_.size(), kUnboundedDepth);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].children.empty()) depth_[i] = 0;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].children.empty()) continue;
      std::size_t best = kUnboundedDepth;
      for (const auto& c : nodes_[i].children) {
        if (c.self) continue;
        std::size_t d = depth_[c.target];
        best = std::min(best, d == kUnboundedDepth ? d : d + 1);
      }
      if (best < depth_[i]) {
        depth_[i] = best;
        changed = true;
      }
    }
  }
  finalized_ = true;
}

void TripleModel::require_finalized() const {
  if (!finalized_) throw std::logic_error("TripleModel used before finalize()");
}

const ConjugacyData& TripleModel::classes(std::size_t i) const {
  require_finalized();
  return classes_.at(i);
}

std::size_t TripleModel::depth(std::size_t i) const {
  require_finalized();
  return depth_.at(i);
}

template <class Base, class Marker>
GroupRingElement TripleModel::evaluate(std::size_t node, std::size_t k, const Base& base, const Marker& marker) const {
  require_finalized();
  if (node >= nodes_.size()) throw std::out_of_range("triple node index out of range");
  if (depth_[node] != kUnboundedDepth && depth_[node] < k) {
    throw DepthError("triple node '" + nodes_[node].name + "' supports order <= " + std::to_string(depth_[node]) +
                     ", order " + std::to_string(k) + " requested");
  }
  std::map<std::pair<std::size_t, std::size_t>, GroupRingElement> memo;
  auto rec = [&](auto&& self, std::size_t n, std::size_t level) -> GroupRingElement {
    auto key = std::make_pair(n, level);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const TripleNode& tn = nodes_[n];
    GroupRingElement value = base(tn.quotient_hodge);
    if (level > 0) {
      GroupRingElement sum(value.signature());
      for (const auto& c : tn.children) {
        sum += self(self, c.self ? n : c.target, level - 1) * marker(c.beta);
      }
      value = std::move(sum);
    }
    memo.emplace(key, value);
    return value;
  };
  return rec(rec, node, k);
}

EquivariantHD TripleModel::e_k(std::size_t node, std::size_t k) const {
  return evaluate(node, k, [](const EquivariantHD& e) { return e; }, triple_marker);
}

GroupRingElement TripleModel::hsp_k(std::size_t node, std::size_t k) const {
  return evaluate(node, k, ehd_to_hsp, hsp_marker);
}

GroupRingElement TripleModel::hsp2_k(std::size_t node, std::size_t k) const {
  return evaluate(node, k, ehd_to_pair, pair_marker);
}

GroupRingElement TripleModel::hsp3_k(std::size_t node, std::size_t k) const {
  return evaluate(node, k, ehd_to_triple, triple_marker);
}

// ---- explicit zero-dimensional models ---------------------------------------

EquivariantHD quotient_hodge_of_finite_set(const ExplicitGSet& x) {
  const std::size_t n = x.size();
  const FiniteGroup& g = x.group();
  std::vector<std::size_t> orbit(n, n);
  std::size_t orbits = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (orbit[p] != n) continue;
    for (Elem h = 0; h < g.order(); ++h) orbit[x.act(h, p)] = orbits;
    ++orbits;
  }
  // phi-hat on the orbit set
  std::vector<std::size_t> phi_hat(orbits);
  for (std::size_t p = 0; p < n; ++p) phi_hat[orbit[p]] = orbit[x.phi()[p]];

  EquivariantHD out(ehd_signature());
  std::vector<bool> done(orbits, false);
  for (std::size_t o = 0; o < orbits; ++o) {
    if (done[o]) continue;
    std::int64_t len = 0;
    std::size_t cur = o;
    do {
      done[cur] = true;
      cur = phi_hat[cur];
      ++len;
    } while (cur != o);
    for (std::int64_t j = 0; j < len; ++j) {
      out += GroupRingElement::monomial(ehd_signature(), {Rational(j, len), Rational(0), Rational(0)});
    }
  }
  return out;
}

namespace {

std::size_t build_explicit(TripleModel& model, const ExplicitGSet& x, std::size_t depth, const std::string& name) {
  TripleNode node;
  node.name = name;
  node.dim = 0;
  node.group = x.group_ptr();
  node.quotient_hodge = quotient_hodge_of_finite_set(x);
  const std::size_t idx = model.add_node(std::move(node));
  if (depth == 0) return idx;

  const ConjugacyData cd = conjugacy_classes(x.group());
  const std::size_t id_class = cd.identity_class(x.group());
  for (std::size_t c = 0; c < cd.classes.size(); ++c) {
    if (c == id_class) {
      model.add_child(idx, c, Rational(0), std::nullopt);
      continue;
    }
    auto fixed = x.fixed_points(cd.classes[c].representative);
    if (fixed.empty()) continue;
    ExplicitGSet sub = x.restrict_to(fixed, cd.classes[c].centralizer);
    std::size_t child = build_explicit(model, sub, depth - 1, name + "/" + std::to_string(c));
    model.add_child(idx, c, Rational(0), child);
  }
  return idx;
}

}  // namespace

TripleModel node_from_explicit(const ExplicitGSet& x, std::size_t depth, const std::string& name) {
  TripleModel model;
  build_explicit(model, x, depth, name);
  model.finalize();
  return model;
}

}  // namespace orbispec
