#include "orbispec/explicit_set.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace orbispec {
namespace {

void check_permutation(const Permutation& p, std::size_t n, const std::string& what) {
  if (p.size() != n) throw std::invalid_argument(what + " has " + std::to_string(p.size()) + " images, expected " +
                                                 std::to_string(n));
  std::vector<bool> hit(n, false);
  for (std::size_t v : p) {
    if (v >= n || hit[v]) throw std::invalid_argument(what + " is not a permutation");
    hit[v] = true;
  }
}

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a o b)(x) = a(b(x))
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

}  // namespace

ExplicitGSet ExplicitGSet::create(std::size_t points, std::shared_ptr<const FiniteGroup> group,
                                  std::vector<Permutation> action, Permutation phi) {
  const FiniteGroup& g = *group;
  if (action.size() != g.order()) throw std::invalid_argument("action must list one permutation per group element");
  for (std::size_t e = 0; e < action.size(); ++e) {
    check_permutation(action[e], points, "action of element " + std::to_string(e));
  }
  check_permutation(phi, points, "phi");
  for (std::size_t x = 0; x < points; ++x) {
    if (action[g.identity()][x] != x) throw std::invalid_argument("identity does not act trivially");
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (compose(action[a], action[b]) != action[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))]) {
        throw std::invalid_argument("action is not a homomorphism at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      }
    }
    if (compose(phi, action[a]) != compose(action[a], phi)) {
      throw std::invalid_argument("phi does not commute with the action of element " + std::to_string(a));
    }
  }
  ExplicitGSet s;
  s.points_ = points;
  s.group_ = std::move(group);
  s.action_ = std::move(action);
  s.phi_ = std::move(phi);
  return s;
}

ExplicitGSet ExplicitGSet::from_generators(std::size_t points, std::shared_ptr<const FiniteGroup> group,
                                           const std::vector<std::pair<Elem, Permutation>>& generators,
                                           Permutation phi) {
  const FiniteGroup& g = *group;
  std::vector<std::optional<Permutation>> action(g.order());
  Permutation id(points);
  for (std::size_t x = 0; x < points; ++x) id[x] = x;
  action[g.identity()] = id;
  for (const auto& [elem, perm] : generators) {
    if (elem >= g.order()) throw std::invalid_argument("generator index " + std::to_string(elem) + " out of range");
    check_permutation(perm, points, "action of element " + std::to_string(elem));
    if (action[elem] && *action[elem] != perm) {
      throw std::invalid_argument("conflicting action for element " + std::to_string(elem));
    }
    action[elem] = perm;
  }
  // Closure: right-multiply known elements by generators until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (!action[a]) continue;
      for (const auto& [elem, perm] : generators) {
        Elem prod = g.mul(static_cast<Elem>(a), elem);
        Permutation img = compose(*action[a], perm);
        if (!action[prod]) {
          action[prod] = std::move(img);
          changed = true;
        } else if (*action[prod] != img) {
          throw std::invalid_argument("generator images do not define a homomorphism");
        }
      }
    }
  }
  std::vector<Permutation> full;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!action[a]) throw std::invalid_argument("generators do not generate the group (element " +
                                                std::to_string(a) + " unreached)");
    full.push_back(std::move(*action[a]));
  }
  return create(points, std::move(group), std::move(full), std::move(phi));
}

std::vector<std::size_t> ExplicitGSet::fixed_points(Elem g) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < points_; ++x) {
    if (action_[g][x] == x) out.push_back(x);
  }
  return out;
}

ExplicitGSet ExplicitGSet::restrict_to(const std::vector<std::size_t>& points, const std::vector<Elem>& subgroup) const {
  std::vector<std::size_t> local(points_, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) local[points[i]] = i;
  auto relabel = [&](const Permutation& p) {
    Permutation out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::size_t img = local[p[points[i]]];
      if (img == points.size()) throw std::invalid_argument("subset is not invariant");
      out[i] = img;
    }
    return out;
  };
  auto sub = std::make_shared<const FiniteGroup>(group_->subgroup(subgroup));
  std::vector<Permutation> action;
  action.reserve(subgroup.size());
  for (Elem h : subgroup) action.push_back(relabel(action_[h]));
  ExplicitGSet s;
  s.points_ = points.size();
  s.group_ = std::move(sub);
  s.action_ = std::move(action);
  s.phi_ = relabel(phi_);
  return s;
}

ExplicitGSet brieskorn_zero_dim(std::size_t a, std::size_t group_order) {
  if (a == 0) throw std::invalid_argument("brieskorn model needs a >= 1");
  if (group_order == 0 || a % group_order != 0) {
    throw std::invalid_argument("group order " + std::to_string(group_order) + " does not divide " + std::to_string(a));
  }
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(group_order));
  const std::size_t step = a / group_order;
  std::vector<Permutation> action(group_order, Permutation(a));
  for (std::size_t g = 0; g < group_order; ++g) {
    for (std::size_t x = 0; x < a; ++x) action[g][x] = (x + g * step) % a;
  }
  Permutation phi(a);
  for (std::size_t x = 0; x < a; ++x) phi[x] = (x + 1) % a;
  return ExplicitGSet::create(a, std::move(group), std::move(action), std::move(phi));
}

ExplicitGSet wreath_power(const ExplicitGSet& x, std::size_t n, std::size_t bound) {
  WreathGroup w = wreath_product(x.group_ptr(), n, bound);
  const std::size_t base = x.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= base;

  auto decode = [&](std::size_t code) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = n; i-- > 0;) {
      c[i] = code % base;
      code /= base;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < n; ++i) code = code * base + c[i];
    return code;
  };

  const FiniteGroup& wg = w.group();
  std::vector<Permutation> action(wg.order(), Permutation(total));
  for (std::size_t e = 0; e < wg.order(); ++e) {
    const WreathElement& we = w.element(static_cast<Elem>(e));
    for (std::size_t p = 0; p < total; ++p) {
      auto c = decode(p);
      std::vector<std::size_t> y(n);
      for (std::size_t i = 0; i < n; ++i) y[we.perm[i]] = x.act(we.base[we.perm[i]], c[i]);
      action[e][p] = encode(y);
    }
  }
  Permutation phi(total);
  for (std::size_t p = 0; p < total; ++p) {
    auto c = decode(p);
    for (auto& v : c) v = x.phi()[v];
    phi[p] = encode(c);
  }
  return ExplicitGSet::create(total, w.group_ptr(), std::move(action), std::move(phi));
}

}  // namespace orbispec
