#include <memory>
#include <vector>

#include "doctest.h"
#include "orbispec/finite_group.hpp"

using namespace orbispec;

namespace {

std::shared_ptr<const FiniteGroup> cyclic(std::size_t n) { return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n)); }

void check_class_equation(const FiniteGroup& g) {
  auto data = conjugacy_classes(g);
  std::size_t total = 0;
  std::vector<int> hits(g.order(), 0);
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    const auto& cls = data.classes[c];
    total += cls.elements.size();
    CHECK(cls.elements.size() * cls.centralizer.size() == g.order());
    CHECK(cls.representative == cls.elements.front());
    for (Elem x : cls.elements) {
      ++hits[x];
      CHECK(data.class_of[x] == c);
    }
    for (Elem h : cls.centralizer) CHECK(g.mul(h, cls.representative) == g.mul(cls.representative, h));
  }
  CHECK(total == g.order());
  for (int h : hits) CHECK(h == 1);
}

}  // namespace

TEST_CASE("conjugacy class examples") {
  auto c3 = conjugacy_classes(FiniteGroup::cyclic(3));
  REQUIRE(c3.classes.size() == 3);
  for (const auto& cls : c3.classes) {
    CHECK(cls.elements.size() == 1);
    CHECK(cls.centralizer.size() == 3);
  }
  auto s2 = wreath_product(std::make_shared<FiniteGroup>(FiniteGroup::trivial()), 2);
  CHECK(conjugacy_classes(s2.group()).classes.size() == 2);
  auto w = wreath_product(cyclic(2), 2);
  CHECK(conjugacy_classes(w.group()).classes.size() == 5);
}

TEST_CASE("wreath product orders") {
  CHECK(wreath_product(std::make_shared<FiniteGroup>(FiniteGroup::trivial()), 3).group().order() == 6);
  CHECK(wreath_product(cyclic(2), 2).group().order() == 8);
  CHECK(wreath_product(cyclic(2), 3).group().order() == 48);
  CHECK(wreath_product(cyclic(3), 3).group().order() == 162);
  CHECK_THROWS(wreath_product(cyclic(6), 4));
  CHECK_THROWS(wreath_product(cyclic(2), 3, 40));
}

TEST_CASE("wreath_class_type examples") {
  auto base = cyclic(2);
  auto w = wreath_product(base, 2);
  auto bc = conjugacy_classes(*base);
  std::size_t e = bc.class_of[0];
  Elem id = w.index_of({{0, 0}, {0, 1}});
  CHECK(wreath_class_type(w, bc, id) == WreathClassType{{{e, 1}, 2}});
  Elem swap = w.index_of({{0, 0}, {1, 0}});
  CHECK(wreath_class_type(w, bc, swap) == WreathClassType{{{e, 2}, 1}});
  Elem twisted = w.index_of({{1, 1}, {1, 0}});
  CHECK(wreath_class_type(w, bc, twisted) == WreathClassType{{{e, 2}, 1}});
  Elem odd = w.index_of({{1, 0}, {1, 0}});
  CHECK(wreath_class_type(w, bc, odd) == WreathClassType{{{bc.class_of[1], 2}, 1}});
}

TEST_CASE("materialized conjugacy matches wreath class types") {
  for (std::size_t order = 1; order <= 3; ++order) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto base = cyclic(order);
      auto w = wreath_product(base, n);
      auto bc = conjugacy_classes(*base);
      auto wc = conjugacy_classes(w.group());
      std::size_t size = w.group().order();
      std::vector<WreathClassType> types;
      for (Elem x = 0; x < size; ++x) types.push_back(wreath_class_type(w, bc, x));
      for (Elem x = 0; x < size; ++x)
        for (Elem y = 0; y < size; ++y) CHECK((wc.class_of[x] == wc.class_of[y]) == (types[x] == types[y]));
    }
  }
}

TEST_CASE("class equation on assorted groups") {
  check_class_equation(FiniteGroup::trivial());
  check_class_equation(FiniteGroup::cyclic(6));
  check_class_equation(wreath_product(cyclic(2), 2).group());
  check_class_equation(wreath_product(cyclic(2), 3).group());
  check_class_equation(wreath_product(cyclic(3), 2).group());
}

TEST_CASE("wreath product of degree one is the base group") {
  for (std::size_t order = 1; order <= 6; ++order) {
    auto base = cyclic(order);
    auto w = wreath_product(base, 1);
    REQUIRE(w.group().order() == order);
    // relabel by the base component and compare tables
    std::vector<Elem> to_base(order);
    for (Elem i = 0; i < order; ++i) to_base[i] = w.element(i).base.at(0);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b) CHECK(to_base[w.group().mul(a, b)] == base->mul(to_base[a], to_base[b]));
  }
}

TEST_CASE("wreath multiplication follows the semidirect rule") {
  auto base = cyclic(3);
  auto w = wreath_product(base, 2);
  const FiniteGroup& g = w.group();
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      const auto& x = w.element(a);
      const auto& y = w.element(b);
      WreathElement expected;
      expected.perm = {x.perm[y.perm[0]], x.perm[y.perm[1]]};
      expected.base.resize(2);
      for (std::size_t i = 0; i < 2; ++i) {
        std::size_t pre = x.perm[0] == i ? 0 : 1;  // sigma^-1(i)
        expected.base[i] = base->mul(x.base[i], y.base[pre]);
      }
      CHECK(w.element(g.mul(a, b)) == expected);
    }
  }
}

TEST_CASE("group tables are validated") {
  CHECK_THROWS(FiniteGroup::from_table(2, {0, 0, 0, 0}));
  CHECK_THROWS(FiniteGroup::from_table(2, {0, 1, 1, 2}));
  CHECK_THROWS(FiniteGroup::from_table(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}));
  auto klein = FiniteGroup::from_table(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}, {"e", "a", "b", "c"});
  CHECK(klein.name(3) == "c");
  CHECK(conjugacy_classes(klein).classes.size() == 4);
  auto sub = klein.subgroup(std::vector<Elem>{0, 2});
  CHECK(sub.order() == 2);
  CHECK_THROWS(klein.subgroup(std::vector<Elem>{0, 1, 2}));
}
