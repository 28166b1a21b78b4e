#include <vector>

#include "doctest.h"
#include "orbispec/hodge.hpp"
#include "support.hpp"

using namespace orbispec;
using testing::elt;

namespace {

const Signature& E = ehd_signature();
const Signature& P = pair_signature();
const Signature& H = hsp_signature();

MixedHodgeEigenDatum row(int k, int p, int q, Rational alpha, std::int64_t dim) {
  return {k, p, q, CyclicRational(alpha), dim};
}

}  // namespace

TEST_CASE("ehd_from_data examples") {
  std::vector<MixedHodgeEigenDatum> point{row(0, 0, 0, 0, 1)};
  std::vector<MixedHodgeEigenDatum> line{row(2, 1, 1, 0, 1)};
  std::vector<MixedHodgeEigenDatum> swap{row(0, 0, 0, 0, 1), row(0, 0, 0, Rational(1, 2), 1)};
  CHECK(ehd_from_data(point) == elt("1*(0,0,0)", E));
  CHECK(ehd_from_data(line) == elt("1*(0,1,1)", E));
  CHECK(ehd_from_data(swap) == elt("1*(0,0,0) + 1*(1/2,0,0)", E));

  CHECK(ehd_to_poincare_bar(ehd_from_data(point)) == elt("1*(0,0)", P));
  CHECK(ehd_to_poincare_bar(ehd_from_data(line)) == elt("1*(0,1)", P));
  CHECK(ehd_to_poincare_bar(ehd_from_data(swap)) == elt("1*(0,0) + 1*(1/2,0)", P));
  CHECK(ehd_to_pair(ehd_from_data(line)) == elt("1*(0,1)", P));
  CHECK(ehd_to_triple(ehd_from_data(line)) == elt("1*(0,1,1)", E));
}

TEST_CASE("odd degrees enter with a sign") {
  std::vector<MixedHodgeEigenDatum> curve{row(1, 1, 0, Rational(1, 3), 2), row(2, 1, 1, 0, 1)};
  CHECK(ehd_from_data(curve) == elt("1*(0,1,1) + -2*(1/3,1,0)", E));
}

TEST_CASE("ehd_to_hsp examples") {
  CHECK(ehd_to_hsp(elt("1*(1/2,0,0)", E)) == elt("1*(1/2)", H));
  CHECK(ehd_to_hsp(elt("1*(0,1,1)", E)) == elt("1*(1)", H));
  CHECK(ehd_to_hsp(elt("1*(0,0,0) + 1*(1/3,0,0) + 1*(2/3,0,0)", E)) == elt("1*(0) + 1*(1/3) + 1*(2/3)", H));
  CHECK(ehd_to_hsp(elt("1*(1/4,3/2,1/2)", E)) == elt("1*(7/4)", H));
}

TEST_CASE("hsp_to_poincare examples") {
  CHECK(hsp_to_poincare(elt("1*(0) + 1*(1/2)", H)) == "1 + t^{1/2}");
  CHECK(hsp_to_poincare(GroupRingElement(H)) == "0");
  CHECK(hsp_to_poincare(elt("2*(1)", H)) == "2t");
}

TEST_CASE("hsp is additive but not multiplicative") {
  auto x = elt("1*(1/2,0,0)", E);
  CHECK(ehd_to_hsp(x * x) == elt("1*(0)", H));
  CHECK(ehd_to_hsp(x) * ehd_to_hsp(x) == elt("1*(1)", H));
  CHECK(ehd_to_hsp(x * x) != ehd_to_hsp(x) * ehd_to_hsp(x));

  testing::Gen gen(401);
  for (int i = 0; i < 60; ++i) {
    auto a = gen.ehd(4, -2, 2);
    auto b = gen.ehd(4, -2, 2);
    CHECK(ehd_to_hsp(a + b) == ehd_to_hsp(a) + ehd_to_hsp(b));
  }
}

TEST_CASE("pair, triple and poincare reductions are ring homomorphisms") {
  testing::Gen gen(402);
  for (int i = 0; i < 60; ++i) {
    auto a = gen.ehd(4, -2, 2);
    auto b = gen.ehd(4, -2, 2);
    CHECK(ehd_to_pair(a * b) == ehd_to_pair(a) * ehd_to_pair(b));
    CHECK(ehd_to_triple(a * b) == ehd_to_triple(a) * ehd_to_triple(b));
    CHECK(ehd_to_poincare_bar(a * b) == ehd_to_poincare_bar(a) * ehd_to_poincare_bar(b));
    CHECK(ehd_to_pair(a + b) == ehd_to_pair(a) + ehd_to_pair(b));
  }
}

TEST_CASE("augmentation is the signed dimension count") {
  testing::Gen gen(403);
  for (int i = 0; i < 60; ++i) {
    auto data = gen.hodge_data(6);
    std::int64_t count = 0;
    for (const auto& d : data) count += (d.k % 2 == 0 ? 1 : -1) * d.dim;
    CHECK(augmentation(ehd_from_data(data)) == count);
  }
}

TEST_CASE("P - Q integrality survives products") {
  testing::Gen gen(404);
  for (int i = 0; i < 60; ++i) {
    auto a = gen.ehd(4, -2, 2);
    auto b = gen.ehd(4, -2, 2);
    CHECK_NOTHROW(validate_ehd(a * b));
  }
  CHECK_THROWS(validate_ehd(elt("1*(0,1/2,0)", E)));
  CHECK_THROWS(validate_ehd(elt("1*(0,-1,-1)", E)));
  CHECK_THROWS(validate_ehd(elt("1*(0,0)", P)));
}

TEST_CASE("age markers") {
  CHECK(triple_marker(Rational(1, 2)) == elt("1*(0,1/2,1/2)", E));
  CHECK(pair_marker(Rational(1, 2)) == elt("1*(0,1/2)", P));
  CHECK(hsp_marker(Rational(1, 2)) == elt("1*(1/2)", H));
}
