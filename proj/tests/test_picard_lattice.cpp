#include <doctest.h>

#include <json.hpp>

#include "gosset/errors.hpp"
#include "gosset/picard_lattice.hpp"

using namespace gosset;

TEST_CASE("intersection form has signature (1,-r)") {
  for (int r = kMinRank; r <= kMaxRank; ++r) {
    CHECK(pairing(DivisorClass::h(r), DivisorClass::h(r)) == 1);
    for (int i = 1; i <= r; ++i) {
      CHECK(self_intersection(DivisorClass::e(r, i)) == -1);
      CHECK(pairing(DivisorClass::h(r), DivisorClass::e(r, i)) == 0);
      for (int j = i + 1; j <= r; ++j) CHECK(pairing(DivisorClass::e(r, i), DivisorClass::e(r, j)) == 0);
    }
  }
}

TEST_CASE("canonical class") {
  for (int r = kMinRank; r <= kMaxRank; ++r) {
    const auto k = canonical_class(r);
    CHECK(self_intersection(k) == 9 - r);
    CHECK(k[0] == -3);
    for (int i = 1; i <= r; ++i) CHECK(k[i] == 1);
    CHECK(anticanonical_degree(DivisorClass::e(r, 1)) == 1);
  }
}

TEST_CASE("rank outside 3..8 is rejected") {
  CHECK_THROWS(require_rank(2));
  CHECK_THROWS(require_rank(9));
  CHECK_NOTHROW(require_rank(8));
  CHECK_THROWS(DivisorClass::e(6, 7));
}

TEST_CASE("reflections are isometries fixing K") {
  const auto model = SurfaceModel::make(8);
  CHECK(model.degree == 1);
  CHECK(model.simple_roots.size() == 8);
  const DivisorClass d(8, {5, -2, -2, -1, -1, -1, -1, 0, 0});
  for (const auto& a : model.simple_roots) {
    CHECK(is_root(a));
    CHECK(reflect(a, model.canonical) == model.canonical);
    const auto rd = reflect(a, d);
    CHECK(self_intersection(rd) == self_intersection(d));
    CHECK(reflect(a, rd) == d);
    CHECK(reflect(a, a) == -a);
  }
  CHECK_THROWS(reflect(DivisorClass::h(8), d));
}

TEST_CASE("exact division") {
  const DivisorClass d(8, {6, -2, -2, -2, -2, -2, -2, -2, 0});
  CHECK(divide_exact(d, 2) == DivisorClass(8, {3, -1, -1, -1, -1, -1, -1, -1, 0}));
  CHECK_FALSE(divide_exact(d, 4).has_value());
  CHECK_THROWS_AS(exact_quotient(d, 4, "test"), InvariantError);
}

TEST_CASE("ordering and arithmetic") {
  const auto a = DivisorClass::e(6, 1);
  const auto b = DivisorClass::e(6, 2);
  CHECK(a + b - b == a);
  CHECK(2 * a == a + a);
  CHECK((a < b) != (b < a));
  CHECK(DivisorClass::zero(6) == a - a);
}

TEST_CASE("json round trip") {
  const DivisorClass d(7, {3, -1, -1, -1, -1, -1, -1, -2});
  nlohmann::json j = d;
  CHECK(j["r"] == 7);
  CHECK(j["coeffs"].size() == 8);
  CHECK(j.get<DivisorClass>() == d);
  nlohmann::json bad = {{"r", 7}, {"coeffs", {1, 2}}};
  CHECK_THROWS(bad.get<DivisorClass>());
}
