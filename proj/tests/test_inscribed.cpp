#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gosset/errors.hpp"
#include "gosset/inscribed.hpp"
#include "gosset/steiner.hpp"
#include "oracles.hpp"

using namespace gosset;

namespace {
const ClassCatalog& L8() {
  static const auto c = enumerate_lines(8);
  return c;
}
const ClassCatalog& L7() {
  static const auto c = enumerate_lines(7);
  return c;
}

InscribedSimplex simplex_of(const ClassCatalog& lines, std::initializer_list<DivisorClass> ds) {
  std::vector<std::uint32_t> v;
  for (const auto& d : ds) v.push_back(static_cast<std::uint32_t>(lines.index_of(d)));
  return make_simplex(lines, v);
}

// e1, h-e1-e2, 2h-e1-e3-e4-e5-e6, 3h-e1-...-e6-2e7: all disjoint from e8.
InscribedSimplex cornered_example() {
  return simplex_of(L8(), {DivisorClass(8, {0, 1, 0, 0, 0, 0, 0, 0, 0}),
                           DivisorClass(8, {1, -1, -1, 0, 0, 0, 0, 0, 0}),
                           DivisorClass(8, {2, -1, 0, -1, -1, -1, -1, 0, 0}),
                           DivisorClass(8, {3, -1, -1, -1, -1, -1, -1, -2, 0})});
}

// h-e1-e2, h-e3-e4, h-e5-e6, h-e7-e8.
InscribedSimplex uncornered_example() {
  return simplex_of(L8(), {DivisorClass(8, {1, -1, -1, 0, 0, 0, 0, 0, 0}),
                           DivisorClass(8, {1, 0, 0, -1, -1, 0, 0, 0, 0}),
                           DivisorClass(8, {1, 0, 0, 0, 0, -1, -1, 0, 0}),
                           DivisorClass(8, {1, 0, 0, 0, 0, 0, 0, -1, -1})});
}

std::size_t plain_center_count(const ClassCatalog& lines, int n, int b) {
  std::set<DivisorClass> s;
  for_each_inscribed(lines, n, b, [&](const InscribedSimplex& x) { s.insert(x.center); });
  return s.size();
}
}  // namespace

TEST_CASE("feasibility table") {
  CHECK(is_feasible(3, 1, 1));
  CHECK_FALSE(is_feasible(5, 2, 1));
  CHECK(is_feasible(6, 2, 1));
  CHECK_FALSE(is_feasible(6, 3, 1));
  CHECK(is_feasible(7, 3, 1));
  CHECK_FALSE(is_feasible(7, 4, 1));
  for (int n = 1; n <= 7; ++n) CHECK(is_feasible(8, n, 1));
  CHECK_FALSE(is_feasible(8, 8, 1));
  CHECK(is_feasible(7, 1, 2));
  CHECK(is_feasible(8, 2, 2));
  CHECK_FALSE(is_feasible(8, 3, 2));
  CHECK_FALSE(is_feasible(7, 2, 2));
  CHECK(is_feasible(8, 1, 3));
  CHECK_FALSE(is_feasible(8, 2, 3));
  CHECK_THROWS_AS(require_feasible(6, 3, 1), DomainError);
}

TEST_CASE("feasible triples have simplexes and infeasible ones none") {
  for (int r = 3; r <= 8; ++r)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 8; ++n) {
        const auto g = L8().rank() == r ? L8().adjacency_matrix(b) : enumerate_lines(r).adjacency_matrix(b);
        const bool any = count_cliques(g, static_cast<std::size_t>(n + 1), 1) > 0;
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(b);
        CHECK(any == is_feasible(r, n, b));
      }
}

TEST_CASE("center grading") {
  std::mt19937_64 rng(42);
  const auto k = canonical_class(8);
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; i < 20; ++i) {
      const auto s = sample_inscribed(L8(), n, 1, rng);
      CHECK(pairing(s.center, k) == -(n + 1));
      CHECK(self_intersection(s.center) == (n + 1) * (n - 1));
    }
}

TEST_CASE("center counts r <= 7 against a plain set") {
  CHECK(plain_center_count(enumerate_lines(6), 2, 1) == 1);
  CHECK(plain_center_count(L7(), 2, 1) == 56);
  CHECK(plain_center_count(L7(), 3, 1) == 1);
  CHECK(plain_center_count(L7(), 1, 2) == 1);
  for (int r = 3; r <= 7; ++r) {
    const auto lines = enumerate_lines(r);
    CHECK(centers(lines, 1, 1, 2).size() == enumerate_rulings(r).size());
  }
}

TEST_CASE("r = 8 center counts against a plain set") {
  CHECK(centers(L8(), 2, 1, 0).size() == plain_center_count(L8(), 2, 1));
  CHECK(plain_center_count(L8(), 2, 1) == 6720);
  CHECK(plain_center_count(L8(), 3, 1) == 17520);
  CHECK(plain_center_count(L8(), 7, 1) == 2160);
  CHECK(plain_center_count(L8(), 1, 2) == 240);
  CHECK(plain_center_count(L8(), 2, 2) == 1);
  CHECK(plain_center_count(L8(), 1, 3) == 1);
}

TEST_CASE("A6 centers: packed hashing agrees with a plain set") {
  const auto packed = centers(L8(), 6, 1, 0);
  CHECK(packed.size() == plain_center_count(L8(), 6, 1));
  CHECK(std::is_sorted(packed.begin(), packed.end()));
  // 2D + 7K is a skew 7-line and distinct centers give distinct ones.
  const auto skew7 = skew_a_lines(L8(), 7);
  const auto k = canonical_class(8);
  std::set<DivisorClass> images;
  for (const auto& d : packed) {
    const auto s = 2 * d + 7 * k;
    CHECK(skew7.find(s) != nullptr);
    images.insert(s);
  }
  CHECK(images.size() == packed.size());
}

TEST_CASE("cornered example") {
  const auto s = cornered_example();
  REQUIRE(s.degree == 1);
  CHECK(is_cornered(L8(), s.vertices));
  const auto corner = cornering_line(L8(), s);
  CHECK(L8()[corner] == DivisorClass::e(8, 8));
  const auto tag = classify(L8(), s);
  CHECK(tag.cornered);
  REQUIRE(tag.root.has_value());
  CHECK(*tag.root == DivisorClass(8, {-3, 1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(is_root(*tag.root));
  const auto dual = gieser_dual(L8(), s);
  CHECK(is_cornered(L8(), dual.vertices));
  CHECK(gieser_dual(L8(), dual).vertices == s.vertices);
  const auto cube = build_4cube(L8(), s);
  CHECK(cube.vertices.size() == 16);
  CHECK(hypercube_defect(L8(), cube).empty());
  CHECK(cube.center == -2 * canonical_class(8));
}

TEST_CASE("uncornered example") {
  const auto s = uncornered_example();
  CHECK_FALSE(is_cornered(L8(), s.vertices));
  const auto tag = classify(L8(), s);
  CHECK_FALSE(tag.cornered);
  REQUIRE(tag.companion.has_value());
  CHECK(*tag.companion == DivisorClass(8, {0, 1, 1, 1, 1, 1, 1, 1, 1}));
  const auto se = skew_edges_of_uncornered(L8(), s);
  CHECK(se.seven_simplex.size() == 8);
  CHECK(se.companion == *tag.companion);
  CHECK(uncornered_from_skew_edges(L8(), se.seven_simplex, se.edges).vertices == s.vertices);
  const auto obs = check_4cube_obstruction(L8(), s);
  CHECK(obs.facets == 16);
  CHECK(obs.uncornered_facets == 16);
  const auto a4 = extend_uncornered_A3_to_A4(L8(), s);
  CHECK(a4.dimension() == 4);
  CHECK_NOTHROW(a4_structure(L8(), a4));
}

TEST_CASE("perfect matchings of eight points") {
  const std::vector<std::uint32_t> v{0, 1, 2, 3, 4, 5, 6, 7};
  const auto ms = perfect_matchings(v);
  CHECK(ms.size() == 105);
  std::set<std::vector<Edge>> distinct(ms.begin(), ms.end());
  CHECK(distinct.size() == 105);
}

TEST_CASE("sampled A3: classification matches the root test") {
  std::mt19937_64 rng(42);
  const auto k = canonical_class(8);
  int cornered = 0, uncornered = 0;
  for (int i = 0; i < 400; ++i) {
    const auto s = sample_inscribed(L8(), 3, 1, rng);
    const auto tag = classify(L8(), s);
    const auto half = divide_exact(s.center + 4 * k, 2);
    CHECK(tag.cornered == (half && is_root(*half)));
    if (tag.cornered) {
      ++cornered;
      CHECK(tag.corner_lines.size() == 1);
      CHECK(L8()[tag.corner_lines[0]] == k + exact_quotient(s.center, 2, "center"));
    } else {
      ++uncornered;
    }
  }
  CHECK(cornered + uncornered == 400);
}

TEST_CASE("A4, A5, A6, A7 structure on samples") {
  std::mt19937_64 rng(42);
  const auto skew3 = skew_a_lines(L8(), 3);
  for (int i = 0; i < 30; ++i) {
    const auto a4 = sample_inscribed(L8(), 4, 1, rng);
    const auto st = a4_structure(L8(), a4);
    const auto dec = decompose_A4_center(L8(), a4.center);
    CHECK(dec.line == st.apex);
    CHECK(pairing(L8()[dec.line], L8()[dec.corner_line]) == 1);

    const auto a5 = sample_inscribed(L8(), 5, 1, rng);
    const auto s5 = a5_structure(L8(), a5);
    auto c5 = s5.corner_lines;
    auto d5 = decompose_A5_center(L8(), skew3, a5.center);
    std::sort(c5.begin(), c5.end());
    std::sort(d5.begin(), d5.end());
    CHECK(c5 == d5);

    const auto a6 = sample_inscribed(L8(), 6, 1, rng);
    const auto fano = fano_structure(L8(), a6);
    CHECK(verify_fano_steiner(fano.blocks).pass);
    const auto ext = extend_fano_to_A7(L8(), a6, {fano.labeled[static_cast<std::size_t>(fano.blocks[0][0])],
                                                  fano.labeled[static_cast<std::size_t>(fano.blocks[0][1])],
                                                  fano.labeled[static_cast<std::size_t>(fano.blocks[0][2])]});
    CHECK(ext.a7.dimension() == 7);

    const auto a7 = sample_inscribed(L8(), 7, 1, rng);
    const auto s7 = a7_structure(L8(), a7);
    CHECK(s7.line_pairs.size() == 7);
    CHECK(s7.ruling == decompose_A7_center(a7.center));
    for (auto [a, b] : s7.line_pairs) CHECK(L8()[a] + L8()[b] == s7.ruling);
  }
}

TEST_CASE("3-cubes") {
  std::mt19937_64 rng(7);
  for (int r : {7, 8})
    for (int i = 0; i < 20; ++i) {
      const auto& lines = r == 7 ? L7() : L8();
      const auto a2 = sample_inscribed(lines, 2, 1, rng);
      const auto cube = build_3cube(lines, a2);
      CHECK(cube.vertices.size() == 8);
      CHECK(hypercube_defect(lines, cube).empty());
    }
}

TEST_CASE("norm vector counts against the E8 theta series") {
  CHECK(count_norm_vectors(2) == oracle::e8_theta(1));
  for (int m = 5; m <= 8; ++m) CHECK(count_norm_vectors(2 * m) == oracle::e8_theta(static_cast<std::uint64_t>(m)));
}

TEST_CASE("higher degree reductions") {
  for (const auto& c : higher_degree_reductions(L7(), nullptr, 1, 2)) CHECK_MESSAGE(c.pass, c.name);
  for (const auto& c : higher_degree_reductions(L8(), &L7(), 1, 2)) CHECK_MESSAGE(c.pass, c.name);
  for (const auto& c : higher_degree_reductions(L8(), nullptr, 2, 2)) CHECK_MESSAGE(c.pass, c.name);
  for (const auto& c : higher_degree_reductions(L8(), nullptr, 1, 3)) CHECK_MESSAGE(c.pass, c.name);
}

TEST_CASE("make_simplex rejects non-cliques") {
  CHECK_THROWS(make_simplex(L8(), {0, 0}));
  std::vector<std::uint32_t> v{0};
  for (std::uint32_t j = 1; j < L8().size(); ++j)
    if (pairing(L8()[0], L8()[j]) == 0) {
      v.push_back(j);
      break;
    }
  CHECK_THROWS(make_simplex(L8(), v));
}
