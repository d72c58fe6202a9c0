#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "gosset/class_catalog.hpp"
#include "gosset/errors.hpp"
#include "oracles.hpp"

using namespace gosset;

namespace {
std::vector<oracle::Vec> as_vecs(const ClassCatalog& c) {
  std::vector<oracle::Vec> out;
  for (const auto& d : c.classes()) {
    oracle::Vec v{};
    for (int i = 0; i <= c.rank(); ++i) v[static_cast<std::size_t>(i)] = d[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("catalogs equal the coefficient scan") {
  for (int r = 3; r <= 8; ++r)
    for (auto kind : {ClassKind::Line, ClassKind::Root, ClassKind::Ruling, ClassKind::ExceptionalSystem}) {
      const auto sig = signature(kind);
      CAPTURE(r);
      CAPTURE(kind_name(kind));
      CHECK(as_vecs(enumerate(kind, r)) == oracle::scan(r, sig.self_intersection, sig.canonical_pairing));
    }
}

TEST_CASE("published cardinalities") {
  CHECK(enumerate_lines(6).size() == 27);
  CHECK(enumerate_lines(7).size() == 56);
  CHECK(enumerate_lines(8).size() == 240);
  CHECK(enumerate_rulings(6).size() == 27);
  CHECK(enumerate_rulings(7).size() == 126);
  CHECK(enumerate_rulings(8).size() == 2160);
  CHECK(enumerate_exceptional_systems(6).size() == 72);
  CHECK(enumerate_exceptional_systems(7).size() == 576);
  CHECK(enumerate_exceptional_systems(8).size() == 17520);
  CHECK(enumerate_roots(8).size() == 240);
  CHECK(enumerate_roots(3).size() == 8);
}

TEST_CASE("kind names parse back") {
  for (auto kind : {ClassKind::Line, ClassKind::Root, ClassKind::Ruling, ClassKind::ExceptionalSystem})
    CHECK(parse_kind(kind_name(kind)) == kind);
  CHECK_FALSE(parse_kind("planes").has_value());
}

TEST_CASE("gram and adjacency agree with pairing") {
  const auto lines = enumerate_lines(7);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const auto g = pairing(lines[i], lines[j]);
      CHECK(lines.gram(i, j) == g);
      if (i != j && g >= 0 && g <= 3) CHECK(lines.adjacency_matrix(static_cast<int>(g)).test(i, j));
    }
  // Each line of S_7 meets 27 others once and 1 other twice.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines.adjacency_matrix(0).degree(i) == 27);
    CHECK(lines.adjacency_matrix(1).degree(i) == 27);
    CHECK(lines.adjacency_matrix(2).degree(i) == 1);
  }
}

TEST_CASE("exceptional systems in S_8 split into roots and skew 8-lines") {
  const auto es = enumerate_exceptional_systems(8);
  const auto roots = enumerate_roots(8);
  const auto skew8 = skew_a_lines(enumerate_lines(8), 8);
  std::size_t nroot = 0, nskew = 0;
  for (const auto& d : es.classes()) {
    const auto o = classify_exceptional_system(d);
    if (const auto* r = std::get_if<RootOrbit>(&o)) {
      CHECK(roots.find(r->root).has_value());
      ++nroot;
    } else {
      CHECK(skew8.find(std::get<SkewOrbit>(o).skew_eight_line) != nullptr);
      ++nskew;
    }
  }
  CHECK(nroot == 240);
  CHECK(nskew == 17280);
}

TEST_CASE("skew a-line sums determine their lines") {
  const auto lines = enumerate_lines(8);
  for (int a = 1; a <= 8; ++a) {
    const auto s = skew_a_lines(lines, a);
    CHECK(s.unique_witnesses());
    CHECK(s.distinct_sums() == s.size());
  }
  CHECK(skew_a_lines(lines, 2).size() == 6720);
  CHECK(skew_a_lines(lines, 3).size() == 60480);
  CHECK(skew_a_lines(lines, 7).size() == 207360);
  CHECK(skew_a_lines(lines, 8).size() == 17280);
}

TEST_CASE("Gieser and Bertini involutions") {
  const auto l7 = enumerate_lines(7);
  for (const auto& l : l7.classes()) {
    const auto g = gieser(l);
    CHECK(is_line(g));
    CHECK(pairing(l, g) == 2);
    CHECK(gieser(g) == l);
  }
  const auto l8 = enumerate_lines(8);
  for (const auto& l : l8.classes()) {
    const auto b = bertini(l);
    CHECK(is_line(b));
    CHECK(pairing(l, b) == 3);
    CHECK(bertini(b) == l);
  }
}

TEST_CASE("Theorem K8: K + l2 + l3 is a line disjoint from both") {
  const auto lines = enumerate_lines(8);
  const auto k = canonical_class(8);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (pairing(lines[i], lines[j]) != 2) continue;
      ++pairs;
      const auto l = k + lines[i] + lines[j];
      REQUIRE(lines.find(l).has_value());
      CHECK(pairing(l, lines[i]) == 0);
      CHECK(pairing(l, lines[j]) == 0);
    }
  CHECK(pairs == 6720);
}

TEST_CASE("blow-down maps lines off the blown-down line onto S_{r-1}") {
  for (int r = 4; r <= 8; ++r) {
    const auto lines = enumerate_lines(r);
    const auto lower = enumerate_lines(r - 1);
    for (std::size_t l = 0; l < lines.size(); l += 7) {
      const auto bd = blow_down_basis(lines, lower, l);
      CHECK(bd.image.size() == lower.size());
      const auto model = SurfaceModel::make(r);
      CHECK(apply_word(model, bd.word, lines[l]) == DivisorClass::e(r, r));
    }
  }
}

TEST_CASE("rulings as conic bundles") {
  const auto lines = enumerate_lines(8);
  const auto rulings = enumerate_rulings(8);
  for (std::size_t i = 0; i < rulings.size(); i += 97) {
    const auto pairs = ruling_vertices(lines, rulings[i]);
    CHECK(pairs.size() == 7);
    for (auto [a, b] : pairs) CHECK(lines[a] + lines[b] == rulings[i]);
  }
}

TEST_CASE("catalog serialization round trip and validation") {
  const auto lines = enumerate_lines(6);
  std::stringstream ss;
  write_catalog(ss, lines);
  const auto back = read_catalog(ss);
  CHECK(back.size() == 27);
  CHECK(back.kind() == ClassKind::Line);
  for (std::size_t i = 0; i < 27; ++i) CHECK(back[i] == lines[i]);

  std::string text;
  {
    std::stringstream s2;
    write_catalog(s2, lines);
    text = s2.str();
  }
  // Corrupt one class so that it is no longer a line.
  auto pos = text.find("\"coeffs\":[0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "\"coeffs\":[9");
  std::stringstream bad(text);
  CHECK_THROWS(read_catalog(bad));
  std::stringstream garbage("not json\n");
  CHECK_THROWS(read_catalog(garbage));
}
