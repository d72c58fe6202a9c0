#include "gosset/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gosset/errors.hpp"
#include "gosset/gosset_polytope.hpp"
#include "gosset/steiner.hpp"

namespace gosset {

namespace {

using ClassSet = std::unordered_set<DivisorClass, DivisorClassHash>;

struct Ctx {
  const VerifyConfig& cfg;
  VerifyReport& out;

  void note(const std::string& msg) const {
    if (cfg.progress) cfg.progress(msg);
  }
  void check(std::string name, bool pass, std::string detail = {}) const {
    out.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void cell(int r, std::string name, std::uint64_t expected, std::uint64_t computed) const {
    out.cells.push_back({r, name, expected, computed});
    check("r=" + std::to_string(r) + " " + name + " count", expected == computed,
          "expected " + std::to_string(expected) + ", computed " + std::to_string(computed));
  }
};

// First k entries of a seeded partial shuffle of 0..n-1.
std::vector<std::size_t> draw(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) std::swap(p[i], p[i + bounded_draw(rng, n - i)]);
  p.resize(k);
  return p;
}

int max_feasible_n(int r, int b) {
  int best = 0;
  for (int n = 1; n <= 8; ++n)
    if (is_feasible(r, n, b)) best = n;
  return best;
}

ClassSet as_set(std::span<const DivisorClass> v) { return {v.begin(), v.end()}; }

std::string of(std::size_t a, std::size_t b) { return std::to_string(a) + " of " + std::to_string(b); }

void grading_checks(const Ctx& ctx, const ClassCatalog& lines) {
  const int r = lines.rank();
  const auto k = canonical_class(r);
  for (int b = 1; b <= 3; ++b) {
    for (int n = 1; n <= 7; ++n) {
      if (!is_feasible(r, n, b)) continue;
      const auto cs = centers(lines, n, b, ctx.cfg.threads);
      bool ok = true;
      for (const auto& d : cs)
        if (pairing(d, k) != -(n + 1) || self_intersection(d) != (n + 1) * (n * b - 1)) ok = false;
      ctx.check("r=" + std::to_string(r) + " " + center_cell_name(n, b) + " center grading D.K = -(n+1), D^2 = (n+1)(nb-1)",
                ok, std::to_string(cs.size()) + " centers");
    }
    const int top = max_feasible_n(r, b);
    const auto none = count_cliques(lines.adjacency_matrix(b), static_cast<std::size_t>(top + 2), ctx.cfg.threads);
    ctx.check("r=" + std::to_string(r) + " no inscribed " + std::to_string(top + 1) + "-simplex of degree " +
                  std::to_string(b),
              none == 0, std::to_string(none) + " found");
  }
  const auto rulings = enumerate_rulings(r);
  const auto c1 = centers(lines, 1, 1, ctx.cfg.threads);
  ctx.check("r=" + std::to_string(r) + " A1(1) centers are the rulings",
            c1.size() == rulings.size() && as_set(c1) == as_set(rulings.classes()),
            std::to_string(c1.size()) + " centers, " + std::to_string(rulings.size()) + " rulings");
}

void theorems_r6(const Ctx& ctx, const ClassCatalog& lines) {
  const auto cs = centers(lines, 2, 1);
  ctx.check("r=6 A2(1) polytopes share the center -K", cs.size() == 1 && cs[0] == -canonical_class(6),
            std::to_string(cs.size()) + " centers");
}

void theorems_r7(const Ctx& ctx, const ClassCatalog& lines, std::mt19937_64& rng) {
  const auto k = canonical_class(7);
  const auto c2 = centers(lines, 2, 1);
  ClassSet image;
  bool ok = true;
  for (const auto& d : c2) {
    if (!lines.find(d + k)) ok = false;
    image.insert(d + k);
  }
  ctx.check("r=7 A2(1) center D gives the line D + K, bijectively", ok && image == as_set(lines.classes()),
            std::to_string(c2.size()) + " centers");

  std::vector<InscribedSimplex> a2;
  bool cornered = true;
  for_each_inscribed(lines, 2, 1, [&](const InscribedSimplex& s) {
    auto l = lines.find(s.center + k);
    if (!l || !cornering_lines(lines, s.vertices).test(*l)) cornered = false;
    a2.push_back(s);
  });
  ctx.check("r=7 every A2(1) is cornered by D + K", cornered, std::to_string(a2.size()) + " simplexes");

  const auto c3 = centers(lines, 3, 1);
  ctx.check("r=7 A3(1) polytopes share the center -2K", c3.size() == 1 && c3[0] == -2 * k,
            std::to_string(c3.size()) + " centers");

  std::size_t cubes = 0;
  bool faces = true;
  for (auto i : draw(a2.size(), ctx.cfg.sample, rng)) {
    const auto cube = build_3cube(lines, a2[i]);
    ++cubes;
    const auto& v = a2[i].vertices;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b && pairing(lines[v[a]], gieser(lines[v[b]])) != 0) faces = false;
  }
  ctx.check("r=7 3-cubes {l_i, l_D, G(l_i), G(l_D)} with center -K", cubes > 0, std::to_string(cubes) + " built");
  ctx.check("r=7 l_i.G(l_j) = 0 for i != j", faces, std::to_string(cubes) + " seeds");

  for (auto& c : higher_degree_reductions(lines, nullptr, 1, 2)) ctx.check("r=7 " + c.name, c.pass, c.detail);
}

void theorems_r8(const Ctx& ctx, const ClassCatalog& lines, std::mt19937_64& rng) {
  const auto k = canonical_class(8);
  const auto& cfg = ctx.cfg;
  const auto lower = enumerate_lines(7);

  ctx.note("K = l1 - l2 - l3");
  {
    std::size_t pairs = 0;
    bool ok = true;
    for_each_clique(lines.adjacency_matrix(2), 2, [&](std::span<const std::uint32_t> c) {
      ++pairs;
      auto l1 = lines.find(k + lines[c[0]] + lines[c[1]]);
      if (!l1 || lines.gram(*l1, c[0]) != 0 || lines.gram(*l1, c[1]) != 0) ok = false;
    });
    ctx.check("K + l2 + l3 is a line disjoint from l2 and l3 for every intersection-2 pair", ok && pairs == 6720,
              std::to_string(pairs) + " pairs");
  }

  ctx.note("A2 centers");
  {
    const auto skew2 = skew_a_lines(lines, 2);
    const auto cs = centers(lines, 2, 1, cfg.threads);
    std::size_t hit = 0;
    for (const auto& d : cs)
      if (skew2.find(d + k)) ++hit;
    ctx.check("A2(1) center D gives the skew 2-line D + K, bijectively",
              hit == cs.size() && cs.size() == skew2.distinct_sums(), of(hit, skew2.distinct_sums()));
  }

  ctx.note("A3 classification (exhaustive)");
  std::vector<InscribedSimplex> cornered, uncornered;
  {
    std::unordered_map<DivisorClass, bool, DivisorClassHash> center_cornered;
    bool consistent = true;
    for_each_inscribed(lines, 3, 1, [&](const InscribedSimplex& s) {
      const auto tag = classify(lines, s);
      auto [it, fresh] = center_cornered.emplace(s.center, tag.cornered);
      if (!fresh && it->second != tag.cornered) consistent = false;
      (tag.cornered ? cornered : uncornered).push_back(s);
    });
    ctx.check("A3(1) search and root test agree on every simplex", consistent,
              std::to_string(cornered.size()) + " cornered, " + std::to_string(uncornered.size()) + " uncornered");

    const auto skew8 = skew_a_lines(lines, 8);
    const auto exc = enumerate_exceptional_systems(8);
    const auto exc_set = as_set(exc.classes());
    std::size_t roots = 0, skews = 0;
    bool dichotomy = true, onto_exc = true;
    ClassSet image;
    for (const auto& [d, corn] : center_cornered) {
      image.insert(d + k);
      if (!exc_set.count(d + k)) onto_exc = false;
      const auto orbit = classify_exceptional_system(d + k);
      if (corn) {
        auto half = divide_exact(d + 4 * k, 2);
        if (!half || !is_root(*half) || !std::holds_alternative<RootOrbit>(orbit)) dichotomy = false;
        ++roots;
      } else {
        if (!skew8.find(3 * d + 4 * k) || !std::holds_alternative<SkewOrbit>(orbit)) dichotomy = false;
        ++skews;
      }
    }
    ctx.check("A3(1) center D gives the exceptional system D + K, bijectively",
              onto_exc && image.size() == exc.size() && center_cornered.size() == exc.size(),
              of(image.size(), exc.size()));
    ctx.check("cornered iff D + 4K = 2d for a root d; uncornered iff 3D + 4K is a skew 8-line",
              dichotomy && roots == 240 && skews == skew8.distinct_sums(),
              std::to_string(roots) + " root centers, " + std::to_string(skews) + " skew 8-line centers");
  }

  const std::size_t a3n = std::max<std::size_t>(cfg.sample, 1000);
  ctx.note("cornered A3 samples");
  {
    std::size_t n = 0;
    bool dual = true, swaps = true, cubes = true;
    std::size_t swap_tests = 0;
    for (auto i : draw(cornered.size(), a3n, rng)) {
      const auto& s = cornered[i];
      const auto l = cornering_line(lines, s);
      ++n;
      const auto g = gieser_dual(lines, s);
      if (gieser_dual(lines, g).vertices != s.vertices || cornering_line(lines, g) != l) dual = false;
      for (auto v : s.vertices)
        if (lines[v] + gieser_at(lines[l], lines[v]) != lines[l] - k) dual = false;
      Bitset common = lines.adjacency_matrix(1).row_set(s.vertices[0]);
      for (std::size_t j = 1; j < 4; ++j) common &= lines.adjacency(1, s.vertices[j]);
      for (auto l5 : common.indices()) {
        ++swap_tests;
        if (!swap_breaks_cornering(lines, s, static_cast<std::uint32_t>(l5))) swaps = false;
      }
      const auto cube = build_4cube(lines, s);
      if (cube.vertices.size() != 16 || cube.center != -2 * k) cubes = false;
    }
    ctx.check("cornering line K + D/2 is the only cornering line", n > 0, std::to_string(n) + " cornered A3(1)");
    ctx.check("Gieser dual is an involution with the same cornering line", dual, std::to_string(n) + " cornered A3(1)");
    ctx.check("swapping in a fifth line meeting all four once leaves it uncornered", swaps,
              std::to_string(swap_tests) + " swaps");
    ctx.check("4-cube on a cornered A3(1): 16 lines, center -2K, six cornered mixed faces", cubes,
              std::to_string(n) + " cubes");
  }

  ctx.note("uncornered A3 samples");
  {
    std::size_t n = 0, matchings = 0;
    bool round = true, ext = true, obstruction = true, match = true;
    for (auto i : draw(uncornered.size(), a3n, rng)) {
      const auto& s = uncornered[i];
      const auto se = skew_edges_of_uncornered(lines, s);
      if (uncornered_from_skew_edges(lines, se.seven_simplex, se.edges).vertices != s.vertices) round = false;
      for (std::size_t omit = 0; omit < 4; ++omit) {
        const auto a = extend_uncornered_A3_to_A4(lines, s, omit, false);
        const auto b = extend_uncornered_A3_to_A4(lines, s, omit, true);
        if (a.center + b.center != 2 * s.center - 2 * k) ext = false;
      }
      const auto ob = check_4cube_obstruction(lines, s);
      if (ob.facets != 16 || ob.uncornered_facets != 16) obstruction = false;
      if (n < 20) {
        const auto pm = perfect_matchings(se.seven_simplex);
        matchings += pm.size();
        if (pm.size() != 105) match = false;
        const auto d1 = sum_of(lines, se.seven_simplex);
        for (const auto& m : pm)
          if (uncornered_from_skew_edges(lines, se.seven_simplex, m).center !=
              exact_quotient(d1 - 4 * k, 3, "(D1 - 4K)/3"))
            match = false;
      }
      ++n;
    }
    ctx.check("skew edges of an uncornered A3(1) round-trip", round, std::to_string(n) + " uncornered A3(1)");
    ctx.check("each 3-face extends to an A4(1) by both Gieser choices", ext, std::to_string(n) + " uncornered A3(1)");
    ctx.check("4-crosspolytope from an uncornered A3(1) has 16 uncornered facets", obstruction,
              std::to_string(n) + " uncornered A3(1)");
    ctx.check("105 skew-edge families per 7-simplex each give an uncornered A3(1)", match,
              std::to_string(matchings) + " families");
  }

  ctx.note("A4 centers and simplexes (exhaustive)");
  {
    const auto cs = centers(lines, 4, 1, cfg.threads);
    std::unordered_map<DivisorClass, A4Decomposition, DivisorClassHash> dec;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& d : cs) {
      auto x = decompose_A4_center(lines, d);
      pairs.emplace(x.corner_line, x.line);
      dec.emplace(d, x);
    }
    std::size_t ordered = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) ordered += lines.adjacency_matrix(1).degree(i);
    ctx.check("A4(1) center D = A_D + l_D uniquely, bijective with ordered intersection-1 pairs",
              pairs.size() == cs.size() && ordered == cs.size() && ordered == 240 * 126,
              std::to_string(cs.size()) + " centers, " + std::to_string(ordered) + " ordered pairs");

    std::size_t n = 0;
    bool ok = true;
    for_each_inscribed(lines, 4, 1, [&](const InscribedSimplex& s) {
      const auto st = a4_structure(lines, s);
      const auto& x = dec.at(s.center);
      if (st.apex != x.line || sum_of(lines, st.cornered_face) != x.cornered_center) ok = false;
      ++n;
    });
    ctx.check("every A4(1) is uncornered with one cornered 3-face and apex l_D", ok, std::to_string(n) + " simplexes");
  }

  ctx.note("A5");
  {
    const auto skew3 = skew_a_lines(lines, 3);
    const auto cs = centers(lines, 5, 1, cfg.threads);
    for (const auto& d : cs) decompose_A5_center(lines, skew3, d);
    ctx.check("A5(1) center D gives the skew 3-line D + 3K, bijectively",
              cs.size() == skew3.distinct_sums() && skew3.unique_witnesses(), of(cs.size(), skew3.distinct_sums()));
    bool ok = true;
    std::size_t n = 0;
    for (std::size_t i = 0; i < cfg.sample; ++i) {
      const auto s = sample_inscribed(lines, 5, 1, rng);
      const auto st = a5_structure(lines, s);
      auto got = st.corner_lines;
      std::sort(got.begin(), got.end());
      if (got != decompose_A5_center(lines, skew3, s.center)) ok = false;
      ++n;
    }
    ctx.check("A5(1) has three cornered 3-faces {1234},{1256},{3456} cornered by the skew 3-line", ok,
              std::to_string(n) + " sampled");
  }

  ctx.note("A6");
  {
    const auto skew7 = skew_a_lines(lines, 7);
    const auto cs = centers(lines, 6, 1, cfg.threads);
    std::size_t hit = 0;
    for (const auto& d : cs)
      if (skew7.find(2 * d + 7 * k)) ++hit;
    ctx.check("A6(1) center D gives the skew 7-line 2D + 7K, injectively", hit == cs.size(),
              of(hit, skew7.distinct_sums()) + " skew 7-lines reached");
    bool fano = true, ext = true;
    std::size_t n = 0, extensions = 0;
    for (std::size_t i = 0; i < cfg.sample; ++i) {
      const auto s = sample_inscribed(lines, 6, 1, rng);
      const auto st = fano_structure(lines, s);
      if (!verify_fano_steiner(st.blocks).pass) fano = false;
      for (const auto& b : st.blocks) {
        std::array<std::uint32_t, 3> blk{st.labeled[static_cast<std::size_t>(b[0])],
                                         st.labeled[static_cast<std::size_t>(b[1])],
                                         st.labeled[static_cast<std::size_t>(b[2])]};
        const auto e = extend_fano_to_A7(lines, s, blk);
        if (e.a7.vertices.size() != 8) ext = false;
        ++extensions;
      }
      ++n;
    }
    ctx.check("A6(1) has seven cornered 3-faces whose complements form a Fano plane", fano,
              std::to_string(n) + " sampled");
    ctx.check("each Fano block extends the A6(1) to an A7(1)", ext, std::to_string(extensions) + " extensions");
  }

  ctx.note("A7");
  {
    const auto rulings = enumerate_rulings(8);
    const auto cs = centers(lines, 7, 1, cfg.threads);
    ClassSet image;
    for (const auto& d : cs) image.insert(decompose_A7_center(d));
    ctx.check("A7(1) center D gives the ruling D/2 + 2K, bijectively",
              image.size() == cs.size() && image == as_set(rulings.classes()), of(image.size(), rulings.size()));
    std::size_t n = 0;
    for (std::size_t i = 0; i < cfg.sample; ++i) {
      a7_structure(lines, sample_inscribed(lines, 7, 1, rng));
      ++n;
    }
    ctx.check("A7(1) splits into seven complementary cornered pairs giving the bipolar pairs of its ruling", true,
              std::to_string(n) + " sampled");
  }

  ctx.note("crosspolytopes and 3-cubes");
  {
    std::size_t n = 0;
    bool facets = true;
    for (int m = 2; m <= 8; ++m)
      for (std::size_t i = 0; i < cfg.sample; ++i) {
        const auto s = sample_inscribed(lines, m - 1, 1, rng);
        const auto cross = inscribed_crosspolytope(lines, s);
        std::vector<std::uint32_t> facet;
        for (const auto& [a, b] : cross) facet.push_back(bounded_draw(rng, 2) ? b : a);
        if (make_simplex(lines, facet).degree != 1) facets = false;
        ++n;
      }
    ctx.check("{l_i, B(l_i)} is an inscribed m-crosspolytope with center -2K for m = 2..8", facets,
              std::to_string(n) + " sampled");
    std::size_t cubes = 0;
    for (std::size_t i = 0; i < cfg.sample; ++i) {
      build_3cube(lines, sample_inscribed(lines, 2, 1, rng));
      ++cubes;
    }
    ctx.check("3-cubes from A2(1) lie in the vertex figure of l_D", true, std::to_string(cubes) + " sampled");
  }

  ctx.note("degree 2 and 3");
  for (auto [n, b] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}})
    for (auto& c : higher_degree_reductions(lines, &lower, n, b)) ctx.check(c.name, c.pass, c.detail);
}

}  // namespace

std::string_view scope_name(VerifyScope s) {
  switch (s) {
    case VerifyScope::Tables: return "tables";
    case VerifyScope::Theorems: return "theorems";
    case VerifyScope::Steiner: return "steiner";
    case VerifyScope::All: return "all";
  }
  return "";
}

std::optional<VerifyScope> parse_scope(std::string_view s) {
  for (auto v : {VerifyScope::Tables, VerifyScope::Theorems, VerifyScope::Steiner, VerifyScope::All})
    if (scope_name(v) == s) return v;
  return std::nullopt;
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cells)
    cs.push_back({{"r", c.r}, {"polytope", c.polytope}, {"expected", c.expected}, {"computed", c.computed},
                  {"pass", c.pass()}});
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& c : checks) ks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"scope", std::string(scope_name(scope))},
          {"r", r},
          {"sample", sample},
          {"seed", seed},
          {"pass", pass()},
          {"failures", failures()},
          {"cells", std::move(cs)},
          {"checks", std::move(ks)}};
}

void VerifyReport::write_csv(std::ostream& out) const {
  out << kSubpolytopeCsvHeader << '\n';
  for (const auto& c : cells)
    out << c.r << ',' << c.polytope << ',' << c.expected << ',' << c.computed << ',' << (c.pass() ? "true" : "false")
        << '\n';
}

std::uint64_t expected_catalog_count(ClassKind kind, int r) {
  if (r < kMinRank || r > kMaxRank) throw DomainError("rank " + std::to_string(r) + " outside 3..8");
  static constexpr std::uint64_t lines[] = {6, 10, 16, 27, 56, 240};
  static constexpr std::uint64_t roots[] = {8, 20, 40, 72, 126, 240};
  static constexpr std::uint64_t rulings[] = {3, 5, 10, 27, 126, 2160};
  static constexpr std::uint64_t exceptional[] = {2, 5, 16, 72, 576, 17520};
  const auto i = static_cast<std::size_t>(r - 3);
  switch (kind) {
    case ClassKind::Line: return lines[i];
    case ClassKind::Root: return roots[i];
    case ClassKind::Ruling: return rulings[i];
    case ClassKind::ExceptionalSystem: return exceptional[i];
  }
  return 0;
}

std::optional<std::uint64_t> expected_center_count(int r, int n, int b) {
  if (!is_feasible(r, n, b)) return std::nullopt;
  if (b == 1 && r == 8) {
    static constexpr std::uint64_t row[] = {2160, 6720, 17520, 30240, 60480, 207360, 2160};
    return row[n - 1];
  }
  if (b == 1) {
    if (n == 1) return expected_catalog_count(ClassKind::Ruling, r);
    if (n == 2) return r == 6 ? 1 : 56;
    if (n == 3) return 1;
  }
  if (b == 2) return (r == 8 && n == 1) ? 240 : 1;
  if (b == 3) return 1;
  return std::nullopt;
}

std::uint64_t expected_norm_count(int norm) {
  switch (norm) {
    case 10: return 30240;
    case 12: return 60480;
    case 14: return 82560;
    case 16: return 140400;
  }
  throw DomainError("no published count for norm " + std::to_string(norm));
}

std::string center_cell_name(int n, int b) { return "A" + std::to_string(n) + "(" + std::to_string(b) + ")"; }

void verify_tables(int r, const VerifyConfig& cfg, VerifyReport& out) {
  const Ctx ctx{cfg, out};
  ctx.note("r=" + std::to_string(r) + " catalogs");
  const auto lines = enumerate_lines(r);
  for (auto kind : {ClassKind::Line, ClassKind::Root, ClassKind::Ruling, ClassKind::ExceptionalSystem}) {
    const auto n = kind == ClassKind::Line ? lines.size() : enumerate(kind, r).size();
    ctx.cell(r, std::string(kind_name(kind)), expected_catalog_count(kind, r), n);
  }
  ctx.note("r=" + std::to_string(r) + " subpolytopes");
  for (const auto& c : verify_subpolytope_table(r, cfg.threads).cells) ctx.cell(r, c.polytope, c.expected, c.computed);
  for (int b = 1; b <= 3; ++b)
    for (int n = 1; n <= 7; ++n) {
      auto expected = expected_center_count(r, n, b);
      if (!expected) continue;
      ctx.note("r=" + std::to_string(r) + " centers " + center_cell_name(n, b));
      ctx.cell(r, center_cell_name(n, b), *expected, centers(lines, n, b, cfg.threads).size());
    }
  if (r == 8) {
    ctx.note("norm vectors");
    for (int norm : {10, 12, 14, 16})
      ctx.cell(8, "norm" + std::to_string(norm), expected_norm_count(norm), count_norm_vectors(norm));
  }
}

void verify_theorems(int r, const VerifyConfig& cfg, VerifyReport& out) {
  const Ctx ctx{cfg, out};
  ctx.note("r=" + std::to_string(r) + " theorems");
  std::mt19937_64 rng(cfg.seed);
  const auto lines = enumerate_lines(r);
  grading_checks(ctx, lines);
  if (r == 6) theorems_r6(ctx, lines);
  if (r == 7) theorems_r7(ctx, lines, rng);
  if (r == 8) theorems_r8(ctx, lines, rng);
}

void verify_steiner(const VerifyConfig& cfg, VerifyReport& out) {
  const Ctx ctx{cfg, out};
  static constexpr std::pair<SteinerName, std::uint64_t> kBlocks[] = {{SteinerName::SA2S7, 28},
                                                                      {SteinerName::SA2S8, 120},
                                                                      {SteinerName::SB3S6, 45},
                                                                      {SteinerName::SB3S8, 2240},
                                                                      {SteinerName::SC4S7, 630}};
  for (auto [name, blocks] : kBlocks) {
    const auto p = steiner_params(name);
    const std::string tag(steiner_name(name));
    ctx.note("steiner " + tag);
    const auto lines = enumerate_lines(p.r);
    const auto sys = build_steiner(lines, name);
    const auto rep = verify_design(lines, sys, cfg.threads);
    ctx.cell(p.r, tag, blocks, sys.blocks.size());
    ctx.check(tag + " every determining set lies in exactly one block", rep.pass,
              rep.pass ? std::to_string(rep.determining_sets) + " determining sets" : rep.detail);
    ctx.check(tag + " block sums equal -" + std::to_string(p.sum_multiple) + "K", block_sums_constant(lines, sys));
    ctx.check(tag + " blocks are maximal cliques", blocks_maximal(lines, sys));
    ctx.check(tag + " invariant under simple reflections", weyl_invariant(lines, sys));
    if (name == SteinerName::SB3S6)
      ctx.check("SB3S6 has fewer blocks than S(2,3,27)", sys.blocks.size() < steiner_triple_block_count(27),
                std::to_string(sys.blocks.size()) + " < " + std::to_string(steiner_triple_block_count(27)));
    if (name == SteinerName::SA2S7) {
      bool ok = true;
      for (const auto& b : sys.blocks)
        if (lines[b[1]] != gieser(lines[b[0]])) ok = false;
      ctx.check("SA2S7 blocks are {l, G(l)}", ok);
    }
  }
  const auto roots = enumerate_roots(8);
  const auto rt = root_triples(roots);
  ctx.check("root triples with pairwise product 1 sum to 0", rt.all_sum_zero && rt.triples > 0,
            std::to_string(rt.triples) + " triples");

  std::array<std::array<int, 3>, 7> fano{};
  for (std::size_t f = 0; f < 7; ++f) {
    std::size_t b = 0;
    for (int p = 0; p < 7; ++p)
      if (std::find(kFanoCorneredFaces[f].begin(), kFanoCorneredFaces[f].end(), p) == kFanoCorneredFaces[f].end())
        fano[f][b++] = p;
  }
  ctx.check("canonical Fano blocks form S(2,3,7)", verify_fano_steiner(fano).pass);
  bool drop = true;
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<std::array<int, 3>> six;
    for (std::size_t j = 0; j < 7; ++j)
      if (j != i) six.push_back(fano[j]);
    const auto rep = verify_pair_cover(7, six);
    if (rep.pass || !rep.witness) drop = false;
  }
  ctx.check("every 6-block Fano subsystem fails with an uncovered pair", drop);
}

VerifyReport run_verify(VerifyScope scope, const VerifyConfig& cfg) {
  if (cfg.r != 0 && (cfg.r < kMinRank || cfg.r > kMaxRank))
    throw DomainError("rank " + std::to_string(cfg.r) + " outside 3..8");
  if (cfg.sample == 0) throw DomainError("sample size must be positive");
  VerifyReport out;
  out.scope = scope;
  out.r = cfg.r;
  out.sample = cfg.sample;
  out.seed = cfg.seed;
  std::vector<int> ranks;
  if (cfg.r)
    ranks.push_back(cfg.r);
  else
    for (int r = kMinRank; r <= kMaxRank; ++r) ranks.push_back(r);
  const bool all = scope == VerifyScope::All;
  if (all || scope == VerifyScope::Tables)
    for (int r : ranks) verify_tables(r, cfg, out);
  if (all || scope == VerifyScope::Theorems)
    for (int r : ranks) verify_theorems(r, cfg, out);
  if (all || scope == VerifyScope::Steiner) verify_steiner(cfg, out);
  return out;
}

}  // namespace gosset
