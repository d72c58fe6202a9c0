#include "gosset/inscribed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "gosset/errors.hpp"

namespace gosset {

namespace {

const DivisorClass& K8() {
  static const DivisorClass k = canonical_class(8);
  return k;
}

void require_r8(const ClassCatalog& lines, const char* what) {
  if (lines.kind() != ClassKind::Line || lines.rank() != 8)
    throw DomainError(std::string(what) + " needs the line catalog of S_8");
}

void require_a3(const ClassCatalog& lines, const InscribedSimplex& s, const char* what) {
  require_r8(lines, what);
  if (s.degree != 1 || s.vertices.size() != 4)
    throw DomainError(std::string(what) + " needs an inscribed 1-degree 3-simplex");
}

std::uint32_t idx(const ClassCatalog& lines, const DivisorClass& d, const char* what) {
  auto i = lines.find(d);
  if (!i) throw InvariantError(std::string(what) + ": " + d.to_string() + " is not a line");
  return static_cast<std::uint32_t>(*i);
}

// 9 coefficients in 7-bit two's complement.
std::uint64_t pack_center(const DivisorClass& d) {
  std::uint64_t key = 0;
  for (int i = 0; i <= d.rank(); ++i) {
    const auto c = d[i];
    if (c < -64 || c > 63) throw InvariantError("center coefficient out of packing range: " + d.to_string());
    key |= (static_cast<std::uint64_t>(c) & 0x7F) << (7 * i);
  }
  return key;
}

DivisorClass unpack_center(int r, std::uint64_t key) {
  std::array<std::int64_t, kMaxRank + 1> c{};
  for (int i = 0; i <= r; ++i) {
    auto v = static_cast<std::int64_t>((key >> (7 * i)) & 0x7F);
    c[static_cast<std::size_t>(i)] = v >= 64 ? v - 128 : v;
  }
  return DivisorClass(r, std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(r + 1)));
}

template <std::size_t N>
std::array<std::uint32_t, N> pick(std::span<const std::uint32_t> vs, std::uint32_t mask) {
  std::array<std::uint32_t, N> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (mask >> i & 1u) out[k++] = vs[i];
  return out;
}

// Cornered 4-subsets of a degree-1 simplex, as bit masks over vertex positions.
std::vector<std::uint32_t> cornered_quads(const ClassCatalog& lines, std::span<const std::uint32_t> vs) {
  std::vector<std::uint32_t> out;
  const std::uint32_t n = static_cast<std::uint32_t>(vs.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 4) continue;
    auto q = pick<4>(vs, mask);
    if (is_cornered(lines, q)) out.push_back(mask);
  }
  return out;
}

std::size_t unique_corner(const ClassCatalog& lines, std::span<const std::uint32_t> q) {
  const auto c = cornering_lines(lines, q);
  if (c.count() != 1) throw InvariantError("cornered 3-simplex with " + std::to_string(c.count()) + " cornering lines");
  return *c.first();
}

}  // namespace

bool is_feasible(int r, int n, int b) {
  if (r < kMinRank || r > kMaxRank || n < 1) return false;
  switch (b) {
    case 1:
      if (n == 1) return true;
      if (n == 2) return r >= 6;
      if (n == 3) return r >= 7;
      return r == 8 && n <= 7;
    case 2: return (r == 7 && n == 1) || (r == 8 && (n == 1 || n == 2));
    case 3: return r == 8 && n == 1;
  }
  return false;
}

void require_feasible(int r, int n, int b) {
  if (!is_feasible(r, n, b))
    throw DomainError("no A_" + std::to_string(n) + "^" + std::to_string(r) + "(" + std::to_string(b) +
                      ") polytopes: degree 1 needs r >= 6 for n = 2, r >= 7 for n = 3 and r = 8 for 4 <= n <= 7; "
                      "degree 2 allows (r, n) = (7, 1), (8, 1), (8, 2); degree 3 allows (8, 1)");
}

DivisorClass sum_of(const ClassCatalog& lines, std::span<const std::uint32_t> vertices) {
  auto d = DivisorClass::zero(lines.rank());
  for (auto v : vertices) d += lines[v];
  return d;
}

InscribedSimplex make_simplex(const ClassCatalog& lines, std::vector<std::uint32_t> vertices) {
  if (lines.kind() != ClassKind::Line) throw DomainError("simplexes are built on lines");
  if (vertices.size() < 2) throw DomainError("a simplex needs at least two vertices");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw DomainError("repeated vertex in simplex");
  for (auto v : vertices)
    if (v >= lines.size()) throw DomainError("vertex index " + std::to_string(v) + " out of range");
  const auto b = lines.gram(vertices[0], vertices[1]);
  if (b < 1) throw DomainError("inscribed simplexes need positive intersections");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (lines.gram(vertices[i], vertices[j]) != b)
        throw DomainError("vertices do not meet in a common intersection number");
  InscribedSimplex s{lines.rank(), static_cast<int>(b), std::move(vertices), DivisorClass::zero(lines.rank())};
  s.center = sum_of(lines, s.vertices);
  return s;
}

std::uint64_t count_inscribed(const ClassCatalog& lines, int n, int b, unsigned threads) {
  require_feasible(lines.rank(), n, b);
  return count_cliques(lines.adjacency_matrix(b), static_cast<std::size_t>(n + 1), threads);
}

std::vector<DivisorClass> centers(const ClassCatalog& lines, int n, int b, unsigned threads,
                                  const ProgressFn& progress) {
  require_feasible(lines.rank(), n, b);
  const auto& g = lines.adjacency_matrix(b);
  const std::size_t total = g.size();
  std::mutex mu;
  std::size_t done = 0;
  auto parts = map_partitions<std::vector<std::uint64_t>>(total, threads, [&](std::size_t v) {
    std::unordered_set<std::uint64_t> local;
    for_each_clique_from(g, static_cast<std::size_t>(n + 1), static_cast<std::uint32_t>(v),
                         [&](std::span<const std::uint32_t> c) { local.insert(pack_center(sum_of(lines, c))); });
    std::vector<std::uint64_t> keys(local.begin(), local.end());
    std::sort(keys.begin(), keys.end());
    if (progress) {
      std::lock_guard lock(mu);
      progress(++done, total);
    }
    return keys;
  });
  std::vector<std::uint64_t> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<DivisorClass> out;
  out.reserve(all.size());
  for (auto key : all) out.push_back(unpack_center(lines.rank(), key));
  std::sort(out.begin(), out.end());
  return out;
}

InscribedSimplex sample_inscribed(const ClassCatalog& lines, int n, int b, std::mt19937_64& rng) {
  require_feasible(lines.rank(), n, b);
  auto c = sample_clique(lines.adjacency_matrix(b), static_cast<std::size_t>(n + 1), rng);
  return make_simplex(lines, std::move(c));
}

Bitset cornering_lines(const ClassCatalog& lines, std::span<const std::uint32_t> vertices) {
  if (vertices.empty()) throw DomainError("empty vertex set");
  Bitset c = lines.adjacency_matrix(0).row_set(vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) c &= lines.adjacency(0, vertices[i]);
  return c;
}

bool is_cornered(const ClassCatalog& lines, std::span<const std::uint32_t> vertices) {
  return !cornering_lines(lines, vertices).none();
}

CorneredTag classify(const ClassCatalog& lines, const InscribedSimplex& s) {
  CorneredTag tag;
  const auto c = cornering_lines(lines, s.vertices);
  tag.corner_lines = c.indices();
  tag.cornered = !tag.corner_lines.empty();
  if (s.r == 8 && s.degree == 1 && s.vertices.size() == 4) {
    const auto twice = s.center + 4 * K8();
    auto d = divide_exact(twice, 2);
    const bool root = d && is_root(*d);
    if (root != tag.cornered)
      throw InvariantError("cornered search and root test disagree on center " + s.center.to_string());
    if (tag.cornered) {
      if (tag.corner_lines.size() != 1) throw InvariantError("cornered A_3 with several cornering lines");
      tag.root = *d;
    } else {
      tag.companion = 3 * s.center + 4 * K8();
    }
  }
  return tag;
}

std::size_t cornering_line(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_a3(lines, s, "cornering line");
  if (!is_cornered(lines, s.vertices)) throw DomainError("simplex is uncornered");
  const auto half = exact_quotient(s.center, 2, "cornered center");
  const auto l = idx(lines, K8() + half, "K + center/2");
  if (unique_corner(lines, s.vertices) != l) throw InvariantError("formula and search give different cornering lines");
  return l;
}

bool swap_breaks_cornering(const ClassCatalog& lines, const InscribedSimplex& cornered, std::uint32_t l5) {
  require_a3(lines, cornered, "swap check");
  if (!is_cornered(lines, cornered.vertices)) throw DomainError("simplex is uncornered");
  for (auto v : cornered.vertices)
    if (v == l5 || lines.gram(v, l5) != 1) throw DomainError("fifth line must meet each vertex once");
  for (std::size_t i = 0; i < 4; ++i) {
    std::array<std::uint32_t, 4> q{};
    std::copy(cornered.vertices.begin(), cornered.vertices.end(), q.begin());
    q[i] = l5;
    if (is_cornered(lines, q)) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_skew_two_line(const ClassCatalog& lines, const DivisorClass& s) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> found;
  for (std::uint32_t i = 0; i < lines.size(); ++i) {
    auto j = lines.find(s - lines[i]);
    if (j && *j > i && lines.gram(i, *j) == 0) found.emplace_back(i, static_cast<std::uint32_t>(*j));
  }
  if (found.size() != 1)
    throw InvariantError(s.to_string() + " splits into " + std::to_string(found.size()) + " disjoint line pairs");
  return found[0];
}

SkewEdges skew_edges_of_uncornered(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_a3(lines, s, "skew edges");
  if (is_cornered(lines, s.vertices)) throw DomainError("simplex is cornered");
  SkewEdges out;
  for (std::size_t m = 0; m < 4; ++m) {
    auto face = s.center - lines[s.vertices[m]] + K8();
    out.edges[m] = split_skew_two_line(lines, face);
    out.seven_simplex.push_back(out.edges[m].first);
    out.seven_simplex.push_back(out.edges[m].second);
  }
  std::sort(out.seven_simplex.begin(), out.seven_simplex.end());
  if (std::adjacent_find(out.seven_simplex.begin(), out.seven_simplex.end()) != out.seven_simplex.end())
    throw InvariantError("skew edges share an endpoint");
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (lines.gram(out.seven_simplex[i], out.seven_simplex[j]) != 0)
        throw InvariantError("skew edge endpoints are not disjoint");
  out.companion = 3 * s.center + 4 * K8();
  if (sum_of(lines, out.seven_simplex) != out.companion) throw InvariantError("skew edges do not sum to 3D + 4K");
  return out;
}

InscribedSimplex uncornered_from_skew_edges(const ClassCatalog& lines, std::span<const std::uint32_t> eight,
                                            std::span<const Edge> edges) {
  require_r8(lines, "skew edge inverse");
  if (eight.size() != 8 || edges.size() != 4) throw DomainError("need a 7-simplex and four edges");
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (eight[i] == eight[j] || lines.gram(eight[i], eight[j]) != 0)
        throw DomainError("vertices do not form a 7-simplex");
  std::vector<std::uint32_t> covered;
  for (auto [a, b] : edges) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::vector<std::uint32_t> sorted(eight.begin(), eight.end());
  std::sort(sorted.begin(), sorted.end());
  std::sort(covered.begin(), covered.end());
  if (covered != sorted) throw DomainError("edges are not pairwise skew within the 7-simplex");

  const auto d1 = sum_of(lines, eight);
  const auto base = exact_quotient(d1 - K8(), 3, "(D1 - K)/3");
  std::vector<std::uint32_t> verts;
  for (auto [a, b] : edges) verts.push_back(idx(lines, base - lines[a] - lines[b], "(D1 - K)/3 - a_i"));
  auto s = make_simplex(lines, verts);
  if (s.degree != 1) throw InvariantError("rebuilt lines do not meet once");
  if (s.center != exact_quotient(d1 - 4 * K8(), 3, "(D1 - 4K)/3")) throw InvariantError("rebuilt center mismatch");
  if (is_cornered(lines, s.vertices)) throw InvariantError("rebuilt simplex is cornered");
  return s;
}

std::vector<std::vector<Edge>> perfect_matchings(std::span<const std::uint32_t> vertices) {
  if (vertices.size() % 2) throw DomainError("odd vertex count has no perfect matching");
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> cur;
  std::vector<bool> used(vertices.size(), false);
  std::function<void()> rec = [&] {
    std::size_t i = 0;
    while (i < vertices.size() && used[i]) ++i;
    if (i == vertices.size()) {
      out.push_back(cur);
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(vertices[i], vertices[j]);
      rec();
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  return out;
}

A4Decomposition decompose_A4_center(const ClassCatalog& lines, const DivisorClass& d) {
  require_r8(lines, "A_4 decomposition");
  if (anticanonical_degree(d) != 5 || self_intersection(d) != 15)
    throw DomainError(d.to_string() + " is not an A_4 center");
  std::vector<A4Decomposition> found;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto a = d - lines[l];
    auto half = divide_exact(a, 2);
    if (!half) continue;
    auto corner = lines.find(*half + K8());
    if (!corner) continue;
    found.push_back({a, l, *corner});
  }
  if (found.size() != 1)
    throw InvariantError(d.to_string() + " has " + std::to_string(found.size()) + " cornered decompositions");
  if (lines.gram(found[0].corner_line, found[0].line) != 1)
    throw InvariantError("cornering line and l_D do not meet once");
  return found[0];
}

A4Structure a4_structure(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_r8(lines, "A_4 structure");
  if (s.degree != 1 || s.vertices.size() != 5) throw DomainError("needs an A_4^8(1)");
  if (is_cornered(lines, s.vertices)) throw InvariantError("A_4^8(1) is cornered");
  auto quads = cornered_quads(lines, s.vertices);
  if (quads.size() != 1)
    throw InvariantError("A_4^8(1) has " + std::to_string(quads.size()) + " cornered 3-faces");
  A4Structure out{pick<4>(s.vertices, quads[0]), 0};
  for (std::size_t i = 0; i < 5; ++i)
    if (!(quads[0] >> i & 1u)) out.apex = s.vertices[i];
  return out;
}

InscribedSimplex extend_uncornered_A3_to_A4(const ClassCatalog& lines, const InscribedSimplex& s, std::size_t omit,
                                            bool swap) {
  require_a3(lines, s, "A_3 extension");
  if (omit > 3) throw DomainError("face index outside 0..3");
  if (is_cornered(lines, s.vertices)) throw DomainError("simplex is cornered");
  auto [a, b] = split_skew_two_line(lines, s.center - lines[s.vertices[omit]] + K8());
  if (swap) std::swap(a, b);
  const auto g = idx(lines, gieser_at(lines[a], lines[b]), "Gieser transform");
  auto verts = s.vertices;
  verts.push_back(g);
  auto out = make_simplex(lines, verts);
  if (out.degree != 1) throw InvariantError("adjoined line does not meet the face once");
  std::array<std::uint32_t, 4> face{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != omit) face[k++] = s.vertices[i];
  face[3] = g;
  if (!is_cornered(lines, face)) throw InvariantError("adjoined line does not complete a cornered face");
  return out;
}

InscribedSimplex gieser_dual(const ClassCatalog& lines, const InscribedSimplex& s) {
  const auto l = cornering_line(lines, s);
  std::vector<std::uint32_t> verts;
  for (auto v : s.vertices) verts.push_back(idx(lines, gieser_at(lines[l], lines[v]), "Gieser dual"));
  auto out = make_simplex(lines, verts);
  if (out.degree != 1 || !cornering_lines(lines, out.vertices).test(l))
    throw InvariantError("Gieser dual is not cornered by the same line");
  return out;
}

std::array<std::size_t, 3> decompose_A5_center(const ClassCatalog& lines, const SkewLineCatalog& skew3,
                                               const DivisorClass& d) {
  require_r8(lines, "A_5 decomposition");
  if (skew3.a() != 3 || skew3.rank() != 8) throw DomainError("needs the skew 3-line catalog of S_8");
  if (anticanonical_degree(d) != 6 || self_intersection(d) != 24)
    throw DomainError(d.to_string() + " is not an A_5 center");
  const auto* e = skew3.find(d + 3 * K8());
  if (!e) throw InvariantError("D + 3K is not a skew 3-line for D = " + d.to_string());
  return {e->witness[0], e->witness[1], e->witness[2]};
}

A5Structure a5_structure(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_r8(lines, "A_5 structure");
  if (s.degree != 1 || s.vertices.size() != 6) throw DomainError("needs an A_5^8(1)");
  auto quads = cornered_quads(lines, s.vertices);
  if (quads.size() != 3)
    throw InvariantError("A_5^8(1) has " + std::to_string(quads.size()) + " cornered 3-faces");
  // Complements are three disjoint pairs covering the six vertices.
  std::array<std::uint32_t, 3> pairs{};
  for (std::size_t i = 0; i < 3; ++i) pairs[i] = 0x3Fu & ~quads[i];
  if ((pairs[0] | pairs[1] | pairs[2]) != 0x3Fu) throw InvariantError("cornered faces do not follow the 3-lemma");
  // Labels: complement of face 3 is {1,2}, of face 2 is {3,4}, of face 1 is {5,6}.
  A5Structure out{};
  std::size_t k = 0;
  for (int f = 2; f >= 0; --f)
    for (std::size_t i = 0; i < 6; ++i)
      if (pairs[static_cast<std::size_t>(f)] >> i & 1u) out.labeled[k++] = s.vertices[i];
  for (std::size_t i = 0; i < 3; ++i) {
    out.cornered_faces[i] = pick<4>(s.vertices, quads[i]);
    out.corner_lines[i] = unique_corner(lines, out.cornered_faces[i]);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (lines.gram(out.corner_lines[i], out.corner_lines[j]) != 0)
        throw InvariantError("cornering lines of an A_5 are not disjoint");
  auto sum = DivisorClass::zero(8);
  for (auto l : out.corner_lines) sum += lines[l];
  if (sum != s.center + 3 * K8()) throw InvariantError("cornering lines do not sum to D + 3K");
  return out;
}

FanoStructure fano_structure(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_r8(lines, "Fano structure");
  if (s.degree != 1 || s.vertices.size() != 7) throw DomainError("needs an A_6^8(1)");
  auto quads = cornered_quads(lines, s.vertices);
  if (quads.size() != 7)
    throw InvariantError("A_6^8(1) has " + std::to_string(quads.size()) + " cornered 3-faces");
  std::set<std::uint32_t> found(quads.begin(), quads.end());

  std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};
  bool matched = false;
  do {
    std::set<std::uint32_t> image;
    for (const auto& face : kFanoCorneredFaces) {
      std::uint32_t mask = 0;
      for (int p : face) mask |= 1u << perm[static_cast<std::size_t>(p)];
      image.insert(mask);
    }
    if (image == found) {
      matched = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!matched) throw InvariantError("cornered faces do not match the 7-lemma pattern");

  FanoStructure out{};
  out.permutation = perm;
  for (std::size_t i = 0; i < 7; ++i) out.labeled[i] = s.vertices[static_cast<std::size_t>(perm[i])];
  auto sum = DivisorClass::zero(8);
  for (std::size_t f = 0; f < 7; ++f) {
    out.cornered_faces[f] = kFanoCorneredFaces[f];
    std::array<std::uint32_t, 4> q{};
    std::size_t k = 0, b = 0;
    for (int p = 0; p < 7; ++p) {
      if (std::find(kFanoCorneredFaces[f].begin(), kFanoCorneredFaces[f].end(), p) != kFanoCorneredFaces[f].end())
        q[k++] = out.labeled[static_cast<std::size_t>(p)];
      else
        out.blocks[f][b++] = p;
    }
    out.corner_lines[f] = unique_corner(lines, q);
    sum += lines[out.corner_lines[f]];
  }
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      if (lines.gram(out.corner_lines[i], out.corner_lines[j]) != 0)
        throw InvariantError("cornering lines of an A_6 are not disjoint");
  if (sum != 2 * s.center + 7 * K8()) throw InvariantError("cornering lines do not sum to 2D + 7K");
  return out;
}

FanoExtension extend_fano_to_A7(const ClassCatalog& lines, const InscribedSimplex& a6,
                                std::array<std::uint32_t, 3> block) {
  require_r8(lines, "Fano extension");
  if (a6.degree != 1 || a6.vertices.size() != 7) throw DomainError("needs an A_6^8(1)");
  std::sort(block.begin(), block.end());
  std::vector<std::uint32_t> rest;
  std::set_difference(a6.vertices.begin(), a6.vertices.end(), block.begin(), block.end(), std::back_inserter(rest));
  if (rest.size() != 4 || !is_cornered(lines, rest)) throw DomainError("not a Fano block of this simplex");
  // The block must not lie in any cornered face.
  for (auto v : rest) {
    std::array<std::uint32_t, 4> q{block[0], block[1], block[2], v};
    if (is_cornered(lines, q)) throw DomainError("not a Fano block of this simplex");
  }

  FanoExtension out{};
  out.complement_corner_line = unique_corner(lines, rest);
  const auto l = out.complement_corner_line;
  if (lines[l] != exact_quotient(sum_of(lines, rest), 2, "complement center") + K8())
    throw InvariantError("complement cornering line differs from D/2 + K");
  std::array<std::uint32_t, 4> with_l{block[0], block[1], block[2], static_cast<std::uint32_t>(l)};
  for (auto v : block)
    if (lines.gram(l, v) != 1) throw InvariantError("complement cornering line does not meet the block once");
  if (is_cornered(lines, with_l)) throw InvariantError("block plus complement cornering line is cornered");

  auto [a, b] = split_skew_two_line(lines, sum_of(lines, block) + K8());
  out.l8 = idx(lines, gieser_at(lines[a], lines[b]), "Gieser transform");
  out.l8_alternative = idx(lines, gieser_at(lines[b], lines[a]), "Gieser transform");
  if (lines[out.l8_alternative] != bertini(lines[out.l8])) throw InvariantError("extensions are not Bertini partners");
  for (auto cand : {out.l8, out.l8_alternative}) {
    if (std::find(a6.vertices.begin(), a6.vertices.end(), cand) != a6.vertices.end())
      throw InvariantError("extension line lies in the A_6");
    auto verts = a6.vertices;
    verts.push_back(static_cast<std::uint32_t>(cand));
    auto a7 = make_simplex(lines, verts);
    if (a7.degree != 1) throw InvariantError("extension does not give an A_7");
    std::array<std::uint32_t, 4> q{block[0], block[1], block[2], static_cast<std::uint32_t>(cand)};
    if (!is_cornered(lines, q)) throw InvariantError("block plus extension line is uncornered");
    if (cand == out.l8) {
      out.a7 = std::move(a7);
      out.cornered = q;
    }
  }
  return out;
}

DivisorClass decompose_A7_center(const DivisorClass& d) {
  if (d.rank() != 8 || anticanonical_degree(d) != 8 || self_intersection(d) != 48)
    throw DomainError(d.to_string() + " is not an A_7 center");
  auto f = exact_quotient(d, 2, "A_7 center") + 2 * K8();
  if (!satisfies(ClassKind::Ruling, f)) throw InvariantError("D/2 + 2K is not a ruling for D = " + d.to_string());
  return f;
}

A7Structure a7_structure(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_r8(lines, "A_7 structure");
  if (s.degree != 1 || s.vertices.size() != 8) throw DomainError("needs an A_7^8(1)");
  A7Structure out;
  out.ruling = decompose_A7_center(s.center);
  auto quads = cornered_quads(lines, s.vertices);
  std::set<std::uint32_t> set(quads.begin(), quads.end());
  for (auto q : quads) {
    const auto comp = 0xFFu & ~q;
    if (!set.count(comp)) throw InvariantError("complement of a cornered face is uncornered");
    if (q > comp) continue;
    auto f1 = pick<4>(s.vertices, q);
    auto f2 = pick<4>(s.vertices, comp);
    out.face_pairs.emplace_back(f1, f2);
    auto l1 = unique_corner(lines, f1), l2 = unique_corner(lines, f2);
    if (lines.gram(l1, l2) != 1 || lines[l1] + lines[l2] != out.ruling)
      throw InvariantError("cornering line pair is not bipolar for the ruling");
    out.line_pairs.emplace_back(std::min(l1, l2), std::max(l1, l2));
  }
  std::sort(out.line_pairs.begin(), out.line_pairs.end());
  auto expected = ruling_vertices(lines, out.ruling);
  std::sort(expected.begin(), expected.end());
  if (out.face_pairs.size() != 7 || out.line_pairs != expected)
    throw InvariantError("cornered face pairs do not give the seven bipolar pairs");
  return out;
}

std::vector<Check> higher_degree_reductions(const ClassCatalog& lines, const ClassCatalog* lower_lines, int n, int b) {
  const int r = lines.rank();
  require_feasible(r, n, b);
  if (b < 2) throw DomainError("reductions are for degree 2 and 3");
  const auto k = canonical_class(r);
  std::vector<Check> out;
  std::vector<InscribedSimplex> all;
  for_each_inscribed(lines, n, b, [&](const InscribedSimplex& s) { all.push_back(s); });
  const auto cs = centers(lines, n, b);
  auto every = [&](auto pred) {
    for (const auto& s : all)
      if (!pred(s)) return false;
    return true;
  };

  if (r == 7 && n == 1 && b == 2) {
    out.push_back({"A1^7(2) pairs are (l, G(l))",
                   every([&](const InscribedSimplex& s) { return lines[s.vertices[1]] == gieser(lines[s.vertices[0]]); }),
                   std::to_string(all.size()) + " pairs"});
    out.push_back({"A1^7(2) pair count 28", all.size() == 28, std::to_string(all.size())});
    out.push_back({"A1^7(2) common center -K", cs.size() == 1 && cs[0] == -k, std::to_string(cs.size()) + " centers"});
  } else if (r == 8 && n == 1 && b == 2) {
    out.push_back({"A1^8(2) center count 240", cs.size() == 240, std::to_string(cs.size())});
    bool lines_ok = true, vf_ok = true, steiner_ok = true;
    std::string detail;
    std::map<DivisorClass, std::vector<const InscribedSimplex*>> by_center;
    for (const auto& s : all) by_center[s.center].push_back(&s);
    for (const auto& [d, group] : by_center) {
      auto ld = lines.find(d + k);
      if (!ld) {
        lines_ok = false;
        continue;
      }
      for (const auto* s : group)
        for (auto v : s->vertices)
          if (lines.gram(*ld, v) != 0) vf_ok = false;
      if (!lower_lines) continue;
      // Under the blow-down of l_D the pairs become the 28 pairs of S_7
      // meeting twice.
      auto bd = blow_down_basis(lines, *lower_lines, *ld);
      std::map<std::size_t, std::size_t> image(bd.image.begin(), bd.image.end());
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto* s : group) {
        auto x = image.at(s->vertices[0]), y = image.at(s->vertices[1]);
        if (lower_lines->gram(x, y) != 2) steiner_ok = false;
        pairs.emplace(std::min(x, y), std::max(x, y));
      }
      if (pairs.size() != 28) steiner_ok = false;
    }
    out.push_back({"A1^8(2) center + K is a line", lines_ok, detail});
    out.push_back({"A1^8(2) vertices in N0(center + K)", vf_ok, ""});
    if (lower_lines) out.push_back({"A1^8(2) per-center configuration is S_A(2,S7)", steiner_ok, ""});
  } else if (r == 8 && n == 2 && b == 2) {
    out.push_back({"A2^8(2) common center -3K", cs.size() == 1 && cs[0] == -3 * k,
                   std::to_string(cs.size()) + " centers"});
    out.push_back({"A2^8(2) triangles", true, std::to_string(all.size())});
  } else if (r == 8 && n == 1 && b == 3) {
    out.push_back({"A1^8(3) pairs are (l, B(l))",
                   every([&](const InscribedSimplex& s) { return lines[s.vertices[1]] == bertini(lines[s.vertices[0]]); }),
                   std::to_string(all.size()) + " pairs"});
    out.push_back({"A1^8(3) pair count 120", all.size() == 120, std::to_string(all.size())});
    out.push_back({"A1^8(3) common center -2K", cs.size() == 1 && cs[0] == -2 * k, std::to_string(cs.size()) + " centers"});
  }
  return out;
}

std::vector<Edge> inscribed_crosspolytope(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_r8(lines, "inscribed crosspolytope");
  const auto m = s.vertices.size();
  if (s.degree != 1 || m < 2 || m > 8) throw DomainError("needs an A_{m-1}^8(1) with 2 <= m <= 8");
  std::vector<Edge> out;
  for (auto v : s.vertices) out.emplace_back(v, idx(lines, bertini(lines[v]), "Bertini transform"));
  for (std::size_t i = 0; i < m; ++i) {
    if (lines.gram(out[i].first, out[i].second) != 3) throw InvariantError("antipodal lines do not meet three times");
    if (lines[out[i].first] + lines[out[i].second] != -2 * K8()) throw InvariantError("antipodal pair off center");
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (lines.gram(out[i].first, out[j].second) != 1 || lines.gram(out[i].second, out[j].second) != 1)
        throw InvariantError("crosspolytope lines do not meet once across pairs");
    }
  }
  return out;
}

std::string hypercube_defect(const ClassCatalog& lines, const Hypercube& cube) {
  const auto m = static_cast<std::size_t>(cube.m);
  const auto& vs = cube.vertices;
  if (vs.size() != (std::size_t{1} << m)) return "vertex count is not 2^m";
  std::vector<std::uint32_t> sorted(vs);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
  // Coordinates relative to vs[0] and its cube neighbours.
  std::vector<std::uint32_t> nbr;
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (lines.gram(vs[0], vs[i]) == 0) nbr.push_back(vs[i]);
  if (nbr.size() != m) return "base vertex has " + std::to_string(nbr.size()) + " cube neighbours";
  std::vector<std::uint32_t> code(vs.size());
  std::set<std::uint32_t> codes;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto x = lines[vs[i]];
    const auto base = pairing(x, lines[vs[0]]);
    for (std::size_t j = 0; j < m; ++j)
      if (pairing(x, lines[nbr[j]]) == base - 1) code[i] |= 1u << j;
    codes.insert(code[i]);
  }
  if (codes.size() != vs.size()) return "vertices do not get distinct cube coordinates";
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (lines.gram(vs[i], vs[j]) != std::popcount(code[i] ^ code[j]) - 1)
        return "intersection does not match cube distance";
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if ((code[i] ^ code[j]) == (1u << m) - 1 && lines[vs[i]] + lines[vs[j]] != cube.center)
        return "diagonal does not sum to the center";
  return {};
}

Hypercube build_3cube(const ClassCatalog& lines, const InscribedSimplex& a2) {
  const int r = lines.rank();
  if (r != 7 && r != 8) throw DomainError("3-cubes are built in S_7 and S_8");
  if (a2.degree != 1 || a2.vertices.size() != 3) throw DomainError("needs an A_2(1)");
  const auto k = canonical_class(r);
  Hypercube cube{3, {}, DivisorClass::zero(r)};
  std::vector<std::uint32_t> front(a2.vertices);
  if (r == 7) {
    const auto ld = idx(lines, a2.center + k, "D + K");
    front.push_back(ld);
    for (std::size_t i = 0; i < 4; ++i) cube.vertices.push_back(front[i]);
    for (std::size_t i = 0; i < 4; ++i) cube.vertices.push_back(idx(lines, gieser(lines[front[i]]), "Gieser"));
    cube.center = -k;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& li = lines[a2.vertices[(i + 1) % 3]];
      const auto& lj = lines[a2.vertices[(i + 2) % 3]];
      if (li + lj != lines[ld] + gieser(lines[a2.vertices[i]])) throw InvariantError("2-face relation fails");
    }
  } else {
    auto [a, b] = split_skew_two_line(lines, a2.center + k);
    const auto ld = a;
    front.push_back(b);
    if (lines[b] != a2.center + k - lines[ld]) throw InvariantError("l' differs from l1 + l2 + l3 + K - l_D");
    for (std::size_t i = 0; i < 4; ++i) cube.vertices.push_back(front[i]);
    for (std::size_t i = 0; i < 4; ++i)
      cube.vertices.push_back(idx(lines, gieser_at(lines[ld], lines[front[i]]), "Gieser transform"));
    cube.center = lines[ld] - k;
    for (auto v : cube.vertices)
      if (lines.gram(ld, v) != 0) throw InvariantError("3-cube leaves the vertex figure of l_D");
  }
  if (auto why = hypercube_defect(lines, cube); !why.empty()) throw InvariantError("3-cube: " + why);
  return cube;
}

Hypercube build_4cube(const ClassCatalog& lines, const InscribedSimplex& s) {
  const auto l = cornering_line(lines, s);
  const auto& v = s.vertices;
  auto B = [&](std::uint32_t x) { return bertini(lines[x]); };
  Hypercube cube{4, {}, -2 * K8()};
  cube.vertices.push_back(static_cast<std::uint32_t>(l));
  cube.vertices.push_back(idx(lines, bertini(lines[l]), "B(l)"));
  for (auto x : v) {
    cube.vertices.push_back(x);
    cube.vertices.push_back(idx(lines, B(x), "B(l_i)"));
  }
  const auto d = exact_quotient(s.center + 4 * K8(), 2, "cornered root");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      std::array<std::size_t, 2> rest{};
      std::size_t k = 0;
      for (std::size_t t = 0; t < 4; ++t)
        if (t != i && t != j) rest[k++] = t;
      const auto bk = idx(lines, B(v[rest[0]]), "B(l_k)");
      const auto bm = idx(lines, B(v[rest[1]]), "B(l_m)");
      std::array<std::uint32_t, 4> face{v[i], v[j], bk, bm};
      const auto sum = sum_of(lines, face);
      if (!is_cornered(lines, face)) throw InvariantError("mixed face is uncornered");
      const auto root = lines[v[i]] + lines[v[j]] - d + 2 * K8();
      if (!is_root(root) || sum + 4 * K8() != 2 * root) throw InvariantError("mixed face root identity fails");
      cube.vertices.push_back(idx(lines, exact_quotient(sum, 2, "mixed vertex") + K8(), "mixed vertex"));
    }
  if (auto why = hypercube_defect(lines, cube); !why.empty()) throw InvariantError("4-cube: " + why);
  return cube;
}

CubeObstruction check_4cube_obstruction(const ClassCatalog& lines, const InscribedSimplex& s) {
  require_a3(lines, s, "4-cube obstruction");
  if (is_cornered(lines, s.vertices)) throw DomainError("simplex is cornered");
  CubeObstruction out;
  for (std::size_t m = 0; m < 4; ++m) {
    auto [a, b] = split_skew_two_line(lines, s.center - lines[s.vertices[m]] + K8());
    out.antipodal[m] = {idx(lines, gieser_at(lines[a], lines[b]), "Gieser transform"),
                        idx(lines, gieser_at(lines[b], lines[a]), "Gieser transform")};
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (lines.gram(out.antipodal[i].first, out.antipodal[i].second) != 3)
      throw InvariantError("antipodal crosspolytope lines do not meet three times");
    for (std::size_t j = i + 1; j < 4; ++j)
      for (auto x : {out.antipodal[i].first, out.antipodal[i].second})
        for (auto y : {out.antipodal[j].first, out.antipodal[j].second})
          if (lines.gram(x, y) != 1) throw InvariantError("crosspolytope lines do not meet once across pairs");
  }
  for (std::uint32_t choice = 0; choice < 16; ++choice) {
    std::array<std::uint32_t, 4> facet{};
    for (std::size_t i = 0; i < 4; ++i)
      facet[i] = (choice >> i & 1u) ? out.antipodal[i].second : out.antipodal[i].first;
    ++out.facets;
    if (!is_cornered(lines, facet)) ++out.uncornered_facets;
  }
  return out;
}

std::uint64_t count_norm_vectors(int norm) {
  if (norm <= 0) throw DomainError("norm must be positive");
  // D.K = 0 means a1 + ... + a8 = 3 a0; D^2 = -norm means
  // a1^2 + ... + a8^2 = norm + a0^2. Cauchy-Schwarz gives a0^2 <= 8 norm.
  std::function<std::uint64_t(int, std::int64_t, std::int64_t)> fill = [&](int left, std::int64_t s,
                                                                           std::int64_t q) -> std::uint64_t {
    if (left == 0) return (s == 0 && q == 0) ? 1 : 0;
    if (q < 0 || s * s > static_cast<std::int64_t>(left) * q) return 0;
    const auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q))) + 1;
    std::uint64_t n = 0;
    for (std::int64_t a = -bound; a <= bound; ++a)
      if (a * a <= q) n += fill(left - 1, s - a, q - a * a);
    return n;
  };
  std::uint64_t total = 0;
  const auto bound = static_cast<std::int64_t>(std::sqrt(8.0 * norm)) + 1;
  for (std::int64_t a0 = -bound; a0 <= bound; ++a0) total += fill(8, 3 * a0, norm + a0 * a0);
  return total;
}

}  // namespace gosset
