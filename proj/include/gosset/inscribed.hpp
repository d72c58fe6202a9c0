#pragma once

// Inscribed simplexes, crosspolytopes and cubes in (r-4)_21: vertex sets of
// lines with constant pairwise intersection, their centers, and the
// cornered/uncornered structure of the degree-1 simplexes in 4_21.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gosset/class_catalog.hpp"
#include "gosset/clique.hpp"

namespace gosset {

// Sorted vertex indices into the line catalog; all pairwise intersections
// equal `degree`; center is the sum of the vertex classes.
struct InscribedSimplex {
  int r = 0;
  int degree = 0;
  std::vector<std::uint32_t> vertices;
  DivisorClass center;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

// (r, n, b) for which A_n^r(b) polytopes exist.
bool is_feasible(int r, int n, int b);
void require_feasible(int r, int n, int b);

// Validates and sorts. Throws DomainError unless the lines pairwise meet in
// one common positive value.
InscribedSimplex make_simplex(const ClassCatalog& lines, std::vector<std::uint32_t> vertices);

DivisorClass sum_of(const ClassCatalog& lines, std::span<const std::uint32_t> vertices);

// Every A_n^r(b), in lexicographic order of vertex tuples.
template <class Fn>
void for_each_inscribed(const ClassCatalog& lines, int n, int b, Fn&& fn) {
  require_feasible(lines.rank(), n, b);
  const auto& g = lines.adjacency_matrix(b);
  for_each_clique(g, static_cast<std::size_t>(n + 1), [&](std::span<const std::uint32_t> c) {
    InscribedSimplex s{lines.rank(), b, {c.begin(), c.end()}, sum_of(lines, c)};
    fn(s);
  });
}

std::uint64_t count_inscribed(const ClassCatalog& lines, int n, int b, unsigned threads = 1);

// Called after each first-vertex partition completes.
using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Distinct centers of all A_n^r(b), sorted.
std::vector<DivisorClass> centers(const ClassCatalog& lines, int n, int b, unsigned threads = 1,
                                  const ProgressFn& progress = {});

// Seeded random A_n^r(b).
InscribedSimplex sample_inscribed(const ClassCatalog& lines, int n, int b, std::mt19937_64& rng);

// Lines whose vertex figure contains every vertex.
Bitset cornering_lines(const ClassCatalog& lines, std::span<const std::uint32_t> vertices);
bool is_cornered(const ClassCatalog& lines, std::span<const std::uint32_t> vertices);

struct CorneredTag {
  bool cornered = false;
  // All cornering lines, ascending; the first is the reported one.
  std::vector<std::size_t> corner_lines;
  // A_3^8(1) only: d with center + 4K = 2d when cornered, the skew 8-line
  // 3 center + 4K otherwise.
  std::optional<DivisorClass> root;
  std::optional<DivisorClass> companion;
};

// For A_3^8(1) the search result is cross-checked against the root test and
// a disagreement raises InvariantError.
CorneredTag classify(const ClassCatalog& lines, const InscribedSimplex& s);

// K + center/2 for a cornered A_3^8(1); asserts it is the unique cornering
// line found by search.
std::size_t cornering_line(const ClassCatalog& lines, const InscribedSimplex& s);

// For a cornered A_3^8(1) {l1..l4} and l5 meeting each l_i once, every swap
// {l1..l4} - {l_i} + {l5} is uncornered. Returns true when that holds.
bool swap_breaks_cornering(const ClassCatalog& lines, const InscribedSimplex& cornered, std::uint32_t l5);

// Unique pair of disjoint lines (smaller index first) summing to S.
std::pair<std::uint32_t, std::uint32_t> split_skew_two_line(const ClassCatalog& lines, const DivisorClass& s);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct SkewEdges {
  // edges[i] splits (sum of the vertices other than vertices[i]) + K.
  std::array<Edge, 4> edges;
  std::vector<std::uint32_t> seven_simplex;  // the 8 endpoints, sorted
  DivisorClass companion;                     // 3 center + 4K
};

SkewEdges skew_edges_of_uncornered(const ClassCatalog& lines, const InscribedSimplex& s);

// Inverse: four edges pairing up the 8 vertices of a degree-0 7-simplex give
// the lines (D1 - K)/3 - a_i of an uncornered A_3^8(1).
InscribedSimplex uncornered_from_skew_edges(const ClassCatalog& lines, std::span<const std::uint32_t> eight,
                                            std::span<const Edge> edges);

// All ways to split the given even-size vertex list into disjoint pairs.
std::vector<std::vector<Edge>> perfect_matchings(std::span<const std::uint32_t> vertices);

struct A4Decomposition {
  DivisorClass cornered_center;  // A_D
  std::size_t line;              // l_D
  std::size_t corner_line;       // cornering line of A_D; meets l_D once
};

A4Decomposition decompose_A4_center(const ClassCatalog& lines, const DivisorClass& d);

// Per simplex: the unique cornered 4-subset and the remaining vertex.
struct A4Structure {
  std::array<std::uint32_t, 4> cornered_face;
  std::uint32_t apex;
};
A4Structure a4_structure(const ClassCatalog& lines, const InscribedSimplex& s);

// Adjoins G_{l_a}(l_b) for the face omitting vertex `omit` (or G_{l_b}(l_a)
// when `swap`).
InscribedSimplex extend_uncornered_A3_to_A4(const ClassCatalog& lines, const InscribedSimplex& s,
                                            std::size_t omit = 3, bool swap = false);

// {G_l(l_i)} for the cornering line l.
InscribedSimplex gieser_dual(const ClassCatalog& lines, const InscribedSimplex& s);

// D + 3K as three disjoint lines, ascending.
std::array<std::size_t, 3> decompose_A5_center(const ClassCatalog& lines, const SkewLineCatalog& skew3,
                                               const DivisorClass& d);

struct A5Structure {
  // Vertices relabelled so the cornered faces are {1234},{1256},{3456}.
  std::array<std::uint32_t, 6> labeled;
  std::array<std::array<std::uint32_t, 4>, 3> cornered_faces;
  std::array<std::size_t, 3> corner_lines;
};
A5Structure a5_structure(const ClassCatalog& lines, const InscribedSimplex& s);

struct FanoStructure {
  // labeled[i] is the line called l_{i+1}.
  std::array<std::uint32_t, 7> labeled;
  // permutation[i]: position in the sorted vertex list of labeled[i].
  std::array<int, 7> permutation;
  // Blocks and cornered faces as positions 0..6 in `labeled`.
  std::array<std::array<int, 3>, 7> blocks;
  std::array<std::array<int, 4>, 7> cornered_faces;
  // corner_lines[i] corners cornered_faces[i].
  std::array<std::size_t, 7> corner_lines;
};

inline constexpr std::array<std::array<int, 4>, 7> kFanoCorneredFaces{{
    {0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}, {0, 2, 4, 6}, {1, 3, 4, 6}, {0, 3, 5, 6}, {1, 2, 5, 6}}};

FanoStructure fano_structure(const ClassCatalog& lines, const InscribedSimplex& s);

struct FanoExtension {
  std::size_t l8;
  std::size_t l8_alternative;  // the Bertini partner, also extending
  InscribedSimplex a7;
  std::array<std::uint32_t, 4> cornered;  // block + l8
  std::size_t complement_corner_line;
};

// `block` holds three vertex indices of the A_6.
FanoExtension extend_fano_to_A7(const ClassCatalog& lines, const InscribedSimplex& a6,
                                std::array<std::uint32_t, 3> block);

// D/2 + 2K.
DivisorClass decompose_A7_center(const DivisorClass& d);

struct A7Structure {
  DivisorClass ruling;
  // Complementary cornered 4-subsets and their cornering lines.
  std::vector<std::pair<std::array<std::uint32_t, 4>, std::array<std::uint32_t, 4>>> face_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> line_pairs;  // smaller index first, sorted
};
A7Structure a7_structure(const ClassCatalog& lines, const InscribedSimplex& s);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Structure of A_n^r(b) for b > 1.
std::vector<Check> higher_degree_reductions(const ClassCatalog& lines, const ClassCatalog* lower_lines, int n,
                                            int b);

// {l_i, B(l_i)} as antipodal pairs.
std::vector<Edge> inscribed_crosspolytope(const ClassCatalog& lines, const InscribedSimplex& s);

struct Hypercube {
  int m = 0;
  std::vector<std::uint32_t> vertices;  // 2^m lines
  DivisorClass center;
};

// Lines at cube distance k meet with multiplicity k - 1. Returns an empty
// string on success, otherwise the reason.
std::string hypercube_defect(const ClassCatalog& lines, const Hypercube& cube);

Hypercube build_3cube(const ClassCatalog& lines, const InscribedSimplex& a2);
Hypercube build_4cube(const ClassCatalog& lines, const InscribedSimplex& cornered_a3);

struct CubeObstruction {
  std::array<Edge, 4> antipodal;  // (G_{l_a}(l_b), G_{l_b}(l_a)) per face
  std::size_t facets = 0;
  std::size_t uncornered_facets = 0;
};
CubeObstruction check_4cube_obstruction(const ClassCatalog& lines, const InscribedSimplex& uncornered_a3);

// Vectors D of Pic S_8 with D.K = 0 and D^2 = -norm.
std::uint64_t count_norm_vectors(int norm);

}  // namespace gosset
