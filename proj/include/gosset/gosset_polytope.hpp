#pragma once

// The Gosset polytope (r-4)_21 realized on the line catalog of S_r.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gosset/class_catalog.hpp"
#include "gosset/clique.hpp"

namespace gosset {

// Lines as vertices, an edge whenever the intersection equals `degree`.
// Degree 0 is the 1-skeleton of the polytope.
struct DegreeGraph {
  int r = 0;
  int degree = 0;
  BitMatrix adjacency;

  std::size_t size() const { return adjacency.size(); }
  std::uint64_t edge_count() const;
};

DegreeGraph build_degree_graph(const ClassCatalog& lines, int v);

// Number of m-simplexes, i.e. (m+1)-cliques.
std::uint64_t count_simplexes(const DegreeGraph& g, int m, unsigned threads = 1);

template <class Fn>
void for_each_simplex(const DegreeGraph& g, int m, Fn&& fn) {
  for_each_clique(g.adjacency, static_cast<std::size_t>(m + 1), fn);
}

struct Crosspolytope {
  std::size_t ruling;  // index into the ruling catalog
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::vector<Crosspolytope> enumerate_crosspolytopes(const ClassCatalog& lines, const ClassCatalog& rulings);

struct SubpolytopeCell {
  std::string polytope;  // "beta", "vertex", "alpha1", ...
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool pass() const { return expected == computed; }
};

struct SubpolytopeReport {
  int r = 0;
  std::vector<SubpolytopeCell> cells;

  bool pass() const;
  // Columns r,polytope,expected,computed,pass; no header.
  void write_csv_rows(std::ostream& out) const;
};

inline constexpr const char* kSubpolytopeCsvHeader = "r,polytope,expected,computed,pass";

// Published counts for (r-4)_21: beta_{r-1}, vertices, then alpha_1 ...
std::vector<std::uint64_t> expected_subpolytope_row(int r);

SubpolytopeReport verify_subpolytope_table(int r, unsigned threads = 1);

}  // namespace gosset
