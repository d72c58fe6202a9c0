#include "gosset/gosset_polytope.hpp"

#include <ostream>

#include "gosset/errors.hpp"

namespace gosset {

std::uint64_t DegreeGraph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < adjacency.size(); ++i) twice += adjacency.degree(i);
  return twice / 2;
}

DegreeGraph build_degree_graph(const ClassCatalog& lines, int v) {
  if (lines.kind() != ClassKind::Line) throw DomainError("degree graphs are built on lines");
  if (v < 0 || v > 3) throw DomainError("edge degree " + std::to_string(v) + " outside 0..3");
  return DegreeGraph{lines.rank(), v, lines.adjacency_matrix(v)};
}

std::uint64_t count_simplexes(const DegreeGraph& g, int m, unsigned threads) {
  if (m < 0 || m > g.r - 1) throw DomainError("simplex dimension " + std::to_string(m) + " outside 0..r-1");
  return count_cliques(g.adjacency, static_cast<std::size_t>(m + 1), threads);
}

std::vector<Crosspolytope> enumerate_crosspolytopes(const ClassCatalog& lines, const ClassCatalog& rulings) {
  if (rulings.kind() != ClassKind::Ruling || rulings.rank() != lines.rank())
    throw DomainError("crosspolytopes need the ruling catalog of the same rank");
  std::vector<Crosspolytope> out;
  out.reserve(rulings.size());
  for (std::size_t f = 0; f < rulings.size(); ++f) {
    auto pairs = ruling_vertices(lines, rulings[f]);
    if (pairs.size() != static_cast<std::size_t>(lines.rank() - 1))
      throw InvariantError("ruling " + rulings[f].to_string() + " has " + std::to_string(pairs.size()) +
                           " bipolar pairs");
    out.push_back({f, std::move(pairs)});
  }
  return out;
}

bool SubpolytopeReport::pass() const {
  for (const auto& c : cells)
    if (!c.pass()) return false;
  return true;
}

void SubpolytopeReport::write_csv_rows(std::ostream& out) const {
  for (const auto& c : cells)
    out << r << ',' << c.polytope << ',' << c.expected << ',' << c.computed << ',' << (c.pass() ? "true" : "false")
        << '\n';
}

std::vector<std::uint64_t> expected_subpolytope_row(int r) {
  switch (r) {
    case 3: return {3, 6, 9, 2};
    case 4: return {5, 10, 30, 30, 5};
    case 5: return {10, 16, 80, 160, 120, 16};
    case 6: return {27, 27, 216, 720, 1080, 648, 72};
    case 7: return {126, 56, 756, 4032, 10080, 12096, 6048, 576};
    case 8: return {2160, 240, 6720, 60480, 241920, 483840, 483840, 207360, 17280};
  }
  throw DomainError("rank " + std::to_string(r) + " outside 3..8");
}

SubpolytopeReport verify_subpolytope_table(int r, unsigned threads) {
  const auto expected = expected_subpolytope_row(r);
  const auto lines = enumerate_lines(r);
  const auto rulings = enumerate_rulings(r);
  const auto crosses = enumerate_crosspolytopes(lines, rulings);
  const auto g = build_degree_graph(lines, 0);

  SubpolytopeReport report{r, {}};
  report.cells.push_back({"beta" + std::to_string(r - 1), expected[0], crosses.size()});
  report.cells.push_back({"vertex", expected[1], lines.size()});
  for (std::size_t m = 1; m + 1 < expected.size(); ++m)
    report.cells.push_back({"alpha" + std::to_string(m), expected[m + 1],
                            count_simplexes(g, static_cast<int>(m), threads)});
  return report;
}

}  // namespace gosset
