#pragma once

// Table and theorem verification over the catalogs of S_3 ... S_8.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gosset/class_catalog.hpp"
#include "gosset/inscribed.hpp"

namespace gosset {

enum class VerifyScope { Tables, Theorems, Steiner, All };

std::string_view scope_name(VerifyScope s);
std::optional<VerifyScope> parse_scope(std::string_view s);

struct VerifyConfig {
  int r = 0;  // 0 runs every rank
  std::size_t sample = 200;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::function<void(const std::string&)> progress;
};

// One row of a count table, in the CSV column schema.
struct TableCell {
  int r = 0;
  std::string polytope;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool pass() const { return expected == computed; }
};

struct VerifyReport {
  VerifyScope scope = VerifyScope::All;
  int r = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::vector<TableCell> cells;
  std::vector<Check> checks;

  bool pass() const;
  std::vector<std::string> failures() const;
  nlohmann::json to_json() const;
  // Header plus one row per table cell.
  void write_csv(std::ostream& out) const;
};

std::uint64_t expected_catalog_count(ClassKind kind, int r);
// Published center counts of A_n^r(b); nullopt when the tables have no entry.
std::optional<std::uint64_t> expected_center_count(int r, int n, int b);
// Vectors orthogonal to K of norm 10, 12, 14, 16.
std::uint64_t expected_norm_count(int norm);

// Name of a center-table cell, e.g. "A3(1)".
std::string center_cell_name(int n, int b);

void verify_tables(int r, const VerifyConfig& cfg, VerifyReport& out);
void verify_theorems(int r, const VerifyConfig& cfg, VerifyReport& out);
void verify_steiner(const VerifyConfig& cfg, VerifyReport& out);

// Runs the scope for cfg.r, or for every rank when cfg.r is 0.
VerifyReport run_verify(VerifyScope scope, const VerifyConfig& cfg);

}  // namespace gosset
