#pragma once

// Block systems on line sets: blocks are k-cliques of lines meeting pairwise
// in c, and every (k-1)-set with pairwise intersection c lies in one block.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gosset/class_catalog.hpp"

namespace gosset {

enum class SteinerName { SA2S7, SA2S8, SB3S6, SB3S8, SC4S7 };

inline constexpr std::array<SteinerName, 5> kSteinerNames{SteinerName::SA2S7, SteinerName::SA2S8,
                                                          SteinerName::SB3S6, SteinerName::SB3S8,
                                                          SteinerName::SC4S7};

std::string_view steiner_name(SteinerName name);
std::optional<SteinerName> parse_steiner_name(std::string_view s);

struct SteinerParams {
  int r;
  int k;
  int c;
  int sum_multiple;  // every block sums to -sum_multiple K
};
SteinerParams steiner_params(SteinerName name);

struct SteinerSystem {
  SteinerName name;
  int r = 0;
  int k = 0;
  int c = 0;
  std::size_t ground = 0;  // lines 0..ground-1
  std::vector<std::vector<std::uint32_t>> blocks;  // sorted tuples, sorted list
};

// `lines` must be the line catalog of rank steiner_params(name).r.
SteinerSystem build_steiner(const ClassCatalog& lines, SteinerName name);

struct DesignReport {
  bool pass = false;
  std::uint64_t determining_sets = 0;
  // First determining set not covered exactly once, with its block count.
  std::vector<std::uint32_t> counterexample;
  std::size_t counterexample_blocks = 0;
  std::string detail;
};

// Checks blocks are c-cliques and that each (k-1)-set of ground lines with
// pairwise intersection c (any single line when k = 2) lies in exactly one
// block.
DesignReport verify_design(const ClassCatalog& lines, const SteinerSystem& sys, unsigned threads = 1);

// Every block sums to -m K.
bool block_sums_constant(const ClassCatalog& lines, const SteinerSystem& sys);
// No (k+1)-clique exists in the c-graph, so blocks are maximal.
bool blocks_maximal(const ClassCatalog& lines, const SteinerSystem& sys);
// Every simple reflection maps blocks onto blocks.
bool weyl_invariant(const ClassCatalog& lines, const SteinerSystem& sys);

struct PairCoverReport {
  bool pass = false;
  std::optional<std::array<int, 2>> witness;  // pair covered 0 or 2+ times
  std::size_t witness_count = 0;
  std::string detail;
};

// S(2,3,n) check on points 0..n-1.
PairCoverReport verify_pair_cover(int points, const std::vector<std::array<int, 3>>& blocks);
PairCoverReport verify_fano_steiner(const std::array<std::array<int, 3>, 7>& blocks);

// n(n-1)/6.
std::uint64_t steiner_triple_block_count(std::uint64_t n);

struct RootTripleReport {
  std::uint64_t triples = 0;
  bool all_sum_zero = false;
};
// Triples of roots with pairwise product 1.
RootTripleReport root_triples(const ClassCatalog& roots);

nlohmann::json to_json(const SteinerSystem& sys);

}  // namespace gosset
