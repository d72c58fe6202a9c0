#include "gosset/steiner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gosset/clique.hpp"
#include "gosset/errors.hpp"

namespace gosset {

std::string_view steiner_name(SteinerName name) {
  switch (name) {
    case SteinerName::SA2S7: return "SA2S7";
    case SteinerName::SA2S8: return "SA2S8";
    case SteinerName::SB3S6: return "SB3S6";
    case SteinerName::SB3S8: return "SB3S8";
    case SteinerName::SC4S7: return "SC4S7";
  }
  return "";
}

std::optional<SteinerName> parse_steiner_name(std::string_view s) {
  for (auto n : kSteinerNames)
    if (steiner_name(n) == s) return n;
  return std::nullopt;
}

SteinerParams steiner_params(SteinerName name) {
  switch (name) {
    case SteinerName::SA2S7: return {7, 2, 2, 1};
    case SteinerName::SA2S8: return {8, 2, 3, 2};
    case SteinerName::SB3S6: return {6, 3, 1, 1};
    case SteinerName::SB3S8: return {8, 3, 2, 3};
    case SteinerName::SC4S7: return {7, 4, 1, 2};
  }
  throw DomainError("unknown Steiner system");
}

SteinerSystem build_steiner(const ClassCatalog& lines, SteinerName name) {
  const auto p = steiner_params(name);
  if (lines.kind() != ClassKind::Line || lines.rank() != p.r)
    throw DomainError(std::string(steiner_name(name)) + " needs the line catalog of S_" + std::to_string(p.r));
  SteinerSystem sys{name, p.r, p.k, p.c, lines.size(), {}};
  for_each_clique(lines.adjacency_matrix(p.c), static_cast<std::size_t>(p.k),
                  [&](std::span<const std::uint32_t> c) { sys.blocks.emplace_back(c.begin(), c.end()); });
  return sys;
}

DesignReport verify_design(const ClassCatalog& lines, const SteinerSystem& sys, unsigned threads) {
  DesignReport rep;
  const auto k = static_cast<std::size_t>(sys.k);
  if (lines.rank() != sys.r || lines.size() != sys.ground) {
    rep.detail = "catalog does not match the system";
    return rep;
  }
  for (const auto& b : sys.blocks) {
    bool ok = b.size() == k && std::is_sorted(b.begin(), b.end());
    for (std::size_t i = 0; ok && i < b.size(); ++i)
      for (std::size_t j = i + 1; ok && j < b.size(); ++j) ok = b[i] != b[j] && lines.gram(b[i], b[j]) == sys.c;
    if (!ok) {
      rep.counterexample = b;
      rep.detail = "block is not a clique of intersection " + std::to_string(sys.c);
      return rep;
    }
  }
  // Blocks through each determining set, keyed by the sorted (k-1)-subset.
  std::map<std::vector<std::uint32_t>, std::size_t> hits;
  for (const auto& b : sys.blocks)
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::vector<std::uint32_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) sub.push_back(b[i]);
      ++hits[sub];
    }
  struct Bad {
    std::vector<std::uint32_t> set;
    std::size_t count = 0;
  };
  struct Part {
    std::uint64_t seen = 0;
    std::optional<Bad> bad;
  };
  // For k = 2 the determining sets are single lines, so the c-graph (whose
  // 1-cliques are all vertices) gives them too.
  const auto& g = lines.adjacency_matrix(sys.c);
  auto parts = map_partitions<Part>(g.size(), threads, [&](std::size_t v) {
    Part p;
    for_each_clique_from(g, k - 1, static_cast<std::uint32_t>(v), [&](std::span<const std::uint32_t> c) {
      ++p.seen;
      if (p.bad) return;
      std::vector<std::uint32_t> key(c.begin(), c.end());
      auto it = hits.find(key);
      const std::size_t n = it == hits.end() ? 0 : it->second;
      if (n != 1) p.bad = Bad{std::move(key), n};
    });
    return p;
  });
  for (auto& p : parts) {
    rep.determining_sets += p.seen;
    if (p.bad && rep.counterexample.empty()) {
      rep.counterexample = p.bad->set;
      rep.counterexample_blocks = p.bad->count;
    }
  }
  rep.pass = rep.counterexample.empty();
  if (!rep.pass) rep.detail = "determining set lies in " + std::to_string(rep.counterexample_blocks) + " blocks";
  return rep;
}

bool block_sums_constant(const ClassCatalog& lines, const SteinerSystem& sys) {
  const auto target = -static_cast<std::int64_t>(steiner_params(sys.name).sum_multiple) * canonical_class(sys.r);
  for (const auto& b : sys.blocks) {
    auto s = DivisorClass::zero(sys.r);
    for (auto v : b) s += lines[v];
    if (s != target) return false;
  }
  return true;
}

bool blocks_maximal(const ClassCatalog& lines, const SteinerSystem& sys) {
  return count_cliques(lines.adjacency_matrix(sys.c), static_cast<std::size_t>(sys.k + 1)) == 0;
}

bool weyl_invariant(const ClassCatalog& lines, const SteinerSystem& sys) {
  std::set<std::vector<std::uint32_t>> blocks(sys.blocks.begin(), sys.blocks.end());
  const auto model = SurfaceModel::make(sys.r);
  for (const auto& d : model.simple_roots)
    for (const auto& b : sys.blocks) {
      std::vector<std::uint32_t> img;
      for (auto v : b) {
        auto i = lines.find(reflect(d, lines[v]));
        if (!i) return false;
        img.push_back(static_cast<std::uint32_t>(*i));
      }
      std::sort(img.begin(), img.end());
      if (!blocks.count(img)) return false;
    }
  return true;
}

PairCoverReport verify_pair_cover(int points, const std::vector<std::array<int, 3>>& blocks) {
  PairCoverReport rep;
  if (points < 3) {
    rep.detail = "too few points";
    return rep;
  }
  std::vector<std::size_t> cover(static_cast<std::size_t>(points * points), 0);
  for (const auto& b : blocks) {
    for (int x : b)
      if (x < 0 || x >= points) {
        rep.detail = "block point out of range";
        return rep;
      }
    if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) {
      rep.detail = "block with repeated point";
      return rep;
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) ++cover[static_cast<std::size_t>(b[i] * points + b[j])];
  }
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) {
      const auto n = cover[static_cast<std::size_t>(i * points + j)];
      if (n != 1) {
        rep.witness = std::array<int, 2>{i, j};
        rep.witness_count = n;
        rep.detail = "pair {" + std::to_string(i) + "," + std::to_string(j) + "} lies in " + std::to_string(n) +
                     " blocks";
        return rep;
      }
    }
  if (blocks.size() != steiner_triple_block_count(static_cast<std::uint64_t>(points))) {
    rep.detail = "block count differs from n(n-1)/6";
    return rep;
  }
  rep.pass = true;
  return rep;
}

PairCoverReport verify_fano_steiner(const std::array<std::array<int, 3>, 7>& blocks) {
  return verify_pair_cover(7, {blocks.begin(), blocks.end()});
}

std::uint64_t steiner_triple_block_count(std::uint64_t n) { return n * (n - 1) / 6; }

RootTripleReport root_triples(const ClassCatalog& roots) {
  if (roots.kind() != ClassKind::Root) throw DomainError("root triples need the root catalog");
  RootTripleReport rep{0, true};
  for_each_clique(roots.adjacency_matrix(1), 3, [&](std::span<const std::uint32_t> c) {
    ++rep.triples;
    if (roots[c[0]] + roots[c[1]] + roots[c[2]] != DivisorClass::zero(roots.rank())) rep.all_sum_zero = false;
  });
  return rep;
}

nlohmann::json to_json(const SteinerSystem& sys) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : sys.blocks) blocks.push_back(b);
  return {{"name", std::string(steiner_name(sys.name))}, {"k", sys.k}, {"c", sys.c}, {"blocks", std::move(blocks)}};
}

}  // namespace gosset
