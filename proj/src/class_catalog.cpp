#include "gosset/class_catalog.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <string>

#include "gosset/clique.hpp"
#include "gosset/errors.hpp"

namespace gosset {

std::string_view kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::Line: return "lines";
    case ClassKind::Root: return "roots";
    case ClassKind::Ruling: return "rulings";
    case ClassKind::ExceptionalSystem: return "exceptional";
  }
  return "?";
}

std::optional<ClassKind> parse_kind(std::string_view name) {
  if (name == "lines" || name == "line") return ClassKind::Line;
  if (name == "roots" || name == "root") return ClassKind::Root;
  if (name == "rulings" || name == "ruling") return ClassKind::Ruling;
  if (name == "exceptional" || name == "exceptional-systems" || name == "exceptional_systems")
    return ClassKind::ExceptionalSystem;
  return std::nullopt;
}

bool satisfies(ClassKind kind, const DivisorClass& d) {
  const auto sig = signature(kind);
  return self_intersection(d) == sig.self_intersection &&
         pairing(d, canonical_class(d.rank())) == sig.canonical_pairing;
}

bool is_line(const DivisorClass& d) { return satisfies(ClassKind::Line, d); }

ClassCatalog::ClassCatalog(ClassKind kind, int r, std::vector<DivisorClass> classes)
    : kind_(kind), rank_(r), classes_(std::move(classes)) {
  require_rank(r);
  for (const auto& d : classes_) {
    if (d.rank() != r) throw DomainError("class " + d.to_string() + " has wrong rank");
    if (!satisfies(kind, d))
      throw DomainError("class " + d.to_string() + " is not in " + std::string(kind_name(kind)));
  }
  std::sort(classes_.begin(), classes_.end());
  if (std::adjacent_find(classes_.begin(), classes_.end()) != classes_.end())
    throw DomainError("duplicate class in " + std::string(kind_name(kind)) + " catalog");

  index_.reserve(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i], i);

  const std::size_t n = classes_.size();
  if (n > kDenseLimit) return;
  gram_.resize(n * n);
  for (auto& m : adjacency_) m = BitMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto p = pairing(classes_[i], classes_[j]);
      gram_[i * n + j] = gram_[j * n + i] = static_cast<std::int32_t>(p);
      if (i != j && p >= kMinAdjacency && p <= kMaxAdjacency) {
        auto& m = adjacency_[static_cast<std::size_t>(p - kMinAdjacency)];
        m.set(i, j);
        m.set(j, i);
      }
    }
  }
}

std::optional<std::size_t> ClassCatalog::find(const DivisorClass& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ClassCatalog::index_of(const DivisorClass& d) const {
  if (auto i = find(d)) return *i;
  throw DomainError(d.to_string() + " is not in the " + std::string(kind_name(kind_)) + " catalog");
}

std::int64_t ClassCatalog::gram(std::size_t i, std::size_t j) const {
  if (!gram_.empty()) return gram_[i * classes_.size() + j];
  return pairing(classes_[i], classes_[j]);
}

const BitMatrix& ClassCatalog::adjacency_matrix(int v) const {
  if (gram_.empty()) throw DomainError("adjacency requires a catalog of at most 2160 classes");
  if (v < kMinAdjacency || v > kMaxAdjacency)
    throw DomainError("adjacency value " + std::to_string(v) + " outside -1..3");
  return adjacency_[static_cast<std::size_t>(v - kMinAdjacency)];
}

std::span<const std::uint64_t> ClassCatalog::adjacency(int v, std::size_t i) const {
  return adjacency_matrix(v).row(i);
}

std::vector<DivisorClass> weyl_orbit(std::span<const DivisorClass> seeds, const SurfaceModel& model) {
  std::vector<DivisorClass> out;
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> seen;
  std::deque<std::size_t> queue;
  auto visit = [&](const DivisorClass& d) {
    if (seen.emplace(d, out.size()).second) {
      queue.push_back(out.size());
      out.push_back(d);
    }
  };
  for (const auto& s : seeds) visit(s);
  while (!queue.empty()) {
    const auto cur = out[queue.front()];
    queue.pop_front();
    for (const auto& root : model.simple_roots) visit(reflect_unchecked(root, cur));
  }
  return out;
}

namespace {

std::vector<DivisorClass> seeds_for(ClassKind kind, const SurfaceModel& m) {
  const int r = m.rank;
  const auto h = DivisorClass::h(r);
  switch (kind) {
    case ClassKind::Line: return {DivisorClass::e(r, r)};
    // Every root is conjugate to a simple root; for r = 3 the root system
    // A2 x A1 has two orbits.
    case ClassKind::Root: return m.simple_roots;
    case ClassKind::Ruling: return {h - DivisorClass::e(r, 1)};
    case ClassKind::ExceptionalSystem:
      // On S_8 the root orbit -3K + 2d is disjoint from the orbit of h.
      if (r == 8) return {h, -3 * m.canonical + 2 * m.simple_roots[0]};
      return {h};
  }
  return {};
}

}  // namespace

ClassCatalog enumerate(ClassKind kind, int r) {
  const auto model = SurfaceModel::make(r);
  const auto seeds = seeds_for(kind, model);
  return ClassCatalog(kind, r, weyl_orbit(seeds, model));
}

ClassCatalog enumerate_lines(int r) { return enumerate(ClassKind::Line, r); }
ClassCatalog enumerate_roots(int r) { return enumerate(ClassKind::Root, r); }
ClassCatalog enumerate_rulings(int r) { return enumerate(ClassKind::Ruling, r); }
ClassCatalog enumerate_exceptional_systems(int r) { return enumerate(ClassKind::ExceptionalSystem, r); }

ExceptionalOrbit classify_exceptional_system(const DivisorClass& d) {
  if (d.rank() != 8 || !satisfies(ClassKind::ExceptionalSystem, d))
    throw DomainError(d.to_string() + " is not an exceptional system on S_8");
  const auto k = canonical_class(8);
  if (auto half = divide_exact(d + 3 * k, 2); half && is_root(*half)) return RootOrbit{*half};
  // 3D + K has D^2 = -8 and D.K = -8; membership in the skew 8-line set is
  // checked by the caller against the disjoint-line catalog.
  return SkewOrbit{3 * d + k};
}

SkewLineCatalog::SkewLineCatalog(int r, int a, std::vector<Entry> entries)
    : r_(r), a_(a), entries_(std::move(entries)) {
  by_sum_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!by_sum_.emplace(entries_[i].sum, i).second) unique_ = false;
}

const SkewLineCatalog::Entry* SkewLineCatalog::find(const DivisorClass& sum) const {
  auto it = by_sum_.find(sum);
  return it == by_sum_.end() ? nullptr : &entries_[it->second];
}

SkewLineCatalog skew_a_lines(const ClassCatalog& lines, int a) {
  if (lines.kind() != ClassKind::Line) throw DomainError("skew a-lines need the line catalog");
  if (a < 1 || a > lines.rank())
    throw DomainError("a = " + std::to_string(a) + " outside 1.." + std::to_string(lines.rank()));
  std::vector<SkewLineCatalog::Entry> entries;
  for_each_clique(lines.adjacency_matrix(0), a, [&](std::span<const std::uint32_t> clique) {
    SkewLineCatalog::Entry e{DivisorClass::zero(lines.rank()), {}};
    for (auto v : clique) {
      e.sum += lines[v];
      e.witness.push_back(static_cast<std::uint16_t>(v));
    }
    entries.push_back(std::move(e));
  });
  return SkewLineCatalog(lines.rank(), a, std::move(entries));
}

Bitset neighborhood(const ClassCatalog& lines, std::size_t l, int k) {
  if (lines.kind() != ClassKind::Line) throw DomainError("neighborhoods need the line catalog");
  if (k == -1) {
    Bitset self(lines.size());
    self.set(l);
    return self;
  }
  if (k < ClassCatalog::kMinAdjacency || k > ClassCatalog::kMaxAdjacency) return Bitset(lines.size());
  return Bitset(lines.size(), lines.adjacency(k, l));
}

DivisorClass gieser(const DivisorClass& line) {
  if (line.rank() != 7 || !is_line(line)) throw DomainError(line.to_string() + " is not a line on S_7");
  return -(canonical_class(7) + line);
}

DivisorClass bertini(const DivisorClass& line) {
  if (line.rank() != 8 || !is_line(line)) throw DomainError(line.to_string() + " is not a line on S_8");
  return -(2 * canonical_class(8) + line);
}

DivisorClass gieser_at(const DivisorClass& l, const DivisorClass& lp) {
  if (l.rank() != 8 || !is_line(l) || !is_line(lp))
    throw DomainError("Gieser transform at a line needs two lines on S_8");
  if (pairing(l, lp) != 0)
    throw DomainError(l.to_string() + " and " + lp.to_string() + " are not disjoint");
  return l - canonical_class(8) - lp;
}

DivisorClass apply_word(const SurfaceModel& model, std::span<const int> word, DivisorClass d) {
  for (int s : word) d = reflect_unchecked(model.simple_roots[static_cast<std::size_t>(s)], d);
  return d;
}

DivisorClass drop_last(const DivisorClass& d) {
  const int r = d.rank();
  if (d[r] != 0) throw DomainError(d.to_string() + " has a nonzero e_" + std::to_string(r) + " coefficient");
  return DivisorClass(r - 1, d.coeffs().first(static_cast<std::size_t>(r)));
}

BlowDown blow_down_basis(const ClassCatalog& lines, const ClassCatalog& lower_lines, std::size_t l) {
  const int r = lines.rank();
  if (lines.kind() != ClassKind::Line || lower_lines.kind() != ClassKind::Line || lower_lines.rank() != r - 1)
    throw DomainError("blow-down needs the line catalogs of S_r and S_{r-1}");
  const auto model = SurfaceModel::make(r);
  const auto target = DivisorClass::e(r, r);

  // Breadth-first tree of the line orbit rooted at e_r; walking from l back
  // to the root collects a word taking l to e_r.
  struct Node {
    std::size_t parent;
    int reflection;
  };
  std::unordered_map<DivisorClass, Node, DivisorClassHash> tree;
  std::vector<DivisorClass> order{target};
  tree.emplace(target, Node{0, -1});
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t s = 0; s < model.simple_roots.size(); ++s) {
      auto next = reflect_unchecked(model.simple_roots[s], order[head]);
      if (tree.emplace(next, Node{head, static_cast<int>(s)}).second) order.push_back(next);
    }
  }

  BlowDown out;
  auto it = tree.find(lines[l]);
  if (it == tree.end()) throw InvariantError("line " + lines[l].to_string() + " not reached from e_r");
  while (it->second.reflection >= 0) {
    out.word.push_back(it->second.reflection);
    it = tree.find(order[it->second.parent]);
  }
  if (apply_word(model, out.word, lines[l]) != target)
    throw InvariantError("Weyl word does not take " + lines[l].to_string() + " to e_r");

  for_each_bit(lines.adjacency(0, l), [&](std::size_t j) {
    const auto moved = apply_word(model, out.word, lines[j]);
    const auto down = drop_last(moved);
    out.image.emplace_back(j, lower_lines.index_of(down));
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ruling_vertices(const ClassCatalog& lines,
                                                                 const DivisorClass& ruling) {
  if (!satisfies(ClassKind::Ruling, ruling)) throw DomainError(ruling.to_string() + " is not a ruling");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (pairing(ruling, lines[i]) != 0) continue;
    const auto partner = lines.find(ruling - lines[i]);
    if (!partner) throw InvariantError("f - l is not a line for f = " + ruling.to_string());
    if (i < *partner) pairs.emplace_back(i, *partner);
  }
  return pairs;
}

void write_catalog(std::ostream& out, const ClassCatalog& catalog) {
  nlohmann::json header{{"kind", std::string(kind_name(catalog.kind()))},
                        {"r", catalog.rank()},
                        {"count", catalog.size()}};
  out << header.dump() << '\n';
  for (const auto& d : catalog.classes()) out << nlohmann::json(d).dump() << '\n';
  if (!out) throw IoError("failed writing catalog");
}

ClassCatalog read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty catalog file");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad catalog header: ") + e.what());
  }
  const auto kind = parse_kind(header.value("kind", std::string{}));
  if (!kind) throw ParseError("unknown catalog kind in header");
  const int r = header.value("r", 0);
  const auto count = header.value("count", std::size_t{0});
  std::vector<DivisorClass> classes;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      classes.push_back(nlohmann::json::parse(line).get<DivisorClass>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad catalog record: ") + e.what());
    }
  }
  if (classes.size() != count)
    throw ParseError("catalog header says " + std::to_string(count) + " classes, file has " +
                     std::to_string(classes.size()));
  // The constructor re-checks the defining equations of every record.
  return ClassCatalog(*kind, r, std::move(classes));
}

}  // namespace gosset
