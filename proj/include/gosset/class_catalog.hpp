#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gosset/bitset.hpp"
#include "gosset/picard_lattice.hpp"

namespace gosset {

enum class ClassKind { Line, Root, Ruling, ExceptionalSystem };

// Defining pair (D.D, D.K) of each family.
struct KindSignature {
  int self_intersection;
  int canonical_pairing;
};

constexpr KindSignature signature(ClassKind kind) {
  switch (kind) {
    case ClassKind::Line: return {-1, -1};
    case ClassKind::Root: return {-2, 0};
    case ClassKind::Ruling: return {0, -2};
    case ClassKind::ExceptionalSystem: return {1, -3};
  }
  return {0, 0};
}

std::string_view kind_name(ClassKind kind);
std::optional<ClassKind> parse_kind(std::string_view name);
bool satisfies(ClassKind kind, const DivisorClass& d);

// Canonically sorted, duplicate-free list of all classes of one kind.
class ClassCatalog {
 public:
  // Catalogs up to this size keep a dense Gram matrix and per-value
  // adjacency bitsets; larger ones compute pairings on demand.
  static constexpr std::size_t kDenseLimit = 2160;
  static constexpr int kMinAdjacency = -1;
  static constexpr int kMaxAdjacency = 3;

  // Validates each class against the kind's defining pair and sorts.
  ClassCatalog(ClassKind kind, int r, std::vector<DivisorClass> classes);

  ClassKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::size_t size() const { return classes_.size(); }
  const DivisorClass& operator[](std::size_t i) const { return classes_[i]; }
  std::span<const DivisorClass> classes() const { return classes_; }

  std::optional<std::size_t> find(const DivisorClass& d) const;
  // Index of d; throws DomainError when d is not in the catalog.
  std::size_t index_of(const DivisorClass& d) const;

  bool has_dense_gram() const { return !gram_.empty(); }
  std::int64_t gram(std::size_t i, std::size_t j) const;
  // Partners of class i with pairing exactly v (requires a dense catalog).
  std::span<const std::uint64_t> adjacency(int v, std::size_t i) const;
  const BitMatrix& adjacency_matrix(int v) const;

 private:
  ClassKind kind_;
  int rank_;
  std::vector<DivisorClass> classes_;
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> index_;
  std::vector<std::int32_t> gram_;
  std::array<BitMatrix, kMaxAdjacency - kMinAdjacency + 1> adjacency_;
};

// Breadth-first closure of the seeds under the simple reflections. Order of
// the result is discovery order.
std::vector<DivisorClass> weyl_orbit(std::span<const DivisorClass> seeds, const SurfaceModel& model);

ClassCatalog enumerate(ClassKind kind, int r);
ClassCatalog enumerate_lines(int r);
ClassCatalog enumerate_roots(int r);
ClassCatalog enumerate_rulings(int r);
ClassCatalog enumerate_exceptional_systems(int r);

// An exceptional system D on S_8 is either -3K + 2d for a root d, or
// satisfies 3D + K = a skew 8-line.
struct RootOrbit {
  DivisorClass root;
};
struct SkewOrbit {
  DivisorClass skew_eight_line;
};
using ExceptionalOrbit = std::variant<RootOrbit, SkewOrbit>;
ExceptionalOrbit classify_exceptional_system(const DivisorClass& d);

// Sums of a pairwise disjoint lines together with the lines themselves
// (as indices into the line catalog).
class SkewLineCatalog {
 public:
  struct Entry {
    DivisorClass sum;
    std::vector<std::uint16_t> witness;
  };

  SkewLineCatalog(int r, int a, std::vector<Entry> entries);

  int rank() const { return r_; }
  int a() const { return a_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Entry> entries() const { return entries_; }
  // True when no two witnesses share a sum.
  bool unique_witnesses() const { return unique_; }
  std::size_t distinct_sums() const { return by_sum_.size(); }
  // Entry with this sum (the first one when witnesses are not unique).
  const Entry* find(const DivisorClass& sum) const;

 private:
  int r_;
  int a_;
  std::vector<Entry> entries_;
  std::unordered_map<DivisorClass, std::size_t, DivisorClassHash> by_sum_;
  bool unique_ = true;
};

SkewLineCatalog skew_a_lines(const ClassCatalog& lines, int a);

// N_k(l): lines l' with l'.l = k.
Bitset neighborhood(const ClassCatalog& lines, std::size_t l, int k);

// G(l) = -(K + l) on S_7.
DivisorClass gieser(const DivisorClass& line);
// B(l) = -(2K + l) on S_8.
DivisorClass bertini(const DivisorClass& line);
// G_l(l') = -(K - l) - l' for disjoint lines l, l' on S_8.
DivisorClass gieser_at(const DivisorClass& l, const DivisorClass& lp);

bool is_line(const DivisorClass& d);

// Word in the simple reflections (indices into SurfaceModel::simple_roots)
// taking a line to e_r, with the induced bijection N_0(l, S_r) -> L_{r-1}.
struct BlowDown {
  std::vector<int> word;
  // Pairs (index in L_r, index in L_{r-1}); one per line of N_0(l).
  std::vector<std::pair<std::size_t, std::size_t>> image;
};

// Applies the reflections of `word` left to right.
DivisorClass apply_word(const SurfaceModel& model, std::span<const int> word, DivisorClass d);
// Drops the last coordinate of a class with zero e_r coefficient.
DivisorClass drop_last(const DivisorClass& d);

BlowDown blow_down_basis(const ClassCatalog& lines, const ClassCatalog& lower_lines, std::size_t l);

// The 2(r-1) lines l with f.l = 0 (equivalently f - l a line), as
// (r-1) bipolar pairs (l, f - l) with the smaller index first.
std::vector<std::pair<std::size_t, std::size_t>> ruling_vertices(const ClassCatalog& lines,
                                                                 const DivisorClass& ruling);

// Catalog cache: a header record {"kind":..., "r":..., "count":...} followed
// by one DivisorClass JSON object per line.
void write_catalog(std::ostream& out, const ClassCatalog& catalog);
ClassCatalog read_catalog(std::istream& in);

}  // namespace gosset
