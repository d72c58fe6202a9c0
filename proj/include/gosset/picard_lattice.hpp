#pragma once

// Picard lattice of a del Pezzo surface S_r: Z h + Z e_1 + ... + Z e_r with
// h.h = 1, e_i.e_j = -delta_ij and h.e_i = 0.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gosset {

inline constexpr int kMinRank = 3;
inline constexpr int kMaxRank = 8;

void require_rank(int r);

// Integer divisor class. Coefficient 0 is the h coefficient; coefficients
// 1..r are the raw coefficients of e_1..e_r (2h - e1 - e2 is [2, -1, -1, 0..]).
class DivisorClass {
 public:
  using Coeffs = std::array<std::int64_t, kMaxRank + 1>;

  DivisorClass() = default;
  DivisorClass(int rank, std::span<const std::int64_t> coeffs);
  DivisorClass(int rank, std::initializer_list<std::int64_t> coeffs);

  static DivisorClass zero(int rank);
  static DivisorClass h(int rank);
  // e_i for 1 <= i <= rank.
  static DivisorClass e(int rank, int i);

  int rank() const { return rank_; }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coeffs() const {
    return {c_.data(), static_cast<std::size_t>(rank_ + 1)};
  }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass operator-() const;
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& d);

  // Same rank, lexicographic on coefficients. Classes of different rank
  // order by rank first.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  // Human-readable form, e.g. "6h-3e1-2e2-2e3".
  std::string to_string() const;

 private:
  int rank_ = 0;
  Coeffs c_{};
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const noexcept;
};

// a0 b0 - sum a_i b_i. Throws DomainError on rank mismatch.
std::int64_t pairing(const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DivisorClass& d) { return pairing(d, d); }

DivisorClass canonical_class(int r);

// -D.K; the grading used for every family of classes.
std::int64_t anticanonical_degree(const DivisorClass& d);

bool is_root(const DivisorClass& d);

// sigma_d(D) = D + (D.d) d. Throws DomainError unless d.d = -2 and d.K = 0.
DivisorClass reflect(const DivisorClass& root, const DivisorClass& d);
// Same formula without the root check; for hot loops over known roots.
DivisorClass reflect_unchecked(const DivisorClass& root, const DivisorClass& d);

// d / k when every coefficient is divisible by k.
std::optional<DivisorClass> divide_exact(const DivisorClass& d, std::int64_t k);
// As divide_exact, but a remainder raises InvariantError naming `what`.
DivisorClass exact_quotient(const DivisorClass& d, std::int64_t k, std::string_view what);

struct SurfaceModel {
  int rank = 0;
  DivisorClass canonical;
  // d0 = h - e1 - e2 - e3, d_i = e_i - e_{i+1}.
  std::vector<DivisorClass> simple_roots;
  int degree = 0;

  static SurfaceModel make(int r);
};

void to_json(nlohmann::json& j, const DivisorClass& d);
void from_json(const nlohmann::json& j, DivisorClass& d);

}  // namespace gosset
