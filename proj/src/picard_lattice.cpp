#include "gosset/picard_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "gosset/errors.hpp"

namespace gosset {

namespace {

#ifndef NDEBUG
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InvariantError("divisor coefficient overflow");
  return out;
}
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvariantError("divisor coefficient overflow");
  return out;
}
#else
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) { return a + b; }
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) { return a * b; }
#endif

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
}

}  // namespace

void require_rank(int r) {
  if (r < kMinRank || r > kMaxRank)
    throw DomainError("rank " + std::to_string(r) + " outside 3..8");
}

DivisorClass::DivisorClass(int rank, std::span<const std::int64_t> coeffs) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw DomainError("rank " + std::to_string(rank) + " outside 0..8");
  if (coeffs.size() != static_cast<std::size_t>(rank + 1))
    throw DomainError("expected " + std::to_string(rank + 1) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

DivisorClass::DivisorClass(int rank, std::initializer_list<std::int64_t> coeffs)
    : DivisorClass(rank, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

DivisorClass DivisorClass::zero(int rank) {
  DivisorClass d;
  if (rank < 0 || rank > kMaxRank) throw DomainError("rank " + std::to_string(rank) + " outside 0..8");
  d.rank_ = rank;
  return d;
}

DivisorClass DivisorClass::h(int rank) {
  auto d = zero(rank);
  d.c_[0] = 1;
  return d;
}

DivisorClass DivisorClass::e(int rank, int i) {
  if (i < 1 || i > rank) throw DomainError("e_" + std::to_string(i) + " not in rank " + std::to_string(rank));
  auto d = zero(rank);
  d.c_[static_cast<std::size_t>(i)] = 1;
  return d;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same_rank(*this, o);
  for (int i = 0; i <= rank_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same_rank(*this, o);
  for (int i = 0; i <= rank_; ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass d = *this;
  for (int i = 0; i <= rank_; ++i) d.c_[i] = -d.c_[i];
  return d;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& d) {
  DivisorClass out = d;
  for (int i = 0; i <= d.rank_; ++i) out.c_[i] = checked_mul(k, d.c_[i]);
  return out;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (int i = 0; i <= a.rank_; ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (c != 1 && c != -1) out << (c < 0 ? -c : c);
    out << sym;
    first = false;
  };
  term(c_[0], "h");
  for (int i = 1; i <= rank_; ++i) term(c_[i], "e" + std::to_string(i));
  if (first) out << '0';
  return out.str();
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(d.rank());
  for (auto c : d.coeffs()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::int64_t pairing(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  std::int64_t s = checked_mul(a[0], b[0]);
  for (int i = 1; i <= a.rank(); ++i) s = checked_add(s, -checked_mul(a[i], b[i]));
  return s;
}

DivisorClass canonical_class(int r) {
  std::array<std::int64_t, kMaxRank + 1> c{};
  c[0] = -3;
  for (int i = 1; i <= r; ++i) c[static_cast<std::size_t>(i)] = 1;
  return DivisorClass(r, std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(r + 1)));
}

std::int64_t anticanonical_degree(const DivisorClass& d) {
  return -pairing(d, canonical_class(d.rank()));
}

bool is_root(const DivisorClass& d) {
  return pairing(d, d) == -2 && anticanonical_degree(d) == 0;
}

DivisorClass reflect_unchecked(const DivisorClass& root, const DivisorClass& d) {
  return d + pairing(d, root) * root;
}

DivisorClass reflect(const DivisorClass& root, const DivisorClass& d) {
  if (!is_root(root)) throw DomainError("reflection vector " + root.to_string() + " is not a root");
  return reflect_unchecked(root, d);
}

std::optional<DivisorClass> divide_exact(const DivisorClass& d, std::int64_t k) {
  if (k == 0) throw DomainError("division by zero");
  std::array<std::int64_t, kMaxRank + 1> c{};
  for (int i = 0; i <= d.rank(); ++i) {
    if (d[i] % k != 0) return std::nullopt;
    c[static_cast<std::size_t>(i)] = d[i] / k;
  }
  return DivisorClass(d.rank(), std::span<const std::int64_t>(c.data(), static_cast<std::size_t>(d.rank() + 1)));
}

DivisorClass exact_quotient(const DivisorClass& d, std::int64_t k, std::string_view what) {
  auto q = divide_exact(d, k);
  if (!q)
    throw InvariantError(std::string(what) + ": " + d.to_string() + " is not divisible by " +
                         std::to_string(k));
  return *q;
}

SurfaceModel SurfaceModel::make(int r) {
  require_rank(r);
  SurfaceModel m;
  m.rank = r;
  m.canonical = canonical_class(r);
  m.degree = 9 - r;
  m.simple_roots.push_back(DivisorClass::h(r) - DivisorClass::e(r, 1) - DivisorClass::e(r, 2) -
                           DivisorClass::e(r, 3));
  for (int i = 1; i < r; ++i) m.simple_roots.push_back(DivisorClass::e(r, i) - DivisorClass::e(r, i + 1));
  return m;
}

void to_json(nlohmann::json& j, const DivisorClass& d) {
  j = nlohmann::json{{"r", d.rank()}, {"coeffs", std::vector<std::int64_t>(d.coeffs().begin(), d.coeffs().end())}};
}

void from_json(const nlohmann::json& j, DivisorClass& d) {
  if (!j.is_object() || !j.contains("r") || !j.contains("coeffs"))
    throw ParseError("divisor class JSON needs \"r\" and \"coeffs\"");
  const int r = j.at("r").get<int>();
  if (r < kMinRank || r > kMaxRank) throw ParseError("divisor class rank " + std::to_string(r) + " outside 3..8");
  const auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  d = DivisorClass(r, coeffs);
}

}  // namespace gosset
