#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

std::int64_t dot(const Vec& a, const Vec& b, int r) {
  std::int64_t s = a[0] * b[0];
  for (int i = 1; i <= r; ++i) s -= a[i] * b[i];
  return s;
}

std::int64_t dot_k(const Vec& a, int r) {
  std::int64_t s = -3 * a[0];
  for (int i = 1; i <= r; ++i) s -= a[i];
  return s;
}

namespace {
std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}
}  // namespace

std::vector<Vec> scan(int r, std::int64_t self, std::int64_t kdot) {
  // With q = sum e-coefficients squared = a0^2 - self and t = sum e-coefficients
  // = -kdot - 3 a0, Cauchy-Schwarz forces t^2 <= r q.
  std::vector<Vec> out;
  for (std::int64_t a0 = -60; a0 <= 60; ++a0) {
    const std::int64_t q = a0 * a0 - self;
    const std::int64_t t = -kdot - 3 * a0;
    if (q < 0 || t * t > r * q) continue;
    Vec v{};
    v[0] = a0;
    std::function<void(int, std::int64_t, std::int64_t)> rec = [&](int i, std::int64_t q_left, std::int64_t t_left) {
      const int rest = r - i + 1;
      if (rest == 0) {
        if (q_left == 0 && t_left == 0) out.push_back(v);
        return;
      }
      if (t_left * t_left > rest * q_left) return;
      const std::int64_t m = isqrt(q_left);
      for (std::int64_t c = -m; c <= m; ++c) {
        v[i] = c;
        rec(i + 1, q_left - c * c, t_left - c);
      }
      v[i] = 0;
    };
    rec(1, q, t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t e8_theta(std::uint64_t m) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0) s += d * d * d;
  return 240 * s;
}

std::uint64_t cliques(const std::vector<Vec>& vs, int r, std::int64_t value, int k) {
  const std::size_t n = vs.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i != j && dot(vs[i], vs[j], r) == value;
  std::vector<std::size_t> chosen;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) {
      ++count;
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return adj[u][v]; })) {
        chosen.push_back(v);
        rec(v + 1);
        chosen.pop_back();
      }
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
