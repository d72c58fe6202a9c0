#pragma once

// Fixed-size clique enumeration over packed adjacency rows. A clique is
// grown by ascending vertex index, so each one is produced exactly once and
// in lexicographic order.

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <string>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "gosset/bitset.hpp"
#include "gosset/errors.hpp"

namespace gosset {

namespace detail {

// Keeps bits strictly above v.
inline void mask_above(std::span<std::uint64_t> words, std::size_t v) {
  const std::size_t w = v / 64;
  for (std::size_t i = 0; i < w && i < words.size(); ++i) words[i] = 0;
  if (w < words.size()) {
    const unsigned s = static_cast<unsigned>(v % 64);
    words[w] &= (s == 63) ? 0 : (~std::uint64_t{0} << (s + 1));
  }
}

template <class Fn>
struct CliqueWalker {
  const BitMatrix& g;
  std::size_t k;
  Fn& fn;
  std::vector<std::uint32_t> stack;
  std::vector<std::uint64_t> cand;  // one candidate row per depth

  CliqueWalker(const BitMatrix& graph, std::size_t size, Fn& f)
      : g(graph), k(size), fn(f), cand(size * graph.stride()) {
    stack.reserve(size);
  }

  std::span<std::uint64_t> level(std::size_t d) { return {cand.data() + d * g.stride(), g.stride()}; }

  // Enumerates cliques with first vertex v.
  void from(std::uint32_t v) {
    stack.assign(1, v);
    if (k == 1) {
      fn(std::span<const std::uint32_t>(stack));
      return;
    }
    auto row = g.row(v);
    auto lv = level(1);
    std::copy(row.begin(), row.end(), lv.begin());
    mask_above(lv, v);
    descend(1);
  }

  void descend(std::size_t depth) {
    auto cur = level(depth);
    for_each_bit(cur, [&](std::size_t u) {
      stack.push_back(static_cast<std::uint32_t>(u));
      if (depth + 1 == k) {
        fn(std::span<const std::uint32_t>(stack));
      } else {
        auto next = level(depth + 1);
        auto row = g.row(u);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = cur[i] & row[i];
        mask_above(next, u);
        descend(depth + 1);
      }
      stack.pop_back();
    });
  }
};

inline std::uint64_t count_from(const BitMatrix& g, std::size_t k, std::uint32_t v,
                                std::vector<std::uint64_t>& buf) {
  if (k == 1) return 1;
  const std::size_t s = g.stride();
  buf.resize(k * s);
  auto level = [&](std::size_t d) { return std::span<std::uint64_t>(buf.data() + d * s, s); };
  auto first = level(1);
  auto row = g.row(v);
  std::copy(row.begin(), row.end(), first.begin());
  mask_above(first, v);
  // Explicit stack: at each depth remember the next bit to try.
  std::vector<std::size_t> pos(k, 0);
  std::uint64_t total = 0;
  if (k == 2) return popcount(first);
  std::size_t depth = 1;
  auto next_bit = [&](std::span<const std::uint64_t> words, std::size_t from) -> std::size_t {
    std::size_t w = from / 64;
    if (w >= words.size()) return SIZE_MAX;
    std::uint64_t bits = words[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w >= words.size()) return SIZE_MAX;
      bits = words[w];
    }
  };
  pos[1] = 0;
  while (depth >= 1) {
    auto cur = level(depth);
    const std::size_t u = next_bit(cur, pos[depth]);
    if (u == SIZE_MAX) {
      --depth;
      continue;
    }
    pos[depth] = u + 1;
    auto next = level(depth + 1);
    auto r = g.row(u);
    for (std::size_t i = 0; i < s; ++i) next[i] = cur[i] & r[i];
    mask_above(next, u);
    if (depth + 2 == k) {
      total += popcount(next);
    } else {
      ++depth;
      pos[depth] = 0;
    }
  }
  return total;
}

}  // namespace detail

inline unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs work(v) for every v in [0, n) on up to `threads` workers and returns
// the per-partition results in index order.
template <class T, class Work>
std::vector<T> map_partitions(std::size_t n, unsigned threads, Work&& work) {
  std::vector<T> out(n);
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t v = 0; v < n; ++v) out[v] = work(v);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t v; !failed && (v = next.fetch_add(1)) < n;) {
        try {
          out[v] = work(v);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Calls fn(clique) for every k-clique in ascending order.
template <class Fn>
void for_each_clique(const BitMatrix& g, std::size_t k, Fn&& fn) {
  if (k == 0) return;
  detail::CliqueWalker<Fn> walker(g, k, fn);
  for (std::uint32_t v = 0; v < g.size(); ++v) walker.from(v);
}

// Cliques whose smallest vertex is v.
template <class Fn>
void for_each_clique_from(const BitMatrix& g, std::size_t k, std::uint32_t v, Fn&& fn) {
  if (k == 0) return;
  detail::CliqueWalker<Fn> walker(g, k, fn);
  walker.from(v);
}

inline std::uint64_t count_cliques_from(const BitMatrix& g, std::size_t k, std::uint32_t v) {
  std::vector<std::uint64_t> buf;
  return detail::count_from(g, k, v, buf);
}

inline std::uint64_t count_cliques(const BitMatrix& g, std::size_t k, unsigned threads = 1) {
  if (k == 0) return 1;
  auto parts = map_partitions<std::uint64_t>(g.size(), threads, [&](std::size_t v) {
    return count_cliques_from(g, k, static_cast<std::uint32_t>(v));
  });
  std::uint64_t total = 0;
  for (auto p : parts) total += p;
  return total;
}

// Uniform integer in [0, n) by rejection, so results do not depend on the
// standard library's distribution implementation.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("empty draw range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

// Random k-clique by greedy growth from a random vertex; restarts on dead
// ends. Not uniform over cliques, but reproducible for a fixed generator.
inline std::vector<std::uint32_t> sample_clique(const BitMatrix& g, std::size_t k, std::mt19937_64& rng,
                                                std::size_t max_attempts = 100000) {
  if (k == 0 || g.size() == 0) throw DomainError("cannot sample an empty clique");
  std::vector<std::uint32_t> clique;
  Bitset cand(g.size());
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    clique.assign(1, static_cast<std::uint32_t>(bounded_draw(rng, g.size())));
    cand = g.row_set(clique[0]);
    while (clique.size() < k) {
      const auto n = cand.count();
      if (n == 0) break;
      auto pick = bounded_draw(rng, n);
      std::size_t chosen = 0;
      for_each_bit(cand.words(), [&](std::size_t i) {
        if (pick-- == 0) chosen = i;
      });
      clique.push_back(static_cast<std::uint32_t>(chosen));
      cand &= g.row(chosen);
    }
    if (clique.size() == k) {
      std::sort(clique.begin(), clique.end());
      return clique;
    }
  }
  throw DomainError("no clique of size " + std::to_string(k) + " found by sampling");
}

}  // namespace gosset
