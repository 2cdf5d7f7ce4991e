#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "polyad/limits.hpp"

namespace polyad {

/// Scans [0, total) and returns the smallest index for which `fails(i)` is
/// true. The range is split into contiguous chunks across worker threads;
/// chunks stop early once a smaller failing index is known, so the answer is
/// identical to a sequential scan.
///
/// `make_scanner` is called once per chunk and must return a callable
/// `(std::uint64_t begin, std::uint64_t end, const std::atomic<std::uint64_t>& best)
/// -> std::optional<std::uint64_t>` that reports the first failing index in
/// its range. This lets scanners keep per-chunk scratch state (odometers etc).
template <typename MakeScanner>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, MakeScanner&& make_scanner) {
  constexpr std::uint64_t serial_cutoff = 1u << 14;
  const unsigned workers =
      total < serial_cutoff ? 1u : static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), total));
  std::atomic<std::uint64_t> best{total};
  if (workers <= 1) {
    auto scan = make_scanner();
    auto hit = scan(std::uint64_t{0}, total, best);
    return hit;
  }
  std::vector<std::optional<std::uint64_t>> hits(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      if (begin >= end) return;
      auto scan = make_scanner();
      hits[w] = scan(begin, end, best);
      if (hits[w]) {
        std::uint64_t cur = best.load();
        while (*hits[w] < cur && !best.compare_exchange_weak(cur, *hits[w])) {
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& h : hits)
    if (h) return h;
  return std::nullopt;
}

/// Convenience form for stateless predicates.
template <typename Pred>
std::optional<std::uint64_t> parallel_find_first_index(std::uint64_t total, Pred&& fails) {
  return parallel_find_first(total, [&] {
    return [&](std::uint64_t begin, std::uint64_t end,
               const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
      for (std::uint64_t i = begin; i < end; ++i) {
        if ((i & 0x3ff) == 0 && best.load(std::memory_order_relaxed) < begin) return std::nullopt;
        if (fails(i)) return i;
      }
      return std::nullopt;
    };
  });
}

}  // namespace polyad
