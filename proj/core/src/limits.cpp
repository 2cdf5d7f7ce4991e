#include "polyad/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

namespace polyad {

namespace {

Limits initial_limits() {
  Limits limits;
  if (const char* env = std::getenv("POLYAD_SEARCH_BOUND")) {
    try {
      const auto value = std::stoull(env);
      if (value > 0) limits.search_bound = value;
    } catch (const std::exception&) {
      // Malformed values keep the default.
    }
  }
  return limits;
}

std::mutex& limits_mutex() {
  static std::mutex m;
  return m;
}

Limits& limits_storage() {
  static Limits limits = initial_limits();
  return limits;
}

std::atomic<unsigned> g_threads{0};

}  // namespace

const Limits& default_limits() {
  std::lock_guard lock(limits_mutex());
  return limits_storage();
}

void set_default_limits(const Limits& limits) {
  std::lock_guard lock(limits_mutex());
  limits_storage() = limits;
}

void set_thread_count(unsigned threads) { g_threads.store(threads); }

unsigned thread_count() {
  const unsigned t = g_threads.load();
  if (t != 0) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace polyad
