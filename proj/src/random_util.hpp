#pragma once

#include <cstdint>
#include <random>

namespace cxlab::rnd {

/// Uniform draw from [0, n) by rejection, so streams agree across standard libraries.
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = g();
  while (x >= limit);
  return x % n;
}

}  // namespace cxlab::rnd
