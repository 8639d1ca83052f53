// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/rng.hpp"

namespace taes {

// Unbiased uniform draw in [0, n). Rejection sampling over the raw 64-bit
// stream so results are identical on every platform; the distribution
// adapters in <random> are implementation-defined and would pin results to
// one standard library.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) {
    return 0;
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Block random_block(std::mt19937_64& rng) {
  Block b;
  for (auto& byte : b.bytes) {
    byte = static_cast<std::uint8_t>(rng() & 0xff);
  }
  return b;
}

}  // namespace taes
