// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "taes/block.hpp"

namespace taes {

// Uniform draw from [0, n) by rejection on raw engine output. The
// mt19937_64 sequence is pinned by the standard, so seeded results are
// byte-identical across platforms (std::uniform_int_distribution is not).
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t n);

// 16 bytes drawn low-byte-first from successive engine outputs.
Block random_block(std::mt19937_64& rng);

}  // namespace taes
