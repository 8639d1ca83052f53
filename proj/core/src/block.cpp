// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "taes/block.hpp"

#include <stdexcept>

namespace taes {

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Block Block::filled(std::uint8_t value) {
  Block b;
  b.bytes.fill(value);
  return b;
}

Block Block::from_hex(const std::string& hex) {
  if (hex.size() != 32) {
    throw std::invalid_argument("block hex must be 32 characters, got " +
                                std::to_string(hex.size()));
  }
  Block b;
  for (std::size_t i = 0; i < 16; ++i) {
    const int hi = hex_nibble(hex[2 * i]);
    const int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw std::invalid_argument("invalid hex character in block: '" +
                                  hex.substr(2 * i, 2) + "'");
    }
    b.bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return b;
}

std::string Block::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out(32, '0');
  for (std::size_t i = 0; i < 16; ++i) {
    out[2 * i] = digits[bytes[i] >> 4];
    out[2 * i + 1] = digits[bytes[i] & 0x0F];
  }
  return out;
}

bool Block::get_bit(int i) const {
  return (bytes[static_cast<std::size_t>(i) / 8] >> (7 - i % 8)) & 1;
}

void Block::set_bit(int i, bool v) {
  const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
  if (v) {
    bytes[static_cast<std::size_t>(i) / 8] |= mask;
  } else {
    bytes[static_cast<std::size_t>(i) / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

Block operator^(const Block& a, const Block& b) {
  Block out;
  for (std::size_t i = 0; i < 16; ++i) {
    out.bytes[i] = a.bytes[i] ^ b.bytes[i];
  }
  return out;
}

}  // namespace taes
