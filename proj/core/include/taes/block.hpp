// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace taes {

//
// 128-bit cipher state / key material.
//
// Bytes fill the 4x4 state matrix column-major:
//
//   byte index
//   +--+--+--+--+
//   | 0| 4| 8|12|
//   | 1| 5| 9|13|     state(row, col) = bytes[4*col + row]
//   | 2| 6|10|14|
//   | 3| 7|11|15|
//   +--+--+--+--+
//
// Hex serialization is big-endian byte order: the leftmost hex pair is
// byte 0. Bit index i (0..127) addresses bit (7 - i%8) of byte i/8, i.e.
// bit 0 is the most significant bit of byte 0, matching the hex reading
// order.
//
struct Block {
  std::array<std::uint8_t, 16> bytes{};

  static Block filled(std::uint8_t value);

  // Throws std::invalid_argument unless given exactly 32 hex characters.
  static Block from_hex(const std::string& hex);

  // 32 lowercase hex characters, no separators.
  std::string to_hex() const;

  bool get_bit(int i) const;
  void set_bit(int i, bool v);

  std::uint8_t& operator[](std::size_t i) { return bytes[i]; }
  std::uint8_t operator[](std::size_t i) const { return bytes[i]; }

  friend Block operator^(const Block& a, const Block& b);
  bool operator==(const Block&) const = default;
};

// 32-bit key-schedule subgroup, 4 bytes.
using Word = std::array<std::uint8_t, 4>;

}  // namespace taes
