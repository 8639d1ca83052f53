// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by the tests. Everything
// here is derived from first principles (GF(2^8) arithmetic, the standard's
// matrix layout, the RotWord/SubWord form of key expansion) rather than from
// the library under test, so agreement is meaningful.

#pragma once

#include <cstdint>

#include "taes/block.hpp"

namespace oracle {

// GF(2^8) product, reduction polynomial x^8 + x^4 + x^3 + x + 1.
std::uint8_t gmul(std::uint8_t a, std::uint8_t b);

// Multiplicative inverse by exhaustive search; 0 maps to 0.
std::uint8_t gf_inverse(std::uint8_t x);

// S-box entry computed algebraically: inversion followed by the affine map.
std::uint8_t sbox_byte(std::uint8_t x);

// ShiftRows built directly on the 4x4 column-major layout: row r rotates
// left by r.
taes::Block shift_rows(const taes::Block& state);

// MixColumns as the literal matrix product over GF(2^8).
taes::Block mix_columns(const taes::Block& state);

// Full AES-128 written in the FIPS RotWord/SubWord style, sharing no code
// with the library's f-function formulation.
taes::Block aes128_encrypt(const taes::Block& plaintext,
                           const taes::Block& key);

}  // namespace oracle
