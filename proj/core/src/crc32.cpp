// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/crc32.hpp"

#include <array>

namespace r2s {
namespace {

// Byte-at-a-time table for the reflected IEEE polynomial 0xEDB88320.
constexpr std::array<std::uint32_t, 256> make_table() {
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k)
      c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    table[i] = c;
  }
  return table;
}

constexpr auto kTable = make_table();

}  // namespace

std::uint32_t crc32_update(std::uint32_t state, const std::uint8_t* data,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    state = kTable[(state ^ data[i]) & 0xFFu] ^ (state >> 8);
  return state;
}

}  // namespace r2s
