// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace r2s {

inline constexpr std::uint32_t kCrc32Init = 0xFFFFFFFFu;

/// Feeds bytes into a running CRC-32 (IEEE polynomial, reflected). The state
/// starts at kCrc32Init and is finalized by crc32_finalize.
std::uint32_t crc32_update(std::uint32_t state, const std::uint8_t* data,
                           std::size_t n);

inline std::uint32_t crc32_finalize(std::uint32_t state) {
  return state ^ 0xFFFFFFFFu;
}

inline std::uint32_t crc32(std::span<const std::uint8_t> data) {
  return crc32_finalize(crc32_update(kCrc32Init, data.data(), data.size()));
}

}  // namespace r2s
