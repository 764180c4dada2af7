// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "r2s/codec.hpp"

namespace r2s {

// .r2s container, all multi-byte integers little-endian:
//
//   header:
//     magic       4 bytes "R2SC"
//     version     u16 (= 1)
//     mode        u8  (0 global, 1 grid)
//     width       u32
//     height      u32
//     frame_count u32 (total frames, including the raw first frame)
//     block_w     u16 (0 in global mode)
//     block_h     u16 (0 in global mode)
//     tracker_id  u8  (0 builtin, 1 external)
//     reserved    2 bytes, zero
//   first frame: width * height * 3 raw RGB bytes
//   per compressed frame:
//     global: dx i32, dy i32, payload_len u32, payload,
//             crc32 over shift bytes + payload
//     grid:   per block {flag u8 (0 redundant, 1 raw), dx i16, dy i16},
//             payload_len u32, payload,
//             crc32 over block records + payload

inline constexpr std::size_t kContainerHeaderSize = 26;
inline constexpr std::uint16_t kContainerVersion = 1;
inline constexpr std::uint8_t kContainerMagic[4] = {'R', '2', 'S', 'C'};

struct ContainerHeader {
  std::uint16_t version = kContainerVersion;
  Mode mode = Mode::global;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t frame_count = 0;
  std::uint16_t block_w = 0;
  std::uint16_t block_h = 0;
  TrackerId tracker = TrackerId::builtin;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) =
      default;
};

/// Serializes a stream to the byte-exact container layout above. Payload
/// lengths are re-checked against the region/block arithmetic first.
std::vector<std::uint8_t> serialize_stream(const R2SStream& stream);

/// Exact inverse of serialize_stream. Validates the magic, version, every
/// structural length and every per-frame CRC.
R2SStream deserialize_stream(std::span<const std::uint8_t> bytes);

/// Header plus per-record layout, without decoding payloads or checking
/// CRCs. Backs `inspect` and byte-accurate size reporting.
struct ContainerInfo {
  ContainerHeader header;
  std::size_t first_frame_bytes = 0;
  std::vector<std::size_t> record_sizes;  // one per compressed frame
  std::size_t total_bytes = 0;
};

ContainerInfo describe_container(std::span<const std::uint8_t> bytes);

/// Serialized size of one compressed frame record (shift/block records +
/// length field + payload + CRC).
std::size_t frame_record_size(const CompressedFrame& cf);

}  // namespace r2s
