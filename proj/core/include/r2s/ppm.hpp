// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "r2s/frame.hpp"

namespace r2s {

/// Decodes a binary PPM (magic "P6", maxval 255). `#` comments are accepted
/// anywhere whitespace may appear in the header; trailing bytes after the
/// raster are ignored.
Frame decode_ppm(std::span<const std::uint8_t> bytes);

/// Emits exactly "P6\n{W} {H}\n255\n" followed by the raw raster, so
/// decode_ppm(encode_ppm(f)) == f for every valid frame.
std::vector<std::uint8_t> encode_ppm(const Frame& frame);

/// Loads the sequence described by an "R2S-MANIFEST v1" file: one relative
/// PPM path per line, optionally preceded by "fps <n>". All frames must share
/// the dimensions of the first.
FrameSequence read_sequence(const std::filesystem::path& manifest_path);

/// Writes frame_000000.ppm, frame_000001.ppm, ... plus a manifest named
/// "manifest" into `dir` (created if absent); returns the manifest path.
std::filesystem::path write_sequence(const FrameSequence& seq,
                                     const std::filesystem::path& dir);

}  // namespace r2s
