// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "r2s/errors.hpp"

namespace r2s {

/// A W x H raster of 8-bit RGB triples, row-major. Frames are immutable by
/// convention once built and safe to share read-only across threads.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 3 bytes

  static Frame allocate(int width, int height) {
    Frame f;
    f.width = width;
    f.height = height;
    f.pixels.assign(static_cast<std::size_t>(width) * height * 3, 0);
    return f;
  }

  std::uint8_t* at(int col, int row) {
    return pixels.data() +
           3 * (static_cast<std::size_t>(row) * width + col);
  }
  const std::uint8_t* at(int col, int row) const {
    return pixels.data() +
           3 * (static_cast<std::size_t>(row) * width + col);
  }

  std::size_t byte_size() const { return pixels.size(); }
  bool same_size(const Frame& other) const {
    return width == other.width && height == other.height;
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Throws InvalidArgument unless dimensions are >= 1 and the pixel buffer is
/// exactly width * height * 3 bytes.
inline void validate(const Frame& frame) {
  if (frame.width < 1 || frame.height < 1)
    fail(ErrorCode::InvalidArgument, "frame dimensions must be >= 1");
  if (frame.pixels.size() !=
      static_cast<std::size_t>(frame.width) * frame.height * 3)
    fail(ErrorCode::InvalidArgument, "pixel buffer size does not match W*H*3");
}

/// An ordered run of same-sized frames. `fps` is carried as metadata only.
struct FrameSequence {
  std::vector<Frame> frames;
  std::optional<int> fps;

  friend bool operator==(const FrameSequence&, const FrameSequence&) = default;
};

/// Throws unless the sequence is non-empty and all frames share dimensions.
inline void validate(const FrameSequence& seq) {
  if (seq.frames.empty())
    fail(ErrorCode::InvalidArgument, "sequence must contain at least one frame");
  if (seq.fps && *seq.fps < 1)
    fail(ErrorCode::InvalidArgument, "fps must be positive");
  for (const Frame& f : seq.frames) {
    validate(f);
    if (!f.same_size(seq.frames.front()))
      fail(ErrorCode::DimensionMismatch, "frames differ in size");
  }
}

}  // namespace r2s
