// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "r2s/errors.hpp"

namespace r2s {

/// Integer displacement of content between consecutive frames: content at
/// (c, r) in frame f-1 appears at (c + dx, r + dy) in frame f. Columns grow
/// rightward, rows grow downward.
struct Shift {
  int dx = 0;
  int dy = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Shift components must stay in signed 16-bit range so grid block records
/// can serialize them.
inline constexpr int kMaxShiftMagnitude = 32767;

/// Block tiling of a frame. Rightmost and bottom blocks may be partial.
struct GridSpec {
  int block_w = 16;
  int block_h = 16;

  int cols(int frame_w) const { return (frame_w + block_w - 1) / block_w; }
  int rows(int frame_h) const { return (frame_h + block_h - 1) / block_h; }
  int block_count(int frame_w, int frame_h) const {
    return cols(frame_w) * rows(frame_h);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Half-open pixel rectangle of one grid block.
struct BlockRect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  long long area() const {
    return static_cast<long long>(width()) * height();
  }
};

/// Rectangle of block `index` in row-major block order.
BlockRect block_rect(const GridSpec& grid, int frame_w, int frame_h, int index);

/// Per-block shifts plus redundancy flags, row-major block order. Raw
/// (non-redundant) blocks carry shift (0,0).
struct ShiftField {
  GridSpec grid;
  std::vector<Shift> shifts;
  std::vector<std::uint8_t> redundant;  // 1 redundant, 0 raw

  friend bool operator==(const ShiftField&, const ShiftField&) = default;
};

struct Window {
  int start = 0;
  int length = 0;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Stride-S window layout: window g starts at g*(S/2) and spans up to S
/// frames, so consecutive windows overlap by half a stride.
struct WindowPlan {
  int n_frames = 0;
  int stride = 0;
  /// M = n_frames / (S/2) - 1. Negative when the sequence is shorter than
  /// one hop; a single window [0, n_frames) is emitted in that case.
  int max_iter = 0;
  std::vector<Window> windows;

  /// Frames window g is responsible for: its first S/2 frames, or all of
  /// them for the final window. The ranges partition [0, n_frames).
  std::pair<int, int> supplied_frames(int g) const;

  /// Frame indices whose incoming shift window g supplies: its supplied
  /// frame range offset by +1 (the transitions out of those frames). The
  /// ranges partition [1, n_frames); at stride 2 each window supplies the
  /// one transition starting at its own first frame pair.
  std::pair<int, int> supplied_shifts(int g) const;
};

/// Lays out overlapping windows for a sequence. `stride` must be even and
/// >= 2; sequences shorter than stride/2 degenerate to a single window.
WindowPlan plan_windows(int n_frames, int stride);

}  // namespace r2s
