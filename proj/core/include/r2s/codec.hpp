// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "r2s/frame.hpp"
#include "r2s/region.hpp"
#include "r2s/shift.hpp"
#include "r2s/trajectory.hpp"

namespace r2s {

enum class Mode : std::uint8_t { global = 0, grid = 1 };
enum class TrackerId : std::uint8_t { builtin = 0, external = 1 };

/// One compressed frame: shift metadata plus the sparse payload of
/// non-redundant pixels.
///
/// Payload scan orders are fixed for bit-exact interchange:
///  - global: full-frame row-major, skipping pixels inside the redundant
///    rectangle;
///  - grid: raw blocks in row-major block order, each block's pixels
///    row-major within the block.
struct CompressedFrame {
  Mode mode = Mode::global;
  Shift global_shift;  // global mode only
  ShiftField field;    // grid mode only
  std::vector<std::uint8_t> payload;

  friend bool operator==(const CompressedFrame&, const CompressedFrame&) =
      default;
};

/// A whole compressed video: dimensions, the raw first frame, and one
/// CompressedFrame per following frame.
struct R2SStream {
  int width = 0;
  int height = 0;
  Mode mode = Mode::global;
  GridSpec grid{0, 0};  // {0,0} in global mode, matching the container header
  TrackerId tracker = TrackerId::builtin;
  Frame first_frame;
  std::vector<CompressedFrame> frames;  // frames 1 .. n-1

  friend bool operator==(const R2SStream&, const R2SStream&) = default;
};

/// Stores cur's pixels outside the redundant rectangle, in scan order.
CompressedFrame compress_frame_global(const Frame& cur, Shift shift);

/// Stores cur's raw blocks; redundant blocks contribute only their shift.
/// `prev_recon` backs the in-bounds validation of redundant flags.
CompressedFrame compress_frame_grid(const Frame& prev_recon, const Frame& cur,
                                    const ShiftField& field);

/// Rebuilds a frame from the previous reconstruction and one compressed
/// frame: redundant pixels are fetched from prev_recon through the inverse
/// shift, non-redundant pixels come from the payload.
Frame decompress_frame(const Frame& prev_recon, const CompressedFrame& cf);

/// Debug raster matching the masked representation: payload pixels in place,
/// redundant pixels black.
Frame export_masked_frame(const CompressedFrame& cf, int w, int h);

struct CompressConfig {
  Mode mode = Mode::grid;
  int radius = 16;
  double tau = 0.0;
  GridSpec grid{16, 16};
  /// External tracker output; when absent the built-in block matcher runs.
  std::optional<TrajectorySet> trajectories;
};

/// Compresses a sequence. Global mode is open-loop (shifts judged between
/// original frames); grid mode is closed-loop (redundancy judged against the
/// running reconstruction), which makes tau = 0 lossless.
R2SStream compress_video(const FrameSequence& seq, const CompressConfig& config);

/// Streaming decode: emits frames in order while holding only the previous
/// reconstruction. Decoding frame f reads nothing older than frame f-1.
void decompress_stream(const R2SStream& stream,
                       const std::function<void(int, const Frame&)>& sink);

/// Collects decompress_stream output into a sequence.
FrameSequence decompress_video(const R2SStream& stream);

}  // namespace r2s
