// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/codec.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "r2s/block_match.hpp"
#include "r2s/errors.hpp"
#include "parallel.hpp"

namespace r2s {
namespace {

/// Calls row_fn(row, col_begin, col_end) for every maximal horizontal span
/// that lies outside the redundant rectangle, in full-frame row-major order
/// — the fixed payload scan order of global mode.
template <typename RowFn>
void for_each_nonredundant_span(const RegionPair& region, RowFn&& row_fn) {
  const bool no_rect = region.empty();
  for (int r = 0; r < region.frame_h; ++r) {
    if (no_rect || r < region.row_lo || r >= region.row_hi) {
      row_fn(r, 0, region.frame_w);
      continue;
    }
    if (region.col_lo > 0) row_fn(r, 0, region.col_lo);
    if (region.col_hi < region.frame_w)
      row_fn(r, region.col_hi, region.frame_w);
  }
}

void check_field(const ShiftField& field, int w, int h) {
  if (field.grid.block_w < 1 || field.grid.block_h < 1)
    fail(ErrorCode::InconsistentField, "block dimensions must be >= 1");
  const std::size_t n_blocks =
      static_cast<std::size_t>(field.grid.block_count(w, h));
  if (field.shifts.size() != n_blocks || field.redundant.size() != n_blocks)
    fail(ErrorCode::InconsistentField,
         "field expects " + std::to_string(n_blocks) + " blocks, has " +
             std::to_string(field.shifts.size()) + " shifts / " +
             std::to_string(field.redundant.size()) + " flags");
}

bool source_in_bounds(const BlockRect& rect, Shift s, int w, int h) {
  return rect.x0 - s.dx >= 0 && rect.y0 - s.dy >= 0 && rect.x1 - s.dx <= w &&
         rect.y1 - s.dy <= h;
}

std::size_t grid_payload_size(const ShiftField& field, int w, int h) {
  std::size_t bytes = 0;
  const int n_blocks = field.grid.block_count(w, h);
  for (int i = 0; i < n_blocks; ++i)
    if (!field.redundant[static_cast<std::size_t>(i)])
      bytes += static_cast<std::size_t>(
                   block_rect(field.grid, w, h, i).area()) *
               3;
  return bytes;
}

void check_payload_size(std::size_t actual, std::size_t expected,
                        const char* what) {
  if (actual != expected)
    fail(ErrorCode::PayloadLengthMismatch,
         std::string(what) + ": payload is " + std::to_string(actual) +
             " bytes, region arithmetic requires " + std::to_string(expected));
}

}  // namespace

CompressedFrame compress_frame_global(const Frame& cur, Shift shift) {
  validate(cur);
  const RegionPair region = redundant_region(shift, cur.width, cur.height);

  CompressedFrame cf;
  cf.mode = Mode::global;
  cf.global_shift = shift;
  cf.payload.resize(
      static_cast<std::size_t>(region.nonredundant_area()) * 3);
  std::uint8_t* out = cf.payload.data();
  for_each_nonredundant_span(region, [&](int r, int c0, int c1) {
    out = std::copy_n(cur.at(c0, r), static_cast<std::size_t>(c1 - c0) * 3,
                      out);
  });
  return cf;
}

CompressedFrame compress_frame_grid(const Frame& prev_recon, const Frame& cur,
                                    const ShiftField& field) {
  validate(prev_recon);
  validate(cur);
  if (!prev_recon.same_size(cur))
    fail(ErrorCode::DimensionMismatch, "frame dimensions differ");
  check_field(field, cur.width, cur.height);

  CompressedFrame cf;
  cf.mode = Mode::grid;
  cf.field = field;
  cf.payload.resize(grid_payload_size(field, cur.width, cur.height));
  std::uint8_t* out = cf.payload.data();
  const int n_blocks = field.grid.block_count(cur.width, cur.height);
  for (int i = 0; i < n_blocks; ++i) {
    const BlockRect rect = block_rect(field.grid, cur.width, cur.height, i);
    if (field.redundant[static_cast<std::size_t>(i)]) {
      if (!source_in_bounds(rect, field.shifts[static_cast<std::size_t>(i)],
                            cur.width, cur.height))
        fail(ErrorCode::InconsistentField,
             "redundant block " + std::to_string(i) +
                 " has an out-of-bounds source");
      continue;
    }
    for (int r = rect.y0; r < rect.y1; ++r)
      out = std::copy_n(cur.at(rect.x0, r),
                        static_cast<std::size_t>(rect.width()) * 3, out);
  }
  return cf;
}

Frame decompress_frame(const Frame& prev_recon, const CompressedFrame& cf) {
  validate(prev_recon);
  Frame out = Frame::allocate(prev_recon.width, prev_recon.height);

  if (cf.mode == Mode::global) {
    const Shift s = cf.global_shift;
    const RegionPair region =
        redundant_region(s, prev_recon.width, prev_recon.height);
    check_payload_size(cf.payload.size(),
                       static_cast<std::size_t>(region.nonredundant_area()) * 3,
                       "global frame");
    // psi retrieval: redundant pixels come from prev_recon via the inverse
    // shift, row by row.
    if (!region.empty())
      for (int r = region.row_lo; r < region.row_hi; ++r)
        std::copy_n(prev_recon.at(region.col_lo - s.dx, r - s.dy),
                    static_cast<std::size_t>(region.col_hi - region.col_lo) * 3,
                    out.at(region.col_lo, r));
    const std::uint8_t* in = cf.payload.data();
    for_each_nonredundant_span(region, [&](int r, int c0, int c1) {
      const std::size_t n = static_cast<std::size_t>(c1 - c0) * 3;
      std::copy_n(in, n, out.at(c0, r));
      in += n;
    });
    return out;
  }

  check_field(cf.field, out.width, out.height);
  check_payload_size(cf.payload.size(),
                     grid_payload_size(cf.field, out.width, out.height),
                     "grid frame");
  const std::uint8_t* in = cf.payload.data();
  const int n_blocks = cf.field.grid.block_count(out.width, out.height);
  for (int i = 0; i < n_blocks; ++i) {
    const BlockRect rect = block_rect(cf.field.grid, out.width, out.height, i);
    const std::size_t row_bytes = static_cast<std::size_t>(rect.width()) * 3;
    if (cf.field.redundant[static_cast<std::size_t>(i)]) {
      const Shift s = cf.field.shifts[static_cast<std::size_t>(i)];
      if (!source_in_bounds(rect, s, out.width, out.height))
        fail(ErrorCode::SourceOutOfBounds,
             "redundant block " + std::to_string(i) +
                 " reaches outside the previous frame");
      for (int r = rect.y0; r < rect.y1; ++r)
        std::copy_n(prev_recon.at(rect.x0 - s.dx, r - s.dy), row_bytes,
                    out.at(rect.x0, r));
    } else {
      for (int r = rect.y0; r < rect.y1; ++r) {
        std::copy_n(in, row_bytes, out.at(rect.x0, r));
        in += row_bytes;
      }
    }
  }
  return out;
}

Frame export_masked_frame(const CompressedFrame& cf, int w, int h) {
  Frame out = Frame::allocate(w, h);  // zero-filled: redundant stays black
  if (cf.mode == Mode::global) {
    const RegionPair region = redundant_region(cf.global_shift, w, h);
    check_payload_size(cf.payload.size(),
                       static_cast<std::size_t>(region.nonredundant_area()) * 3,
                       "masked global frame");
    const std::uint8_t* in = cf.payload.data();
    for_each_nonredundant_span(region, [&](int r, int c0, int c1) {
      const std::size_t n = static_cast<std::size_t>(c1 - c0) * 3;
      std::copy_n(in, n, out.at(c0, r));
      in += n;
    });
    return out;
  }

  check_field(cf.field, w, h);
  check_payload_size(cf.payload.size(), grid_payload_size(cf.field, w, h),
                     "masked grid frame");
  const std::uint8_t* in = cf.payload.data();
  const int n_blocks = cf.field.grid.block_count(w, h);
  for (int i = 0; i < n_blocks; ++i) {
    if (cf.field.redundant[static_cast<std::size_t>(i)]) continue;
    const BlockRect rect = block_rect(cf.field.grid, w, h, i);
    const std::size_t row_bytes = static_cast<std::size_t>(rect.width()) * 3;
    for (int r = rect.y0; r < rect.y1; ++r) {
      std::copy_n(in, row_bytes, out.at(rect.x0, r));
      in += row_bytes;
    }
  }
  return out;
}

R2SStream compress_video(const FrameSequence& seq,
                         const CompressConfig& config) {
  validate(seq);
  if (config.radius < 0)
    fail(ErrorCode::InvalidArgument, "radius must be >= 0");
  if (config.tau < 0)
    fail(ErrorCode::InvalidArgument, "tau must be >= 0");

  const int n = static_cast<int>(seq.frames.size());
  const Frame& first = seq.frames.front();
  const int n_points =
      config.mode == Mode::grid
          ? config.grid.block_count(first.width, first.height)
          : 1;
  if (config.trajectories) {
    if (config.trajectories->n_points != n_points)
      fail(ErrorCode::InvalidArgument,
           "trajectories carry " + std::to_string(config.trajectories->n_points) +
               " points, mode needs " + std::to_string(n_points));
    if (static_cast<int>(config.trajectories->shifts.size()) != n - 1)
      fail(ErrorCode::InvalidArgument,
           "trajectories cover " +
               std::to_string(config.trajectories->shifts.size()) +
               " transitions, sequence has " + std::to_string(n - 1));
  }

  R2SStream stream;
  stream.width = first.width;
  stream.height = first.height;
  stream.mode = config.mode;
  stream.grid = config.mode == Mode::grid ? config.grid : GridSpec{0, 0};
  stream.tracker =
      config.trajectories ? TrackerId::external : TrackerId::builtin;
  stream.first_frame = first;
  stream.frames.resize(static_cast<std::size_t>(n - 1));

  if (config.mode == Mode::global) {
    // Open-loop: shifts judged between original frames, so the per-pair
    // work is independent and parallelizable.
    detail::parallel_for(1, n, [&](int f) {
      const Shift s =
          config.trajectories
              ? config.trajectories->shifts[static_cast<std::size_t>(f - 1)][0]
              : estimate_global_shift(seq.frames[static_cast<std::size_t>(f - 1)],
                                      seq.frames[static_cast<std::size_t>(f)],
                                      config.radius);
      stream.frames[static_cast<std::size_t>(f - 1)] =
          compress_frame_global(seq.frames[static_cast<std::size_t>(f)], s);
    });
    return stream;
  }

  // Closed-loop grid mode: each step judges redundancy against the running
  // reconstruction, which is what makes tau = 0 lossless.
  Frame prev_recon = first;
  for (int f = 1; f < n; ++f) {
    const Frame& cur = seq.frames[static_cast<std::size_t>(f)];
    const ShiftField field =
        config.trajectories
            ? classify_blocks(
                  prev_recon, cur, config.grid,
                  config.trajectories->shifts[static_cast<std::size_t>(f - 1)],
                  config.tau)
            : estimate_grid_shifts(prev_recon, cur, config.grid, config.radius,
                                   config.tau);
    CompressedFrame cf = compress_frame_grid(prev_recon, cur, field);
    prev_recon = decompress_frame(prev_recon, cf);
    stream.frames[static_cast<std::size_t>(f - 1)] = std::move(cf);
  }
  return stream;
}

void decompress_stream(const R2SStream& stream,
                       const std::function<void(int, const Frame&)>& sink) {
  validate(stream.first_frame);
  if (stream.first_frame.width != stream.width ||
      stream.first_frame.height != stream.height)
    fail(ErrorCode::DimensionMismatch,
         "first frame does not match the stream dimensions");

  sink(0, stream.first_frame);
  Frame prev = stream.first_frame;
  for (std::size_t i = 0; i < stream.frames.size(); ++i) {
    Frame cur = decompress_frame(prev, stream.frames[i]);
    sink(static_cast<int>(i) + 1, cur);
    prev = std::move(cur);
  }
}

FrameSequence decompress_video(const R2SStream& stream) {
  FrameSequence seq;
  seq.frames.reserve(stream.frames.size() + 1);
  decompress_stream(stream,
                    [&seq](int, const Frame& f) { seq.frames.push_back(f); });
  return seq;
}

}  // namespace r2s
