// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "r2s/codec.hpp"
#include "r2s/frame.hpp"
#include "r2s/trajectory.hpp"

namespace r2s {

/// Size and fidelity numbers for one frame. Fields not touched by a given
/// computation stay zero (e.g. loss_pct in a size-only report).
struct FrameMetrics {
  int frame_index = 0;            // 0-based; aggregate rows use -1
  std::size_t stored_bytes = 0;   // serialized record size in the container
  std::size_t original_bytes = 0; // 3 * W * H
  double compression_pct = 0.0;   // 100 * (1 - stored / original), unclamped
  double loss_pct = 0.0;          // % of channel samples that differ
  double mae = 0.0;               // mean absolute channel error
  double time_ms = 0.0;           // wall-clock per stage, when measured
};

struct MetricsReport {
  std::vector<FrameMetrics> per_frame;
  FrameMetrics aggregate;
};

/// Size metrics for a stream. Per-frame rows cover the compressed frames
/// (indices 1 .. n-1) with stored_bytes = that frame's container record
/// size; the aggregate row compares the whole container — header, raw first
/// frame and records — against frame_count * 3 * W * H. The aggregate is
/// deliberately unclamped and may go negative for tiny streams where the
/// header dominates.
MetricsReport compression_percent(const R2SStream& stream);

/// Fidelity metrics between two equal-shaped sequences. Per frame,
/// loss_pct = 100 * mismatched channel samples / (3 * W * H) and mae is the
/// mean absolute channel error; the aggregate row holds the means over
/// frames. Throws ShapeMismatch on length or dimension disagreement.
MetricsReport data_loss_percent(const FrameSequence& original,
                                const FrameSequence& recon);

/// One row of a stride sweep: the compression/loss/speed trade-off at one
/// stride value.
struct SweepRow {
  int stride = 0;
  double compression_pct = 0.0;
  double loss_pct = 0.0;
  double ms_per_frame = 0.0;  // (compress + decompress) wall time / frames
};

struct SweepConfig {
  int radius = 16;
  /// When set, per-stride shift data comes from the returned trajectories
  /// instead of the built-in estimator.
  std::function<TrajectorySet(int stride)> trajectories_for_stride;
};

/// Global-mode compress+decompress across the given strides. Windows follow
/// plan_windows; with the built-in estimator each window's shift is taken
/// from its first frame pair and extrapolated at constant velocity across
/// the frames the window supplies, emulating long-horizon tracker drift.
/// Each stride must be even and >= 2.
std::vector<SweepRow> stride_sweep(const FrameSequence& seq,
                                   const std::vector<int>& strides,
                                   const SweepConfig& config = {});

/// Renders rows as "stride,compression_pct,loss_pct,ms_per_frame" CSV with
/// "\n" endings and four-decimal fixed precision.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace r2s
