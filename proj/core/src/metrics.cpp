// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/metrics.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "r2s/block_match.hpp"
#include "r2s/container.hpp"
#include "r2s/errors.hpp"

namespace r2s {
namespace {

double percent_saved(std::size_t original, std::size_t stored) {
  return 100.0 * (1.0 - static_cast<double>(stored) /
                            static_cast<double>(original));
}

}  // namespace

MetricsReport compression_percent(const R2SStream& stream) {
  if (stream.width < 1 || stream.height < 1)
    fail(ErrorCode::InvalidArgument, "stream dimensions must be >= 1");
  const std::size_t frame_bytes =
      static_cast<std::size_t>(stream.width) * stream.height * 3;

  MetricsReport report;
  std::size_t container_bytes = kContainerHeaderSize + frame_bytes;
  for (std::size_t i = 0; i < stream.frames.size(); ++i) {
    FrameMetrics m;
    m.frame_index = static_cast<int>(i) + 1;
    m.stored_bytes = frame_record_size(stream.frames[i]);
    m.original_bytes = frame_bytes;
    m.compression_pct = percent_saved(m.original_bytes, m.stored_bytes);
    container_bytes += m.stored_bytes;
    report.per_frame.push_back(m);
  }

  report.aggregate.frame_index = -1;
  report.aggregate.stored_bytes = container_bytes;
  report.aggregate.original_bytes = frame_bytes * (stream.frames.size() + 1);
  report.aggregate.compression_pct =
      percent_saved(report.aggregate.original_bytes,
                    report.aggregate.stored_bytes);
  return report;
}

MetricsReport data_loss_percent(const FrameSequence& original,
                                const FrameSequence& recon) {
  validate(original);
  validate(recon);
  if (original.frames.size() != recon.frames.size())
    fail(ErrorCode::ShapeMismatch, "sequence lengths differ");
  if (!original.frames.front().same_size(recon.frames.front()))
    fail(ErrorCode::ShapeMismatch, "frame dimensions differ");

  MetricsReport report;
  double loss_sum = 0.0;
  double mae_sum = 0.0;
  for (std::size_t f = 0; f < original.frames.size(); ++f) {
    const Frame& a = original.frames[f];
    const Frame& b = recon.frames[f];
    const std::size_t samples = a.byte_size();
    std::size_t mismatched = 0;
    std::uint64_t abs_error = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const int d = std::abs(static_cast<int>(a.pixels[i]) -
                             static_cast<int>(b.pixels[i]));
      mismatched += d != 0;
      abs_error += static_cast<std::uint64_t>(d);
    }

    FrameMetrics m;
    m.frame_index = static_cast<int>(f);
    m.original_bytes = samples;
    m.loss_pct = 100.0 * static_cast<double>(mismatched) /
                 static_cast<double>(samples);
    m.mae = static_cast<double>(abs_error) / static_cast<double>(samples);
    loss_sum += m.loss_pct;
    mae_sum += m.mae;
    report.per_frame.push_back(m);
  }

  report.aggregate.frame_index = -1;
  report.aggregate.original_bytes = original.frames.front().byte_size();
  report.aggregate.loss_pct =
      loss_sum / static_cast<double>(original.frames.size());
  report.aggregate.mae =
      mae_sum / static_cast<double>(original.frames.size());
  return report;
}

std::vector<SweepRow> stride_sweep(const FrameSequence& seq,
                                   const std::vector<int>& strides,
                                   const SweepConfig& config) {
  validate(seq);
  for (int s : strides)
    if (s < 2 || s % 2 != 0)
      fail(ErrorCode::InvalidArgument,
           "stride must be even and >= 2, got " + std::to_string(s));

  const int n = static_cast<int>(seq.frames.size());
  std::vector<SweepRow> rows;
  for (int stride : strides) {
    const auto t0 = std::chrono::steady_clock::now();

    // One shift per transition; each window contributes its start-pair
    // estimate (or the external trajectory) to every transition it supplies.
    std::vector<Shift> shifts(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    const WindowPlan plan = plan_windows(n, stride);
    if (config.trajectories_for_stride) {
      const TrajectorySet traj = config.trajectories_for_stride(stride);
      if (traj.n_points != 1 ||
          static_cast<int>(traj.shifts.size()) != n - 1)
        fail(ErrorCode::InvalidArgument,
             "per-stride trajectories must carry one point per transition");
      for (int f = 1; f < n; ++f)
        shifts[static_cast<std::size_t>(f - 1)] =
            traj.shifts[static_cast<std::size_t>(f - 1)][0];
    } else {
      for (std::size_t g = 0; g < plan.windows.size(); ++g) {
        const auto [lo, hi] = plan.supplied_shifts(static_cast<int>(g));
        if (lo >= hi) continue;
        const int start = plan.windows[g].start;
        const Shift v = estimate_global_shift(
            seq.frames[static_cast<std::size_t>(start)],
            seq.frames[static_cast<std::size_t>(start + 1)], config.radius);
        for (int f = lo; f < hi; ++f)
          shifts[static_cast<std::size_t>(f - 1)] = v;
      }
    }

    R2SStream stream;
    stream.width = seq.frames.front().width;
    stream.height = seq.frames.front().height;
    stream.mode = Mode::global;
    stream.grid = GridSpec{0, 0};
    stream.tracker = config.trajectories_for_stride ? TrackerId::external
                                                    : TrackerId::builtin;
    stream.first_frame = seq.frames.front();
    for (int f = 1; f < n; ++f)
      stream.frames.push_back(compress_frame_global(
          seq.frames[static_cast<std::size_t>(f)],
          shifts[static_cast<std::size_t>(f - 1)]));

    const FrameSequence recon = decompress_video(stream);
    const auto t1 = std::chrono::steady_clock::now();

    SweepRow row;
    row.stride = stride;
    row.compression_pct = compression_percent(stream).aggregate.compression_pct;
    row.loss_pct = data_loss_percent(seq, recon).aggregate.loss_pct;
    row.ms_per_frame =
        std::chrono::duration<double, std::milli>(t1 - t0).count() / n;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv = "stride,compression_pct,loss_pct,ms_per_frame\n";
  for (const SweepRow& row : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%d,%.4f,%.4f,%.4f\n", row.stride,
                  row.compression_pct, row.loss_pct, row.ms_per_frame);
    csv += line;
  }
  return csv;
}

}  // namespace r2s
