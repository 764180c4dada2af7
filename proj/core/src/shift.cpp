// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/shift.hpp"

#include <algorithm>
#include <string>

namespace r2s {

BlockRect block_rect(const GridSpec& grid, int frame_w, int frame_h,
                     int index) {
  if (grid.block_w < 1 || grid.block_h < 1)
    fail(ErrorCode::InvalidArgument, "block dimensions must be >= 1");
  if (frame_w < 1 || frame_h < 1)
    fail(ErrorCode::InvalidArgument, "frame dimensions must be >= 1");
  const int cols = grid.cols(frame_w);
  if (index < 0 || index >= grid.block_count(frame_w, frame_h))
    fail(ErrorCode::InvalidArgument,
         "block index " + std::to_string(index) + " out of range");

  BlockRect rect;
  rect.x0 = (index % cols) * grid.block_w;
  rect.y0 = (index / cols) * grid.block_h;
  rect.x1 = std::min(frame_w, rect.x0 + grid.block_w);
  rect.y1 = std::min(frame_h, rect.y0 + grid.block_h);
  return rect;
}

WindowPlan plan_windows(int n_frames, int stride) {
  if (n_frames < 1)
    fail(ErrorCode::InvalidArgument, "n_frames must be >= 1");
  if (stride < 2 || stride % 2 != 0)
    fail(ErrorCode::InvalidArgument,
         "stride must be even and >= 2, got " + std::to_string(stride));

  WindowPlan plan;
  plan.n_frames = n_frames;
  plan.stride = stride;
  const int hop = stride / 2;
  plan.max_iter = n_frames / hop - 1;

  if (plan.max_iter < 0) {
    // Sequence shorter than one hop: degenerate single window.
    plan.windows.push_back({0, n_frames});
    return plan;
  }
  for (int g = 0; g <= plan.max_iter; ++g) {
    const int start = g * hop;
    plan.windows.push_back({start, std::min(stride, n_frames - start)});
  }
  return plan;
}

std::pair<int, int> WindowPlan::supplied_frames(int g) const {
  if (g < 0 || g >= static_cast<int>(windows.size()))
    fail(ErrorCode::InvalidArgument, "window index out of range");
  const Window& w = windows[g];
  if (g + 1 == static_cast<int>(windows.size()))
    return {w.start, w.start + w.length};
  return {w.start, w.start + stride / 2};
}

std::pair<int, int> WindowPlan::supplied_shifts(int g) const {
  auto [lo, hi] = supplied_frames(g);
  return {lo + 1, std::min(hi + 1, n_frames)};
}

}  // namespace r2s
