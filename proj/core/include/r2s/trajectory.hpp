// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "r2s/shift.hpp"

namespace r2s {

/// Integer shifts ingested from an external tracker. shifts[f - 1][p] is
/// point p's displacement from frame f-1 to frame f; entries without a CSV
/// row stay (0,0).
struct TrajectorySet {
  int n_points = 1;
  std::vector<std::vector<Shift>> shifts;  // (n_frames - 1) rows of n_points

  friend bool operator==(const TrajectorySet&, const TrajectorySet&) = default;
};

/// Parses a "frame,point,dx,dy" CSV. Frame indices must lie in
/// [1, n_frames - 1]; point is 0 in global mode, else a row-major block
/// index below n_points. Real-valued shifts are rounded half away from zero.
TrajectorySet load_trajectories(const std::filesystem::path& path,
                                int n_frames, int n_points);

}  // namespace r2s
