// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include "r2s/frame.hpp"
#include "r2s/shift.hpp"

namespace r2s {

/// Exhaustive search over [-radius, radius]^2 for the shift minimizing the
/// sum of absolute differences between `cur` and `prev` displaced by the
/// candidate, normalized by the overlap pixel count. Ties break toward no
/// motion: smallest |dx|+|dy|, then smallest dy, then smallest dx. Requires
/// radius < min(W, H) so every candidate has a non-empty overlap. Fully
/// deterministic.
Shift estimate_global_shift(const Frame& prev, const Frame& cur, int radius);

/// Per-block search with the same scoring and tie-break, judged against
/// `prev_recon`. A block is flagged redundant iff its winning shift has a
/// fully in-bounds source rectangle and the mean absolute per-channel
/// difference against the shifted source is <= tau. Raw blocks record
/// shift (0,0).
ShiftField estimate_grid_shifts(const Frame& prev_recon, const Frame& cur,
                                const GridSpec& grid, int radius, double tau);

/// Redundancy classification for externally supplied per-block shifts (no
/// search): applies the same in-bounds and tau tests as the estimator.
ShiftField classify_blocks(const Frame& prev_recon, const Frame& cur,
                           const GridSpec& grid,
                           std::span<const Shift> block_shifts, double tau);

}  // namespace r2s
