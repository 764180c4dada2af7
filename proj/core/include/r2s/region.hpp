// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "r2s/shift.hpp"

namespace r2s {

/// Split of a W x H frame under a shift: the redundant rectangle whose every
/// pixel has an in-bounds source in the previous frame, and (implicitly) its
/// complement, the L-shaped strip of pixels that must be stored. Coordinates
/// are half-open.
struct RegionPair {
  int col_lo = 0, row_lo = 0, col_hi = 0, row_hi = 0;  // redundant rect
  int frame_w = 0, frame_h = 0;

  bool empty() const { return col_lo >= col_hi || row_lo >= row_hi; }
  bool contains(int col, int row) const {
    return col >= col_lo && col < col_hi && row >= row_lo && row < row_hi;
  }
  long long redundant_area() const {
    if (empty()) return 0;
    return static_cast<long long>(col_hi - col_lo) * (row_hi - row_lo);
  }
  long long nonredundant_area() const {
    return static_cast<long long>(frame_w) * frame_h - redundant_area();
  }
};

/// Redundant rectangle for a shift: columns [max(0,dx), W+min(0,dx)) by rows
/// [max(0,dy), H+min(0,dy)); empty when |dx| >= W or |dy| >= H.
RegionPair redundant_region(Shift shift, int w, int h);

/// Closed form for the stored-pixel count:
/// min(|dx|,W)*H + min(|dy|,H)*W - min(|dx|,W)*min(|dy|,H).
long long nonredundant_area(Shift shift, int w, int h);

}  // namespace r2s
