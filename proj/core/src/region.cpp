// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/region.hpp"

#include <algorithm>
#include <cstdlib>

#include "r2s/errors.hpp"

namespace r2s {

RegionPair redundant_region(Shift shift, int w, int h) {
  if (w < 1 || h < 1)
    fail(ErrorCode::InvalidArgument, "frame dimensions must be >= 1");
  RegionPair region;
  region.frame_w = w;
  region.frame_h = h;
  region.col_lo = std::max(0, shift.dx);
  region.col_hi = w + std::min(0, shift.dx);
  region.row_lo = std::max(0, shift.dy);
  region.row_hi = h + std::min(0, shift.dy);
  return region;
}

long long nonredundant_area(Shift shift, int w, int h) {
  if (w < 1 || h < 1)
    fail(ErrorCode::InvalidArgument, "frame dimensions must be >= 1");
  const long long cx = std::min<long long>(std::abs(shift.dx), w);
  const long long cy = std::min<long long>(std::abs(shift.dy), h);
  return cx * h + cy * w - cx * cy;
}

}  // namespace r2s
