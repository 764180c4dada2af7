// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/block_match.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <tuple>
#include <vector>

#include "r2s/errors.hpp"
#include "parallel.hpp"

namespace r2s {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Sum of absolute differences over n contiguous bytes. The ternary form
/// keeps the loop auto-vectorizable.
u64 row_sad(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
  u64 s = 0;
  for (std::size_t i = 0; i < n; ++i)
    s += a[i] > b[i] ? static_cast<u64>(a[i] - b[i])
                     : static_cast<u64>(b[i] - a[i]);
  return s;
}

/// All shifts in [-radius, radius]^2 pre-sorted into tie-break order:
/// smallest |dx|+|dy| first, then smallest dy, then smallest dx. Scanning
/// candidates in this order turns the tie-break into plain strict-
/// improvement replacement.
std::vector<Shift> tie_break_order(int radius) {
  std::vector<Shift> candidates;
  candidates.reserve(static_cast<std::size_t>(2 * radius + 1) *
                     (2 * radius + 1));
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      candidates.push_back({dx, dy});
  std::sort(candidates.begin(), candidates.end(),
            [](const Shift& a, const Shift& b) {
              return std::tuple(std::abs(a.dx) + std::abs(a.dy), a.dy, a.dx) <
                     std::tuple(std::abs(b.dx) + std::abs(b.dy), b.dy, b.dx);
            });
  return candidates;
}

struct SearchResult {
  Shift shift;
  u64 sad = 0;  // per-channel absolute differences, summed over the overlap
  u64 cnt = 0;  // overlap pixel count (not samples)
};

/// Normalized-SAD argmin over `candidates` for the destination rectangle
/// [x0,x1) x [y0,y1) of cur, sources taken from prev. Scores are compared
/// exactly as rationals (sad/cnt) by cross-multiplication; candidates whose
/// source window misses the frame entirely are skipped. Assumes candidates
/// are in tie-break order and that the first, (0,0), always overlaps.
SearchResult search_rect(const Frame& prev, const Frame& cur, int x0, int y0,
                         int x1, int y1, const std::vector<Shift>& candidates) {
  // Fast path: the first candidate in tie-break order whose overlap matches
  // byte-for-byte is the final answer — a zero ratio cannot be strictly
  // beaten, and any later zero-ratio candidate loses the tie-break. memcmp
  // bails at the first differing row, so a miss costs almost nothing and the
  // exhaustive scan below is reached only when no exact match exists.
  for (const Shift& s : candidates) {
    const int cl = std::max(x0, s.dx);
    const int ch = std::min(x1, prev.width + s.dx);
    const int rl = std::max(y0, s.dy);
    const int rh = std::min(y1, prev.height + s.dy);
    if (cl >= ch || rl >= rh) continue;

    bool equal = true;
    const std::size_t row_bytes = static_cast<std::size_t>(ch - cl) * 3;
    for (int r = rl; r < rh; ++r) {
      if (std::memcmp(cur.at(cl, r), prev.at(cl - s.dx, r - s.dy), row_bytes) !=
          0) {
        equal = false;
        break;
      }
    }
    if (equal) {
      const u64 cnt = static_cast<u64>(ch - cl) * static_cast<u64>(rh - rl);
      return {s, 0, cnt};
    }
  }

  SearchResult best;
  bool have_best = false;
  for (const Shift& s : candidates) {
    const int cl = std::max(x0, s.dx);
    const int ch = std::min(x1, prev.width + s.dx);
    const int rl = std::max(y0, s.dy);
    const int rh = std::min(y1, prev.height + s.dy);
    if (cl >= ch || rl >= rh) continue;  // no in-bounds source pixels

    const u64 cnt = static_cast<u64>(ch - cl) * static_cast<u64>(rh - rl);
    const std::size_t row_bytes = static_cast<std::size_t>(ch - cl) * 3;
    u64 sad = 0;
    bool lost = false;
    for (int r = rl; r < rh; ++r) {
      sad += row_sad(cur.at(cl, r), prev.at(cl - s.dx, r - s.dy), row_bytes);
      // A partial SAD already at/above the best ratio can only lose.
      if (have_best &&
          static_cast<u128>(sad) * best.cnt >=
              static_cast<u128>(best.sad) * cnt) {
        lost = true;
        break;
      }
    }
    if (lost) continue;
    if (!have_best || static_cast<u128>(sad) * best.cnt <
                          static_cast<u128>(best.sad) * cnt) {
      best = {s, sad, cnt};
      have_best = true;
      if (sad == 0) break;  // nothing can strictly beat an exact match
    }
  }
  return best;
}

void check_same_size(const Frame& prev, const Frame& cur) {
  validate(prev);
  validate(cur);
  if (!prev.same_size(cur))
    fail(ErrorCode::DimensionMismatch, "frame dimensions differ");
}

/// Redundancy test shared by the estimator and classify_blocks: the block's
/// source rectangle must be fully in-bounds and the mean absolute
/// per-channel difference must not exceed tau.
bool is_redundant(u64 sad, u64 cnt, const BlockRect& rect, double tau) {
  if (cnt != static_cast<u64>(rect.area())) return false;
  return static_cast<double>(sad) <= tau * 3.0 * static_cast<double>(rect.area());
}

}  // namespace

Shift estimate_global_shift(const Frame& prev, const Frame& cur, int radius) {
  check_same_size(prev, cur);
  if (radius < 0)
    fail(ErrorCode::InvalidArgument, "radius must be >= 0");
  if (radius >= std::min(prev.width, prev.height))
    fail(ErrorCode::InvalidArgument, "radius must be < min(width, height)");

  const std::vector<Shift> candidates = tie_break_order(radius);
  return search_rect(prev, cur, 0, 0, cur.width, cur.height, candidates).shift;
}

ShiftField estimate_grid_shifts(const Frame& prev_recon, const Frame& cur,
                                const GridSpec& grid, int radius, double tau) {
  check_same_size(prev_recon, cur);
  if (grid.block_w < 1 || grid.block_h < 1)
    fail(ErrorCode::InvalidArgument, "block dimensions must be >= 1");
  if (radius < 0)
    fail(ErrorCode::InvalidArgument, "radius must be >= 0");
  if (tau < 0)
    fail(ErrorCode::InvalidArgument, "tau must be >= 0");

  const std::vector<Shift> candidates = tie_break_order(radius);
  const int n_blocks = grid.block_count(cur.width, cur.height);

  ShiftField field;
  field.grid = grid;
  field.shifts.assign(static_cast<std::size_t>(n_blocks), Shift{});
  field.redundant.assign(static_cast<std::size_t>(n_blocks), 0);

  detail::parallel_for(0, n_blocks, [&](int i) {
    const BlockRect rect = block_rect(grid, cur.width, cur.height, i);
    const SearchResult best = search_rect(prev_recon, cur, rect.x0, rect.y0,
                                          rect.x1, rect.y1, candidates);
    if (is_redundant(best.sad, best.cnt, rect, tau)) {
      field.shifts[static_cast<std::size_t>(i)] = best.shift;
      field.redundant[static_cast<std::size_t>(i)] = 1;
    }
    // Raw blocks keep the default (0,0) shift.
  });
  return field;
}

ShiftField classify_blocks(const Frame& prev_recon, const Frame& cur,
                           const GridSpec& grid,
                           std::span<const Shift> block_shifts, double tau) {
  check_same_size(prev_recon, cur);
  if (grid.block_w < 1 || grid.block_h < 1)
    fail(ErrorCode::InvalidArgument, "block dimensions must be >= 1");
  if (tau < 0)
    fail(ErrorCode::InvalidArgument, "tau must be >= 0");
  const int n_blocks = grid.block_count(cur.width, cur.height);
  if (static_cast<int>(block_shifts.size()) != n_blocks)
    fail(ErrorCode::InvalidArgument,
         "expected one shift per block (" + std::to_string(n_blocks) + ")");

  ShiftField field;
  field.grid = grid;
  field.shifts.assign(static_cast<std::size_t>(n_blocks), Shift{});
  field.redundant.assign(static_cast<std::size_t>(n_blocks), 0);

  detail::parallel_for(0, n_blocks, [&](int i) {
    const Shift s = block_shifts[static_cast<std::size_t>(i)];
    const BlockRect rect = block_rect(grid, cur.width, cur.height, i);
    const bool in_bounds = rect.x0 - s.dx >= 0 && rect.y0 - s.dy >= 0 &&
                           rect.x1 - s.dx <= cur.width &&
                           rect.y1 - s.dy <= cur.height;
    if (!in_bounds) return;

    u64 sad = 0;
    const std::size_t row_bytes = static_cast<std::size_t>(rect.width()) * 3;
    for (int r = rect.y0; r < rect.y1; ++r)
      sad += row_sad(cur.at(rect.x0, r),
                     prev_recon.at(rect.x0 - s.dx, r - s.dy), row_bytes);
    if (is_redundant(sad, static_cast<u64>(rect.area()), rect, tau)) {
      field.shifts[static_cast<std::size_t>(i)] = s;
      field.redundant[static_cast<std::size_t>(i)] = 1;
    }
  });
  return field;
}

}  // namespace r2s
