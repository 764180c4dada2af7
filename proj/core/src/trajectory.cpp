// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/trajectory.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>

#include "r2s/errors.hpp"

namespace r2s {
namespace {

/// Strict full-consumption parse; returns false on any leftover characters.
template <typename T>
bool parse_number(std::string_view text, T& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

int round_half_away(double v, const std::string& context) {
  const long long r = std::llround(v);  // llround rounds halves away from zero
  if (r > kMaxShiftMagnitude || r < -kMaxShiftMagnitude)
    fail(ErrorCode::BadCsv, "shift component out of range in " + context);
  return static_cast<int>(r);
}

}  // namespace

TrajectorySet load_trajectories(const std::filesystem::path& path,
                                int n_frames, int n_points) {
  if (n_frames < 1)
    fail(ErrorCode::InvalidArgument, "n_frames must be >= 1");
  if (n_points < 1)
    fail(ErrorCode::InvalidArgument, "n_points must be >= 1");

  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path.string());

  auto next_line = [&in](std::string& line) -> bool {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  std::string line;
  if (!next_line(line) || line != "frame,point,dx,dy")
    fail(ErrorCode::BadCsv, "missing \"frame,point,dx,dy\" header");

  TrajectorySet set;
  set.n_points = n_points;
  set.shifts.assign(static_cast<std::size_t>(n_frames - 1),
                    std::vector<Shift>(static_cast<std::size_t>(n_points)));

  int line_no = 1;
  while (next_line(line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string context = "line " + std::to_string(line_no);

    std::string_view rest = line;
    std::string_view cells[4];
    for (int i = 0; i < 4; ++i) {
      const std::size_t comma = rest.find(',');
      if (i < 3) {
        if (comma == std::string_view::npos)
          fail(ErrorCode::BadCsv, "expected 4 fields at " + context);
        cells[i] = rest.substr(0, comma);
        rest = rest.substr(comma + 1);
      } else {
        if (comma != std::string_view::npos)
          fail(ErrorCode::BadCsv, "expected 4 fields at " + context);
        cells[i] = rest;
      }
    }

    int frame = 0;
    int point = 0;
    double dx = 0.0;
    double dy = 0.0;
    if (!parse_number(cells[0], frame) || !parse_number(cells[1], point) ||
        !parse_number(cells[2], dx) || !parse_number(cells[3], dy))
      fail(ErrorCode::BadCsv, "unparsable field at " + context);
    if (frame < 1 || frame > n_frames - 1)
      fail(ErrorCode::FrameIndexOutOfRange,
           "frame " + std::to_string(frame) + " at " + context);
    if (point < 0 || point >= n_points)
      fail(ErrorCode::PointIndexOutOfRange,
           "point " + std::to_string(point) + " at " + context);

    set.shifts[static_cast<std::size_t>(frame - 1)]
              [static_cast<std::size_t>(point)] = {
        round_half_away(dx, context), round_half_away(dy, context)};
  }
  return set;
}

}  // namespace r2s
