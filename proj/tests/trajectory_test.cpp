// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/trajectory.hpp"

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "r2s/errors.hpp"
#include "r2s/shift.hpp"
#include "test_support.hpp"

namespace {

using r2s::ErrorCode;
using r2s::load_trajectories;
using r2s::Shift;
using r2s::TrajectorySet;
using r2s::testing::ExpectError;
using r2s::testing::TempDir;

std::filesystem::path write_csv(const TempDir& dir, const std::string& body) {
  const std::filesystem::path path = dir.path() / "traj.csv";
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

TEST(Trajectory, ParsesIntegerRows) {
  TempDir dir;
  const auto path =
      write_csv(dir, "frame,point,dx,dy\n1,0,3,2\n2,0,-1,0\n");
  const TrajectorySet set = load_trajectories(path, 3, 1);
  ASSERT_EQ(set.shifts.size(), 2u);
  EXPECT_EQ(set.shifts[0][0], (Shift{3, 2}));
  EXPECT_EQ(set.shifts[1][0], (Shift{-1, 0}));
}

TEST(Trajectory, RoundsHalfAwayFromZero) {
  TempDir dir;
  const auto path = write_csv(
      dir, "frame,point,dx,dy\n1,0,2.5,-1.5\n2,0,2.49,-0.5\n3,0,-2.5,0.4\n");
  const TrajectorySet set = load_trajectories(path, 4, 1);
  EXPECT_EQ(set.shifts[0][0], (Shift{3, -2}));
  EXPECT_EQ(set.shifts[1][0], (Shift{2, -1}));
  EXPECT_EQ(set.shifts[2][0], (Shift{-3, 0}));
}

TEST(Trajectory, MissingEntriesDefaultToZero) {
  TempDir dir;
  const auto path = write_csv(dir, "frame,point,dx,dy\n2,1,4,4\n");
  const TrajectorySet set = load_trajectories(path, 4, 3);
  ASSERT_EQ(set.shifts.size(), 3u);
  for (const auto& row : set.shifts) ASSERT_EQ(row.size(), 3u);
  EXPECT_EQ(set.shifts[0][0], (Shift{0, 0}));
  EXPECT_EQ(set.shifts[1][1], (Shift{4, 4}));
  EXPECT_EQ(set.shifts[1][0], (Shift{0, 0}));
  EXPECT_EQ(set.shifts[2][2], (Shift{0, 0}));
}

TEST(Trajectory, HeaderOnlyFileIsAllZeros) {
  TempDir dir;
  const auto path = write_csv(dir, "frame,point,dx,dy\n");
  const TrajectorySet set = load_trajectories(path, 10, 1);
  ASSERT_EQ(set.shifts.size(), 9u);
  for (const auto& row : set.shifts) EXPECT_EQ(row[0], (Shift{0, 0}));
}

TEST(Trajectory, AcceptsBlankTrailingLines) {
  TempDir dir;
  const auto path = write_csv(dir, "frame,point,dx,dy\n1,0,1,1\n\n");
  const TrajectorySet set = load_trajectories(path, 2, 1);
  EXPECT_EQ(set.shifts[0][0], (Shift{1, 1}));
}

TEST(Trajectory, RejectsPointIndexOutOfRange) {
  TempDir dir;
  // A 64x48 frame at 16x16 blocks has 12 points (0..11); 13 overflows.
  const auto path = write_csv(dir, "frame,point,dx,dy\n1,13,0,0\n");
  ExpectError([&] { load_trajectories(path, 5, 12); },
              ErrorCode::PointIndexOutOfRange);
  const auto negative = write_csv(dir, "frame,point,dx,dy\n1,-1,0,0\n");
  ExpectError([&] { load_trajectories(negative, 5, 12); },
              ErrorCode::PointIndexOutOfRange);
}

TEST(Trajectory, RejectsFrameIndexOutOfRange) {
  TempDir dir;
  // Frame 0 has no incoming shift; frame n-1 is the last valid target.
  const auto zero = write_csv(dir, "frame,point,dx,dy\n0,0,1,1\n");
  ExpectError([&] { load_trajectories(zero, 5, 1); },
              ErrorCode::FrameIndexOutOfRange);
  const auto high = write_csv(dir, "frame,point,dx,dy\n5,0,1,1\n");
  ExpectError([&] { load_trajectories(high, 5, 1); },
              ErrorCode::FrameIndexOutOfRange);
  EXPECT_NO_THROW(load_trajectories(
      write_csv(dir, "frame,point,dx,dy\n4,0,1,1\n"), 5, 1));
}

TEST(Trajectory, RejectsBadHeader) {
  TempDir dir;
  ExpectError(
      [&] {
        load_trajectories(write_csv(dir, "frame,dx,dy\n1,1,1\n"), 5, 1);
      },
      ErrorCode::BadCsv);
  ExpectError(
      [&] { load_trajectories(write_csv(dir, ""), 5, 1); }, ErrorCode::BadCsv);
}

TEST(Trajectory, RejectsMalformedRows) {
  TempDir dir;
  const char* bad_bodies[] = {
      "frame,point,dx,dy\n1,0,1\n",          // 3 fields
      "frame,point,dx,dy\n1,0,1,1,1\n",      // 5 fields
      "frame,point,dx,dy\n1,0,x,1\n",        // non-numeric dx
      "frame,point,dx,dy\n1.5,0,1,1\n",      // fractional frame index
      "frame,point,dx,dy\none,0,1,1\n",      // non-numeric frame
      "frame,point,dx,dy\n1,0,1,1 tail\n",   // trailing junk
  };
  for (const char* body : bad_bodies) {
    SCOPED_TRACE(std::string("body: ") + body);
    ExpectError([&] { load_trajectories(write_csv(dir, body), 5, 1); },
                ErrorCode::BadCsv);
  }
}

TEST(Trajectory, RejectsShiftBeyondEncodableRange) {
  TempDir dir;
  const auto path = write_csv(dir, "frame,point,dx,dy\n1,0,40000,0\n");
  ExpectError([&] { load_trajectories(path, 5, 1); }, ErrorCode::BadCsv);
  const auto edge = write_csv(dir, "frame,point,dx,dy\n1,0,32767,-32767\n");
  EXPECT_EQ(load_trajectories(edge, 5, 1).shifts[0][0],
            (Shift{32767, -32767}));
}

TEST(Trajectory, MissingFileIsAnIoFailure) {
  TempDir dir;
  ExpectError([&] { load_trajectories(dir.path() / "none.csv", 5, 1); },
              ErrorCode::IoFailure);
}

}  // namespace
