// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed r2s binary (path injected via R2S_CLI_PATH) as a
// subprocess and checks exit codes, stdout/stderr contracts and on-disk
// artifacts.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "r2s/codec.hpp"
#include "r2s/container.hpp"
#include "r2s/io_util.hpp"
#include "r2s/ppm.hpp"
#include "test_support.hpp"

namespace {

using r2s::Frame;
using r2s::FrameSequence;
using r2s::testing::make_pan_sequence;
using r2s::testing::random_frame;
using r2s::testing::TempDir;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Runs `r2s <args>` with stdout/stderr captured to files in `dir`.
CliResult run_cli(const TempDir& dir, const std::string& args) {
  const std::filesystem::path out_path = dir.path() / "cli_stdout.txt";
  const std::filesystem::path err_path = dir.path() / "cli_stderr.txt";
  const std::string cmd = std::string(R2S_CLI_PATH) + " " + args + " >" +
                          out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string write_clip(const TempDir& dir, const FrameSequence& seq,
                       const char* name = "in") {
  return r2s::write_sequence(seq, dir.path() / name).string();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

TEST(Cli, CompressDecompressRoundTripIsLossless) {
  std::mt19937 rng(1);
  const FrameSequence seq = make_pan_sequence(rng, 32, 24, 5, 1, 1);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string clip = (dir.path() / "clip.r2s").string();

  const CliResult compress = run_cli(
      dir, "compress --input " + manifest + " --output " + clip +
               " --radius 4");
  ASSERT_EQ(compress.exit_code, 0) << compress.err;
  EXPECT_NE(compress.out.find("frames=5 bytes="), std::string::npos)
      << compress.out;
  EXPECT_NE(compress.out.find("compression_pct="), std::string::npos);

  const std::string out_dir = (dir.path() / "out").string();
  const CliResult decompress =
      run_cli(dir, "decompress --input " + clip + " --output " + out_dir);
  ASSERT_EQ(decompress.exit_code, 0) << decompress.err;
  EXPECT_NE(decompress.out.find("frames=5 manifest="), std::string::npos)
      << decompress.out;

  const FrameSequence back =
      r2s::read_sequence(std::filesystem::path(out_dir) / "manifest");
  EXPECT_EQ(back.frames, seq.frames);
}

TEST(Cli, CompressReportsTheOnDiskByteCount) {
  std::mt19937 rng(2);
  const FrameSequence seq = make_pan_sequence(rng, 16, 16, 3, 1, 0);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string clip = (dir.path() / "clip.r2s").string();
  const CliResult result = run_cli(
      dir, "compress --input " + manifest + " --output " + clip +
               " --mode global --radius 4");
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const std::size_t on_disk = std::filesystem::file_size(clip);
  EXPECT_NE(result.out.find("bytes=" + std::to_string(on_disk)),
            std::string::npos)
      << result.out << " vs on-disk " << on_disk;
}

TEST(Cli, GlobalModeRejectsGridOnlyFlags) {
  TempDir dir;
  const CliResult result = run_cli(
      dir, "compress --input x --output y --mode global --tau 1");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("InvalidArgument"), std::string::npos)
      << result.err;
}

TEST(Cli, TrajectoryAndRadiusAreMutuallyExclusive) {
  TempDir dir;
  const CliResult result = run_cli(
      dir, "compress --input x --output y --trajectory t.csv --radius 4");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("InvalidArgument"), std::string::npos);
}

TEST(Cli, MalformedTrajectoryFailsWithBadCsv) {
  std::mt19937 rng(3);
  const FrameSequence seq = make_pan_sequence(rng, 16, 16, 3, 1, 0);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  write_text(dir.path() / "bad.csv", "frame,point\n1,0\n");
  const CliResult result = run_cli(
      dir, "compress --input " + manifest + " --output " +
               (dir.path() / "clip.r2s").string() + " --mode global" +
               " --trajectory " + (dir.path() / "bad.csv").string());
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("BadCsv"), std::string::npos) << result.err;
}

TEST(Cli, ExternalTrajectoryDrivesGlobalCompression) {
  std::mt19937 rng(4);
  const FrameSequence seq = make_pan_sequence(rng, 32, 24, 4, 2, 1);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  write_text(dir.path() / "traj.csv",
             "frame,point,dx,dy\n1,0,2,1\n2,0,2,1\n3,0,2,1\n");
  const std::string clip = (dir.path() / "clip.r2s").string();
  const CliResult compress = run_cli(
      dir, "compress --input " + manifest + " --output " + clip +
               " --mode global --trajectory " +
               (dir.path() / "traj.csv").string());
  ASSERT_EQ(compress.exit_code, 0) << compress.err;

  const CliResult inspect = run_cli(dir, "inspect --input " + clip);
  ASSERT_EQ(inspect.exit_code, 0) << inspect.err;
  EXPECT_NE(inspect.out.find("tracker=external"), std::string::npos)
      << inspect.out;

  const std::string out_dir = (dir.path() / "out").string();
  ASSERT_EQ(
      run_cli(dir, "decompress --input " + clip + " --output " + out_dir)
          .exit_code,
      0);
  EXPECT_EQ(r2s::read_sequence(std::filesystem::path(out_dir) / "manifest")
                .frames,
            seq.frames);
}

TEST(Cli, CorruptedContainerNamesTheFrame) {
  std::mt19937 rng(5);
  const FrameSequence seq = make_pan_sequence(rng, 16, 16, 4, 1, 1);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string clip = (dir.path() / "clip.r2s").string();
  ASSERT_EQ(run_cli(dir, "compress --input " + manifest + " --output " + clip +
                             " --mode global --radius 4")
                .exit_code,
            0);

  // Flip one payload byte of the first compressed record.
  std::vector<std::uint8_t> bytes = r2s::read_file(clip);
  const std::size_t payload0 = r2s::kContainerHeaderSize + 16 * 16 * 3 + 12;
  bytes[payload0] ^= 0x10;
  r2s::write_file(clip, bytes);

  const CliResult result = run_cli(
      dir, "decompress --input " + clip + " --output " +
               (dir.path() / "out").string());
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("CrcMismatch"), std::string::npos) << result.err;
  EXPECT_NE(result.err.find("(frame 1)"), std::string::npos) << result.err;
}

TEST(Cli, SingleFrameClipRoundTrips) {
  std::mt19937 rng(6);
  FrameSequence seq;
  seq.frames.push_back(random_frame(rng, 8, 8));
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string clip = (dir.path() / "clip.r2s").string();
  ASSERT_EQ(run_cli(dir, "compress --input " + manifest + " --output " + clip)
                .exit_code,
            0);
  const CliResult decompress = run_cli(
      dir, "decompress --input " + clip + " --output " +
               (dir.path() / "out").string());
  ASSERT_EQ(decompress.exit_code, 0) << decompress.err;
  EXPECT_NE(decompress.out.find("frames=1"), std::string::npos);
  EXPECT_EQ(r2s::read_sequence(dir.path() / "out" / "manifest").frames,
            seq.frames);
}

TEST(Cli, BenchWritesTheSweepCsv) {
  std::mt19937 rng(7);
  const FrameSequence seq = make_pan_sequence(rng, 32, 24, 9, 1, 0);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string csv_path = (dir.path() / "sweep.csv").string();
  const CliResult result = run_cli(
      dir, "bench --input " + manifest + " --output " + csv_path +
               " --strides 2,4 --radius 4");
  ASSERT_EQ(result.exit_code, 0) << result.err;
  EXPECT_NE(result.out.find("stride"), std::string::npos) << result.out;
  EXPECT_NE(result.out.find("compression_pct"), std::string::npos);

  const std::string csv = slurp(csv_path);
  std::istringstream lines(csv);
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line, "stride,compression_pct,loss_pct,ms_per_frame");
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line.rfind("2,", 0), 0u) << line;
  // Constant pan at stride 2: per-pair estimation is exact, zero loss.
  EXPECT_NE(line.find(",0.0000,"), std::string::npos) << line;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line.rfind("4,", 0), 0u) << line;
  EXPECT_FALSE(std::getline(lines, line)) << "unexpected extra row: " << line;
}

TEST(Cli, BenchRejectsOddStride) {
  std::mt19937 rng(8);
  const FrameSequence seq = make_pan_sequence(rng, 16, 16, 4, 1, 0);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const CliResult result = run_cli(
      dir, "bench --input " + manifest + " --output " +
               (dir.path() / "s.csv").string() + " --strides 3");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("InvalidArgument"), std::string::npos)
      << result.err;
}

TEST(Cli, BenchRejectsGridMode) {
  TempDir dir;
  const CliResult result = run_cli(
      dir, "bench --input x --output y --strides 2 --mode grid");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("InvalidArgument"), std::string::npos);
}

TEST(Cli, BenchSubstitutesStrideIntoTrajectoryPaths) {
  std::mt19937 rng(9);
  const FrameSequence seq = make_pan_sequence(rng, 16, 16, 5, 1, 0);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string rows = "frame,point,dx,dy\n1,0,1,0\n2,0,1,0\n3,0,1,0\n4,0,1,0\n";
  write_text(dir.path() / "traj_2.csv", rows);
  write_text(dir.path() / "traj_4.csv", rows);
  const std::string pattern = (dir.path() / "traj_{stride}.csv").string();
  const CliResult result = run_cli(
      dir, "bench --input " + manifest + " --output " +
               (dir.path() / "s.csv").string() + " --strides 2,4" +
               " --trajectory '" + pattern + "'");
  ASSERT_EQ(result.exit_code, 0) << result.err;
  // Exact shifts from both files: two lossless rows.
  const std::string csv = slurp(dir.path() / "s.csv");
  EXPECT_NE(csv.find("\n2,"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\n4,"), std::string::npos) << csv;
  EXPECT_EQ(result.out.find("nan"), std::string::npos);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line))
    EXPECT_NE(line.find(",0.0000,"), std::string::npos) << line;
}

TEST(Cli, InspectDumpsHeaderAndRecordSizes) {
  std::mt19937 rng(10);
  const FrameSequence seq = make_pan_sequence(rng, 64, 48, 3, 3, 2);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string clip = (dir.path() / "clip.r2s").string();
  ASSERT_EQ(run_cli(dir, "compress --input " + manifest + " --output " + clip +
                             " --radius 8")
                .exit_code,
            0);
  const CliResult result = run_cli(dir, "inspect --input " + clip);
  ASSERT_EQ(result.exit_code, 0) << result.err;
  EXPECT_NE(result.out.find("mode=grid\n"), std::string::npos) << result.out;
  EXPECT_NE(result.out.find("version=1\n"), std::string::npos);
  EXPECT_NE(result.out.find("width=64\n"), std::string::npos);
  EXPECT_NE(result.out.find("height=48\n"), std::string::npos);
  EXPECT_NE(result.out.find("frame_count=3\n"), std::string::npos);
  EXPECT_NE(result.out.find("block_w=16\n"), std::string::npos);
  EXPECT_NE(result.out.find("block_h=16\n"), std::string::npos);
  EXPECT_NE(result.out.find("tracker=builtin\n"), std::string::npos);
  EXPECT_NE(result.out.find("first_frame_bytes=9216\n"), std::string::npos);
  EXPECT_NE(result.out.find("frame_000001_bytes="), std::string::npos);
  EXPECT_NE(result.out.find("frame_000002_bytes="), std::string::npos);
  EXPECT_NE(result.out.find("total_bytes=" +
                            std::to_string(std::filesystem::file_size(clip))),
            std::string::npos);
}

TEST(Cli, InspectRejectsNonContainerInput) {
  std::mt19937 rng(11);
  TempDir dir;
  const std::filesystem::path ppm = dir.path() / "frame.ppm";
  r2s::write_file(ppm, r2s::encode_ppm(random_frame(rng, 4, 4)));
  const CliResult result = run_cli(dir, "inspect --input " + ppm.string());
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.err.find("BadMagic"), std::string::npos) << result.err;
}

TEST(Cli, ExportMaskedWritesOneDebugFramePerRecord) {
  std::mt19937 rng(12);
  const FrameSequence seq = make_pan_sequence(rng, 64, 48, 4, 3, 2);
  TempDir dir;
  const std::string manifest = write_clip(dir, seq);
  const std::string masked_dir = (dir.path() / "masked").string();
  const CliResult result = run_cli(
      dir, "compress --input " + manifest + " --output " +
               (dir.path() / "clip.r2s").string() +
               " --mode global --radius 8 --export-masked " + masked_dir);
  ASSERT_EQ(result.exit_code, 0) << result.err;
  for (int i = 1; i <= 3; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "masked_%06d.ppm", i);
    const std::filesystem::path path = std::filesystem::path(masked_dir) / name;
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    const Frame frame = r2s::decode_ppm(r2s::read_file(path));
    EXPECT_EQ(frame.width, 64);
    EXPECT_EQ(frame.height, 48);
  }
  EXPECT_FALSE(
      std::filesystem::exists(std::filesystem::path(masked_dir) / "masked_000004.ppm"));
}

TEST(Cli, MissingSubcommandFails) {
  TempDir dir;
  EXPECT_EQ(run_cli(dir, "").exit_code, 1);
}

TEST(Cli, HelpExitsCleanly) {
  TempDir dir;
  const CliResult result = run_cli(dir, "--help");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.out.find("compress"), std::string::npos);
}

TEST(Cli, UnknownFlagFails) {
  TempDir dir;
  EXPECT_EQ(run_cli(dir, "compress --input a --output b --wat").exit_code, 1);
}

}  // namespace
