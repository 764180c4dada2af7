// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0
//
// r2s — command-line front end for the R2S video toolkit.
//
//   r2s compress   --input seq/manifest --output clip.r2s [--mode grid]
//   r2s decompress --input clip.r2s --output outdir
//   r2s bench      --input seq/manifest --output sweep.csv --strides 2,8,16
//   r2s inspect    --input clip.r2s
//
// Diagnostics go to stderr, data and summaries to stdout; the exit status
// is 0 on success and 1 on any failure.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "r2s/codec.hpp"
#include "r2s/container.hpp"
#include "r2s/errors.hpp"
#include "r2s/io_util.hpp"
#include "r2s/metrics.hpp"
#include "r2s/ppm.hpp"
#include "r2s/trajectory.hpp"

namespace {

struct CliConfig {
  std::string input;
  std::string output;
  std::string mode = "grid";
  int radius = 16;
  double tau = 0.0;
  int block_w = 16;
  int block_h = 16;
  std::vector<int> strides;
  std::string trajectory;
  std::string export_masked;
};

/// Replaces every literal "{stride}" in a trajectory path, so bench can
/// consume one CSV per stride.
std::string substitute_stride(std::string path, int stride) {
  const std::string token = "{stride}";
  for (std::size_t pos = path.find(token); pos != std::string::npos;
       pos = path.find(token, pos))
    path.replace(pos, token.size(), std::to_string(stride));
  return path;
}

r2s::Mode parse_mode(const std::string& mode) {
  if (mode == "global") return r2s::Mode::global;
  if (mode == "grid") return r2s::Mode::grid;
  r2s::fail(r2s::ErrorCode::InvalidArgument,
            "mode must be \"global\" or \"grid\", got \"" + mode + "\"");
}

int run_compress(const CliConfig& cfg, bool radius_given) {
  const r2s::Mode mode = parse_mode(cfg.mode);
  if (!cfg.trajectory.empty() && radius_given)
    r2s::fail(r2s::ErrorCode::InvalidArgument,
              "--trajectory replaces the built-in estimator; --radius "
              "cannot be combined with it");

  const r2s::FrameSequence seq = r2s::read_sequence(cfg.input);

  r2s::CompressConfig config;
  config.mode = mode;
  config.radius = cfg.radius;
  config.tau = cfg.tau;
  config.grid = {cfg.block_w, cfg.block_h};
  if (!cfg.trajectory.empty()) {
    const int n_points =
        mode == r2s::Mode::grid
            ? config.grid.block_count(seq.frames.front().width,
                                      seq.frames.front().height)
            : 1;
    config.trajectories = r2s::load_trajectories(
        cfg.trajectory, static_cast<int>(seq.frames.size()), n_points);
  }

  const r2s::R2SStream stream = r2s::compress_video(seq, config);
  const std::vector<std::uint8_t> bytes = r2s::serialize_stream(stream);
  r2s::write_file(cfg.output, bytes);

  if (!cfg.export_masked.empty()) {
    std::filesystem::create_directories(cfg.export_masked);
    for (std::size_t i = 0; i < stream.frames.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "masked_%06zu.ppm", i + 1);
      r2s::write_file(std::filesystem::path(cfg.export_masked) / name,
                      r2s::encode_ppm(r2s::export_masked_frame(
                          stream.frames[i], stream.width, stream.height)));
    }
  }

  const r2s::MetricsReport report = r2s::compression_percent(stream);
  std::printf("frames=%zu bytes=%zu compression_pct=%.4f\n",
              stream.frames.size() + 1, bytes.size(),
              report.aggregate.compression_pct);
  return 0;
}

int run_decompress(const CliConfig& cfg) {
  const std::vector<std::uint8_t> bytes = r2s::read_file(cfg.input);
  const r2s::R2SStream stream = r2s::deserialize_stream(bytes);
  const r2s::FrameSequence seq = r2s::decompress_video(stream);
  const std::filesystem::path manifest =
      r2s::write_sequence(seq, cfg.output);
  std::printf("frames=%zu manifest=%s\n", seq.frames.size(),
              manifest.string().c_str());
  return 0;
}

int run_bench(const CliConfig& cfg, bool radius_given) {
  if (parse_mode(cfg.mode) != r2s::Mode::global)
    r2s::fail(r2s::ErrorCode::InvalidArgument,
              "bench runs the global-mode pipeline; --mode grid is not "
              "supported");
  if (!cfg.trajectory.empty() && radius_given)
    r2s::fail(r2s::ErrorCode::InvalidArgument,
              "--trajectory replaces the built-in estimator; --radius "
              "cannot be combined with it");

  const r2s::FrameSequence seq = r2s::read_sequence(cfg.input);

  r2s::SweepConfig config;
  config.radius = cfg.radius;
  if (!cfg.trajectory.empty()) {
    const std::string pattern = cfg.trajectory;
    const int n_frames = static_cast<int>(seq.frames.size());
    config.trajectories_for_stride = [pattern, n_frames](int stride) {
      return r2s::load_trajectories(substitute_stride(pattern, stride),
                                    n_frames, 1);
    };
  }

  const std::vector<r2s::SweepRow> rows =
      r2s::stride_sweep(seq, cfg.strides, config);
  const std::string csv = r2s::sweep_csv(rows);
  r2s::write_file(cfg.output,
                  std::span(reinterpret_cast<const std::uint8_t*>(csv.data()),
                            csv.size()));

  std::printf("%6s  %15s  %8s  %12s\n", "stride", "compression_pct",
              "loss_pct", "ms_per_frame");
  for (const r2s::SweepRow& row : rows)
    std::printf("%6d  %15.4f  %8.4f  %12.4f\n", row.stride,
                row.compression_pct, row.loss_pct, row.ms_per_frame);
  return 0;
}

int run_inspect(const CliConfig& cfg) {
  const std::vector<std::uint8_t> bytes = r2s::read_file(cfg.input);
  const r2s::ContainerInfo info = r2s::describe_container(bytes);

  std::printf("mode=%s\n",
              info.header.mode == r2s::Mode::global ? "global" : "grid");
  std::printf("version=%u\n", info.header.version);
  std::printf("width=%u\n", info.header.width);
  std::printf("height=%u\n", info.header.height);
  std::printf("frame_count=%u\n", info.header.frame_count);
  std::printf("block_w=%u\n", info.header.block_w);
  std::printf("block_h=%u\n", info.header.block_h);
  std::printf("tracker=%s\n",
              info.header.tracker == r2s::TrackerId::builtin ? "builtin"
                                                             : "external");
  std::printf("first_frame_bytes=%zu\n", info.first_frame_bytes);
  std::printf("total_bytes=%zu\n", info.total_bytes);
  for (std::size_t i = 0; i < info.record_sizes.size(); ++i)
    std::printf("frame_%06zu_bytes=%zu\n", i + 1, info.record_sizes[i]);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R2S video compression toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;

  CLI::App* compress =
      app.add_subcommand("compress", "Compress a PPM sequence to a .r2s file");
  compress->add_option("--input", cfg.input, "Sequence manifest")->required();
  compress->add_option("--output", cfg.output, "Output .r2s path")->required();
  compress->add_option("--mode", cfg.mode, "global or grid (default grid)");
  CLI::Option* compress_radius = compress->add_option(
      "--radius", cfg.radius, "Search radius of the built-in estimator");
  CLI::Option* compress_tau = compress->add_option(
      "--tau", cfg.tau, "Redundancy threshold (grid mode; 0 = lossless)");
  CLI::Option* compress_bw =
      compress->add_option("--block-w", cfg.block_w, "Block width (grid mode)");
  CLI::Option* compress_bh = compress->add_option("--block-h", cfg.block_h,
                                                  "Block height (grid mode)");
  compress->add_option("--trajectory", cfg.trajectory,
                       "External tracker CSV (replaces the estimator)");
  compress->add_option("--export-masked", cfg.export_masked,
                       "Directory for masked debug frames");

  CLI::App* decompress = app.add_subcommand(
      "decompress", "Decompress a .r2s file to a PPM sequence");
  decompress->add_option("--input", cfg.input, "Input .r2s path")->required();
  decompress->add_option("--output", cfg.output, "Output directory")
      ->required();

  CLI::App* bench = app.add_subcommand(
      "bench", "Stride sweep: compression/loss trade-off as CSV");
  bench->add_option("--input", cfg.input, "Sequence manifest")->required();
  bench->add_option("--output", cfg.output, "Output CSV path")->required();
  bench->add_option("--strides", cfg.strides, "Comma-separated even strides")
      ->required()
      ->delimiter(',');
  CLI::Option* bench_radius = bench->add_option(
      "--radius", cfg.radius, "Search radius of the built-in estimator");
  std::string bench_mode = "global";
  bench->add_option("--mode", bench_mode, "Must be global for bench");
  bench->add_option("--trajectory", cfg.trajectory,
                    "Per-stride tracker CSV; \"{stride}\" is substituted");

  CLI::App* inspect =
      app.add_subcommand("inspect", "Print container header and record sizes");
  inspect->add_option("--input", cfg.input, "Input .r2s path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (compress->parsed()) {
      if (cfg.mode == "global" &&
          (compress_tau->count() > 0 || compress_bw->count() > 0 ||
           compress_bh->count() > 0))
        r2s::fail(r2s::ErrorCode::InvalidArgument,
                  "--tau/--block-w/--block-h apply to grid mode only");
      return run_compress(cfg, compress_radius->count() > 0);
    }
    if (decompress->parsed()) return run_decompress(cfg);
    if (bench->parsed()) {
      cfg.mode = bench_mode;
      return run_bench(cfg, bench_radius->count() > 0);
    }
    if (inspect->parsed()) return run_inspect(cfg);
  } catch (const r2s::Error& e) {
    if (e.frame_index() >= 0)
      std::fprintf(stderr, "error: %s (frame %d)\n", e.what(),
                   e.frame_index());
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
