// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/ppm.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "r2s/errors.hpp"
#include "r2s/io_util.hpp"

namespace r2s {
namespace {

constexpr std::int64_t kMaxDimension = 0x7FFFFFFF;

bool is_ppm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

/// Cursor over the PPM header. Comments run from '#' to end of line and are
/// legal wherever whitespace is.
struct HeaderScanner {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < bytes.size()) {
      if (is_ppm_space(bytes[pos])) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::int64_t read_int() {
    skip_space_and_comments();
    if (pos >= bytes.size() || !std::isdigit(bytes[pos]))
      fail(ErrorCode::MalformedHeader, "expected integer in PPM header");
    std::int64_t value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > kMaxDimension)
        fail(ErrorCode::MalformedHeader, "PPM header value out of range");
      ++pos;
    }
    return value;
  }
};

}  // namespace

Frame decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    fail(ErrorCode::MalformedHeader, "not a binary PPM (magic != P6)");

  HeaderScanner sc{bytes, 2};
  const std::int64_t width = sc.read_int();
  const std::int64_t height = sc.read_int();
  const std::int64_t maxval = sc.read_int();
  if (width < 1 || height < 1)
    fail(ErrorCode::MalformedHeader, "PPM dimensions must be >= 1");
  if (maxval != 255)
    fail(ErrorCode::MalformedHeader, "only maxval 255 is supported");

  // Exactly one whitespace byte separates the header from the raster.
  if (sc.pos >= bytes.size() || !is_ppm_space(bytes[sc.pos]))
    fail(ErrorCode::MalformedHeader, "missing separator before raster");
  ++sc.pos;

  const std::size_t raster =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3;
  if (bytes.size() - sc.pos < raster)
    fail(ErrorCode::TruncatedPayload, "raster shorter than W*H*3 bytes");

  Frame frame = Frame::allocate(static_cast<int>(width),
                                static_cast<int>(height));
  std::copy(bytes.begin() + sc.pos, bytes.begin() + sc.pos + raster,
            frame.pixels.begin());
  return frame;
}

std::vector<std::uint8_t> encode_ppm(const Frame& frame) {
  validate(frame);
  char header[48];
  const int n = std::snprintf(header, sizeof header, "P6\n%d %d\n255\n",
                              frame.width, frame.height);
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n) + frame.pixels.size());
  out.insert(out.end(), header, header + n);
  out.insert(out.end(), frame.pixels.begin(), frame.pixels.end());
  return out;
}

FrameSequence read_sequence(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in)
    fail(ErrorCode::BadManifest,
         "cannot open manifest " + manifest_path.string());

  auto next_line = [&in](std::string& line) -> bool {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  std::string line;
  if (!next_line(line) || line != "R2S-MANIFEST v1")
    fail(ErrorCode::BadManifest, "first line must be \"R2S-MANIFEST v1\"");

  FrameSequence seq;
  const std::filesystem::path base = manifest_path.parent_path();
  bool first_content_line = true;
  while (next_line(line)) {
    if (line.empty()) continue;
    if (first_content_line && line.rfind("fps ", 0) == 0) {
      first_content_line = false;
      std::istringstream fps_in(line.substr(4));
      int fps = 0;
      char trailing;
      if (!(fps_in >> fps) || fps < 1 || fps_in >> trailing)
        fail(ErrorCode::BadManifest, "bad fps line: " + line);
      seq.fps = fps;
      continue;
    }
    first_content_line = false;

    const std::filesystem::path frame_path = base / line;
    if (!std::filesystem::exists(frame_path))
      fail(ErrorCode::MissingFrameFile, frame_path.string());
    Frame frame = decode_ppm(read_file(frame_path));
    if (!seq.frames.empty() && !frame.same_size(seq.frames.front()))
      fail(ErrorCode::DimensionMismatch,
           line + " differs in size from the first frame");
    seq.frames.push_back(std::move(frame));
  }
  if (seq.frames.empty())
    fail(ErrorCode::BadManifest, "manifest lists no frames");
  return seq;
}

std::filesystem::path write_sequence(const FrameSequence& seq,
                                     const std::filesystem::path& dir) {
  validate(seq);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    fail(ErrorCode::IoFailure, "cannot create directory " + dir.string());

  std::string manifest = "R2S-MANIFEST v1\n";
  if (seq.fps) manifest += "fps " + std::to_string(*seq.fps) + "\n";
  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%06zu.ppm", i);
    write_file(dir / name, encode_ppm(seq.frames[i]));
    manifest += name;
    manifest += '\n';
  }

  const std::filesystem::path manifest_path = dir / "manifest";
  write_file(manifest_path,
             std::span(reinterpret_cast<const std::uint8_t*>(manifest.data()),
                       manifest.size()));
  return manifest_path;
}

}  // namespace r2s
