// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/container.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

#include "r2s/crc32.hpp"
#include "r2s/errors.hpp"
#include "r2s/region.hpp"

namespace r2s {
namespace {

void put_u8(std::vector<std::uint8_t>& out, std::uint8_t v) {
  out.push_back(v);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void put_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
}

void put_i16(std::vector<std::uint8_t>& out, std::int16_t v) {
  put_u16(out, static_cast<std::uint16_t>(v));
}

/// Bounds-checked little-endian cursor; every shortfall is a Truncated
/// error tagged with the frame being read (-1 while in the header).
struct Reader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
  int frame_index = -1;

  void need(std::size_t n, const char* what) {
    if (bytes.size() - pos < n)
      fail(ErrorCode::Truncated,
           std::string("unexpected end of data in ") + what, frame_index);
  }
  std::uint8_t get_u8(const char* what) {
    need(1, what);
    return bytes[pos++];
  }
  std::uint16_t get_u16(const char* what) {
    need(2, what);
    const std::uint16_t v = static_cast<std::uint16_t>(
        bytes[pos] | (static_cast<std::uint16_t>(bytes[pos + 1]) << 8));
    pos += 2;
    return v;
  }
  std::uint32_t get_u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(bytes[pos + i]) << (8 * i);
    pos += 4;
    return v;
  }
  std::int32_t get_i32(const char* what) {
    return static_cast<std::int32_t>(get_u32(what));
  }
  std::int16_t get_i16(const char* what) {
    return static_cast<std::int16_t>(get_u16(what));
  }
  std::span<const std::uint8_t> get_span(std::size_t n, const char* what) {
    need(n, what);
    auto s = bytes.subspan(pos, n);
    pos += n;
    return s;
  }
};

std::size_t grid_payload_bytes(const ShiftField& field, int w, int h) {
  std::size_t bytes = 0;
  const int n_blocks = field.grid.block_count(w, h);
  for (int i = 0; i < n_blocks; ++i)
    if (!field.redundant[static_cast<std::size_t>(i)])
      bytes +=
          static_cast<std::size_t>(block_rect(field.grid, w, h, i).area()) * 3;
  return bytes;
}

void check_stream_for_serialize(const R2SStream& stream) {
  validate(stream.first_frame);
  if (stream.first_frame.width != stream.width ||
      stream.first_frame.height != stream.height)
    fail(ErrorCode::DimensionMismatch,
         "first frame does not match the stream dimensions");
  if (stream.mode == Mode::global) {
    if (stream.grid != GridSpec{0, 0})
      fail(ErrorCode::InvalidArgument,
           "global-mode streams must carry grid {0,0}");
  } else if (stream.grid.block_w < 1 || stream.grid.block_h < 1) {
    fail(ErrorCode::InvalidArgument, "grid block dimensions must be >= 1");
  }

  for (std::size_t i = 0; i < stream.frames.size(); ++i) {
    const CompressedFrame& cf = stream.frames[i];
    const int frame_index = static_cast<int>(i) + 1;
    if (cf.mode != stream.mode)
      fail(ErrorCode::InvalidArgument, "frame mode differs from stream mode",
           frame_index);
    if (cf.mode == Mode::global) {
      const std::size_t expected =
          static_cast<std::size_t>(nonredundant_area(
              cf.global_shift, stream.width, stream.height)) *
          3;
      if (cf.payload.size() != expected)
        fail(ErrorCode::PayloadLengthMismatch,
             "payload does not match the region arithmetic", frame_index);
    } else {
      const std::size_t n_blocks = static_cast<std::size_t>(
          stream.grid.block_count(stream.width, stream.height));
      if (cf.field.grid != stream.grid || cf.field.shifts.size() != n_blocks ||
          cf.field.redundant.size() != n_blocks)
        fail(ErrorCode::InconsistentField,
             "shift field does not match the stream grid", frame_index);
      for (const Shift& s : cf.field.shifts)
        if (std::abs(s.dx) > kMaxShiftMagnitude ||
            std::abs(s.dy) > kMaxShiftMagnitude)
          fail(ErrorCode::InvalidArgument,
               "block shift exceeds 16-bit range", frame_index);
      if (cf.payload.size() !=
          grid_payload_bytes(cf.field, stream.width, stream.height))
        fail(ErrorCode::PayloadLengthMismatch,
             "payload does not match the block arithmetic", frame_index);
    }
  }
}

}  // namespace

std::size_t frame_record_size(const CompressedFrame& cf) {
  if (cf.mode == Mode::global) return 16 + cf.payload.size();
  return 5 * cf.field.shifts.size() + 8 + cf.payload.size();
}

std::vector<std::uint8_t> serialize_stream(const R2SStream& stream) {
  check_stream_for_serialize(stream);

  std::vector<std::uint8_t> out;
  std::size_t total = kContainerHeaderSize + stream.first_frame.byte_size();
  for (const CompressedFrame& cf : stream.frames)
    total += frame_record_size(cf);
  out.reserve(total);

  for (std::uint8_t m : kContainerMagic) put_u8(out, m);
  put_u16(out, kContainerVersion);
  put_u8(out, static_cast<std::uint8_t>(stream.mode));
  put_u32(out, static_cast<std::uint32_t>(stream.width));
  put_u32(out, static_cast<std::uint32_t>(stream.height));
  put_u32(out, static_cast<std::uint32_t>(stream.frames.size() + 1));
  put_u16(out, static_cast<std::uint16_t>(stream.grid.block_w));
  put_u16(out, static_cast<std::uint16_t>(stream.grid.block_h));
  put_u8(out, static_cast<std::uint8_t>(stream.tracker));
  put_u16(out, 0);  // reserved

  out.insert(out.end(), stream.first_frame.pixels.begin(),
             stream.first_frame.pixels.end());

  for (const CompressedFrame& cf : stream.frames) {
    const std::size_t record_start = out.size();
    if (cf.mode == Mode::global) {
      put_i32(out, cf.global_shift.dx);
      put_i32(out, cf.global_shift.dy);
    } else {
      for (std::size_t b = 0; b < cf.field.shifts.size(); ++b) {
        put_u8(out, cf.field.redundant[b] ? 0 : 1);
        put_i16(out, static_cast<std::int16_t>(cf.field.shifts[b].dx));
        put_i16(out, static_cast<std::int16_t>(cf.field.shifts[b].dy));
      }
    }
    const std::size_t meta_len = out.size() - record_start;
    put_u32(out, static_cast<std::uint32_t>(cf.payload.size()));
    out.insert(out.end(), cf.payload.begin(), cf.payload.end());

    // CRC covers the shift/block records and the payload, not the length.
    std::uint32_t crc = crc32_update(kCrc32Init, out.data() + record_start,
                                     meta_len);
    crc = crc32_update(crc, cf.payload.data(), cf.payload.size());
    put_u32(out, crc32_finalize(crc));
  }
  return out;
}

namespace {

ContainerHeader read_header(Reader& r) {
  r.need(4, "magic");
  if (!std::equal(kContainerMagic, kContainerMagic + 4, r.bytes.begin()))
    fail(ErrorCode::BadMagic, "magic is not \"R2SC\"");
  r.pos = 4;

  ContainerHeader h;
  h.version = r.get_u16("version");
  if (h.version != kContainerVersion)
    fail(ErrorCode::UnsupportedVersion,
         "version " + std::to_string(h.version) + " (supported: 1)");
  const std::uint8_t mode = r.get_u8("mode");
  if (mode > 1) fail(ErrorCode::MalformedHeader, "mode byte must be 0 or 1");
  h.mode = static_cast<Mode>(mode);
  h.width = r.get_u32("width");
  h.height = r.get_u32("height");
  constexpr std::uint32_t kMaxDim = 0x7FFFFFFFu;
  if (h.width < 1 || h.height < 1 || h.width > kMaxDim || h.height > kMaxDim)
    fail(ErrorCode::MalformedHeader, "frame dimensions out of range");
  h.frame_count = r.get_u32("frame_count");
  if (h.frame_count < 1)
    fail(ErrorCode::MalformedHeader, "frame_count must be >= 1");
  h.block_w = r.get_u16("block_w");
  h.block_h = r.get_u16("block_h");
  if (h.mode == Mode::global && (h.block_w != 0 || h.block_h != 0))
    fail(ErrorCode::MalformedHeader, "global mode requires zero grid fields");
  if (h.mode == Mode::grid && (h.block_w == 0 || h.block_h == 0))
    fail(ErrorCode::MalformedHeader, "grid mode requires nonzero grid fields");
  const std::uint8_t tracker = r.get_u8("tracker_id");
  if (tracker > 1)
    fail(ErrorCode::MalformedHeader, "tracker byte must be 0 or 1");
  h.tracker = static_cast<TrackerId>(tracker);
  if (r.get_u16("reserved") != 0)
    fail(ErrorCode::MalformedHeader, "reserved bytes must be zero");
  return h;
}

}  // namespace

R2SStream deserialize_stream(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  const ContainerHeader h = read_header(r);

  R2SStream stream;
  stream.width = static_cast<int>(h.width);
  stream.height = static_cast<int>(h.height);
  stream.mode = h.mode;
  stream.grid = GridSpec{h.block_w, h.block_h};
  stream.tracker = h.tracker;

  // Claim the raster span before allocating: a corrupt dimension field must
  // surface as Truncated, not as an attempted out-of-memory allocation.
  const std::size_t frame_bytes =
      static_cast<std::size_t>(h.width) * h.height * 3;
  const auto raster = r.get_span(frame_bytes, "first frame");
  stream.first_frame = Frame::allocate(stream.width, stream.height);
  std::copy(raster.begin(), raster.end(), stream.first_frame.pixels.begin());

  const std::size_t n_blocks =
      h.mode == Mode::grid
          ? static_cast<std::size_t>(
                stream.grid.block_count(stream.width, stream.height))
          : 0;

  const std::size_t meta_len = h.mode == Mode::global ? 8 : 5 * n_blocks;

  // Grow the record vector as records parse rather than trusting the header
  // count: a corrupt frame_count must run out of input (Truncated), not
  // drive a huge upfront allocation. Every record is at least meta_len + 8
  // bytes, which bounds how many the remaining input can hold.
  const std::size_t n_records = static_cast<std::size_t>(h.frame_count) - 1;
  stream.frames.reserve(
      std::min(n_records, bytes.size() / (meta_len + 8) + 1));
  for (std::size_t i = 0; i < n_records; ++i) {
    r.frame_index = static_cast<int>(i) + 1;
    CompressedFrame& cf = stream.frames.emplace_back();
    cf.mode = h.mode;

    const auto meta = r.get_span(meta_len, "shift records");
    const std::uint32_t payload_len = r.get_u32("payload length");
    const auto payload = r.get_span(payload_len, "payload");
    const std::uint32_t stored_crc = r.get_u32("crc");

    // Verify integrity before decoding, so corruption surfaces as
    // CrcMismatch rather than as some downstream inconsistency.
    std::uint32_t crc = crc32_update(kCrc32Init, meta.data(), meta.size());
    crc = crc32_update(crc, payload.data(), payload.size());
    if (crc32_finalize(crc) != stored_crc)
      fail(ErrorCode::CrcMismatch,
           "stored CRC does not match the record bytes", r.frame_index);

    if (h.mode == Mode::global) {
      Reader meta_reader{meta, 0, r.frame_index};
      cf.global_shift.dx = meta_reader.get_i32("global shift");
      cf.global_shift.dy = meta_reader.get_i32("global shift");
    } else {
      cf.field.grid = stream.grid;
      cf.field.shifts.resize(n_blocks);
      cf.field.redundant.resize(n_blocks);
      for (std::size_t b = 0; b < n_blocks; ++b) {
        const std::uint8_t* p = meta.data() + 5 * b;
        if (p[0] > 1)
          fail(ErrorCode::InconsistentField, "block flag byte must be 0 or 1",
               r.frame_index);
        cf.field.redundant[b] = p[0] == 0 ? 1 : 0;
        cf.field.shifts[b].dx = static_cast<std::int16_t>(
            static_cast<std::uint16_t>(p[1] | (p[2] << 8)));
        cf.field.shifts[b].dy = static_cast<std::int16_t>(
            static_cast<std::uint16_t>(p[3] | (p[4] << 8)));
      }
    }

    const std::size_t expected =
        h.mode == Mode::global
            ? static_cast<std::size_t>(nonredundant_area(
                  cf.global_shift, stream.width, stream.height)) *
                  3
            : grid_payload_bytes(cf.field, stream.width, stream.height);
    if (payload_len != expected)
      fail(ErrorCode::InconsistentLengths,
           "payload length " + std::to_string(payload_len) +
               " does not match the region arithmetic (" +
               std::to_string(expected) + ")",
           r.frame_index);
    cf.payload.assign(payload.begin(), payload.end());
  }

  if (r.pos != bytes.size())
    fail(ErrorCode::InconsistentLengths,
         std::to_string(bytes.size() - r.pos) +
             " trailing bytes after the last record");
  return stream;
}

ContainerInfo describe_container(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  ContainerInfo info;
  info.header = read_header(r);

  info.first_frame_bytes =
      static_cast<std::size_t>(info.header.width) * info.header.height * 3;
  r.get_span(info.first_frame_bytes, "first frame");

  const std::size_t n_blocks =
      info.header.mode == Mode::grid
          ? static_cast<std::size_t>(
                GridSpec{info.header.block_w, info.header.block_h}.block_count(
                    static_cast<int>(info.header.width),
                    static_cast<int>(info.header.height)))
          : 0;
  const std::size_t meta_len =
      info.header.mode == Mode::global ? 8 : 5 * n_blocks;

  for (std::size_t i = 0; i + 1 < info.header.frame_count; ++i) {
    r.frame_index = static_cast<int>(i) + 1;
    const std::size_t record_start = r.pos;
    r.get_span(meta_len, "record metadata");
    const std::uint32_t payload_len = r.get_u32("payload length");
    r.get_span(payload_len, "payload");
    r.get_u32("crc");
    info.record_sizes.push_back(r.pos - record_start);
  }
  if (r.pos != bytes.size())
    fail(ErrorCode::InconsistentLengths,
         std::to_string(bytes.size() - r.pos) +
             " trailing bytes after the last record");
  info.total_bytes = r.pos;
  return info;
}

}  // namespace r2s
