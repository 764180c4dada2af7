// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace r2s {

enum class ErrorCode {
  // Frame and sequence I/O.
  MalformedHeader,
  TruncatedPayload,
  BadManifest,
  MissingFrameFile,
  DimensionMismatch,
  IoFailure,
  // Trajectory ingestion.
  BadCsv,
  PointIndexOutOfRange,
  FrameIndexOutOfRange,
  // Compression / reconstruction.
  InconsistentField,
  PayloadLengthMismatch,
  SourceOutOfBounds,
  // Container format.
  BadMagic,
  UnsupportedVersion,
  Truncated,
  CrcMismatch,
  InconsistentLengths,
  // Metrics.
  ShapeMismatch,
  // Violated call preconditions (bad radius, odd stride, ...).
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Toolkit-wide exception. `frame_index` is >= 0 when the failure is tied to
/// one frame of the video (e.g. a CRC mismatch in a container record).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int frame_index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        frame_index_(frame_index) {}

  ErrorCode code() const { return code_; }
  int frame_index() const { return frame_index_; }

 private:
  ErrorCode code_;
  int frame_index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              int frame_index = -1) {
  throw Error(code, message, frame_index);
}

}  // namespace r2s
