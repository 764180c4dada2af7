// SPDX-FileCopyrightText: 2026 R2S Authors
// SPDX-License-Identifier: Apache-2.0

#include "r2s/errors.hpp"

namespace r2s {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::BadManifest: return "BadManifest";
    case ErrorCode::MissingFrameFile: return "MissingFrameFile";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::BadCsv: return "BadCsv";
    case ErrorCode::PointIndexOutOfRange: return "PointIndexOutOfRange";
    case ErrorCode::FrameIndexOutOfRange: return "FrameIndexOutOfRange";
    case ErrorCode::InconsistentField: return "InconsistentField";
    case ErrorCode::PayloadLengthMismatch: return "PayloadLengthMismatch";
    case ErrorCode::SourceOutOfBounds: return "SourceOutOfBounds";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::CrcMismatch: return "CrcMismatch";
    case ErrorCode::InconsistentLengths: return "InconsistentLengths";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace r2s
