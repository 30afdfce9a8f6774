// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/error.hpp"

namespace toric {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformed: return "Malformed";
    case ErrorCode::kDependentColumns: return "DependentColumns";
    case ErrorCode::kNotSaturated: return "NotSaturated";
    case ErrorCode::kNotPointed: return "NotPointed";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kNegativeOnFace: return "NegativeOnFace";
    case ErrorCode::kNotTight: return "NotTight";
    case ErrorCode::kNotTightSubdiagram: return "NotTightSubdiagram";
    case ErrorCode::kNotJoinClosed: return "NotJoinClosed";
    case ErrorCode::kIncompatibleFamily: return "IncompatibleFamily";
    case ErrorCode::kNegativeOnSub: return "NegativeOnSub";
    case ErrorCode::kIncompatibleBetas: return "IncompatibleBetas";
    case ErrorCode::kInfiniteCokernel: return "InfiniteCokernel";
    case ErrorCode::kRaysDoNotSpan: return "RaysDoNotSpan";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace toric
