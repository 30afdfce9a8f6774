// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  kInvalidArgument,
  kMalformed,
  kDependentColumns,
  kNotSaturated,
  kNotPointed,
  kNotAFace,
  kNegativeOnFace,
  kNotTight,
  kNotTightSubdiagram,
  kNotJoinClosed,
  kIncompatibleFamily,
  kNegativeOnSub,
  kIncompatibleBetas,
  kInfiniteCokernel,
  kRaysDoNotSpan,
  kInternal,
};

/// Stable name of an error code, as it appears in JSON reports.
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toric
