// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// Command layer shared by the C API and the tests. Each command returns a
// status and a JSON report; exceptions never escape.

#pragma once

#include <string_view>

#include "toric/io.hpp"

namespace toric::commands {

enum class Status { kOk = 0, kViolation = 1, kMalformed = 2, kInternal = 3 };

struct Outcome {
  Status status = Status::kOk;
  io::Json report;
};

Outcome validate(const io::Document& doc);
Outcome colimit(const io::Document& doc);
Outcome extend(const io::Document& doc);
Outcome glue(const io::Document& doc);
/// which: smooth | cohaffine | group | canonical.
Outcome check(const io::Document& doc, std::string_view which);

/// Report JSON for an exception escaping a library call.
Outcome from_exception(std::exception_ptr e);

io::Json to_json(const TightnessReport& r);
io::Json to_json(const FanReport& r);
io::Json to_json(const GroupDescription& g);

}  // namespace toric::commands
