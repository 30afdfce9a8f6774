// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// JSON documents: {"kind": ..., "version": "1", "payload": ...}. Integers
// beyond 2^53 - 1 in magnitude are written as decimal strings; either form
// is accepted on input.

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toric/cone.hpp"
#include "toric/diagram.hpp"
#include "toric/intlin.hpp"
#include "toric/monoid.hpp"
#include "toric/stackyfan.hpp"

namespace toric::io {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "1";

struct Document {
  std::string kind;
  Json payload;
  std::filesystem::path base_dir;  // for relative file references
};

struct FunctionalRequest {
  Diagram diagram;
  std::set<std::string> subdiagram;
  std::map<std::string, IntVector> chi;
  ExtensionMode mode = ExtensionMode::kNonnegPositiveAway;
};

struct FunctionalDocument {
  std::size_t lattice_rank = 0;
  IntVector coefficients;
};

/// Throws Error(kMalformed) on bad JSON, unknown kind or version.
Document parse_document(std::string_view text,
                        const std::filesystem::path& base_dir = {});
Document read_document(const std::filesystem::path& path);

// Payload decoders; all throw Error(kMalformed) with a JSON path prefix.
Integer parse_integer(const Json& j, const std::string& where);
IntVector parse_vector(const Json& j, const std::string& where);
/// Rows of equal length; an empty array is a rows x cols zero-size matrix
/// when rows * cols == 0.
IntMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                       const std::string& where);
Cone parse_cone(const Json& j, const std::string& where = "payload");
ToricMonoid parse_monoid(const Json& j, const std::string& where = "payload");
Diagram parse_diagram(const Json& j, const std::string& where = "payload");
Fan parse_fan(const Json& j, const std::string& where = "payload");
StackyFan parse_stackyfan(const Json& j, const std::string& where = "payload");
ChartData parse_charts(const Json& j, const std::string& where = "payload");
FunctionalRequest parse_functional_request(const Document& doc);
FunctionalDocument parse_functional(const Json& j,
                                    const std::string& where = "payload");

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);  // array of rows
Json to_json(const Cone& c);
Json to_json(const ToricMonoid& m);
Json to_json(const Diagram& d);
Json to_json(const Fan& f);
Json to_json(const StackyFan& sf);
Json to_json(const ChartData& c);
Json to_json(const FunctionalDocument& f);

Json make_document(std::string_view kind, Json payload);

/// Compact, key-sorted, newline-terminated.
std::string dump(const Json& j);

std::string_view mode_name(ExtensionMode mode);

}  // namespace toric::io
