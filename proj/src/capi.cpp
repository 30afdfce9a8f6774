// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/toric.h"

#include <exception>
#include <string>

#include "toric/commands.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

struct toric_document {
  toric::io::Document doc;
};

struct toric_report {
  std::string json;
};

namespace {

thread_local std::string last_error;

toric_status to_status(toric::commands::Status s) {
  return static_cast<toric_status>(static_cast<int>(s));
}

toric_status finish(const toric::commands::Outcome& outcome, toric_report** out) {
  if (outcome.status != toric::commands::Status::kOk && outcome.report.contains("message"))
    last_error = outcome.report["message"].get<std::string>();
  else
    last_error.clear();
  try {
    *out = new toric_report{toric::io::dump(outcome.report)};
  } catch (const std::exception& e) {
    last_error = e.what();
    *out = nullptr;
    return TORIC_INTERNAL;
  }
  return to_status(outcome.status);
}

template <typename F>
toric_status run(const toric_document* doc, toric_report** out, F&& command) {
  if (out == nullptr) {
    last_error = "null output pointer";
    return TORIC_INVALID_ARGUMENT;
  }
  *out = nullptr;
  if (doc == nullptr) {
    last_error = "null document";
    return TORIC_INVALID_ARGUMENT;
  }
  return finish(command(doc->doc), out);
}

}  // namespace

extern "C" {

toric_status toric_document_parse(const char* text, size_t length,
                                  const char* base_dir, toric_document** out) {
  if (out == nullptr || (text == nullptr && length != 0)) {
    last_error = "null argument";
    return TORIC_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto doc = toric::io::parse_document(std::string_view(text ? text : "", length),
                                         base_dir ? base_dir : "");
    *out = new toric_document{std::move(doc)};
    last_error.clear();
    return TORIC_OK;
  } catch (const toric::Error& e) {
    last_error = e.what();
    return e.code() == toric::ErrorCode::kInternal ? TORIC_INTERNAL : TORIC_MALFORMED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TORIC_INTERNAL;
  }
}

const char* toric_document_kind(const toric_document* doc) {
  return doc ? doc->doc.kind.c_str() : nullptr;
}

void toric_document_free(toric_document* doc) { delete doc; }

toric_status toric_validate(const toric_document* doc, toric_report** out) {
  return run(doc, out, toric::commands::validate);
}

toric_status toric_colimit(const toric_document* doc, toric_report** out) {
  return run(doc, out, toric::commands::colimit);
}

toric_status toric_extend(const toric_document* doc, toric_report** out) {
  return run(doc, out, toric::commands::extend);
}

toric_status toric_glue(const toric_document* doc, toric_report** out) {
  return run(doc, out, toric::commands::glue);
}

toric_status toric_check(const toric_document* doc, const char* which,
                         toric_report** out) {
  if (which == nullptr) {
    last_error = "null check name";
    if (out) *out = nullptr;
    return TORIC_INVALID_ARGUMENT;
  }
  return run(doc, out, [which](const toric::io::Document& d) {
    return toric::commands::check(d, which);
  });
}

const char* toric_report_json(const toric_report* report) {
  return report ? report->json.c_str() : nullptr;
}

void toric_report_free(toric_report* report) { delete report; }

const char* toric_last_error(void) { return last_error.c_str(); }

const char* toric_version(void) { return "0.1.0"; }

}  // extern "C"
