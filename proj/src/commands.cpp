// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/commands.hpp"

#include <exception>
#include <functional>
#include <string>
#include <utility>

#include "toric/error.hpp"

namespace toric::commands {
namespace {

using io::Json;

Outcome ok(Json report) { return {Status::kOk, std::move(report)}; }

Outcome error_outcome(Status s, ErrorCode code, const std::string& message,
                      Json extra = Json::object()) {
  Json report = std::move(extra);
  report["error"] = std::string(error_name(code));
  report["message"] = message;
  return {s, std::move(report)};
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (...) {
    return from_exception(std::current_exception());
  }
}

void require_kind(const io::Document& doc, std::initializer_list<std::string_view> kinds) {
  for (auto k : kinds)
    if (doc.kind == k) return;
  std::string expected;
  for (auto k : kinds) expected += (expected.empty() ? "" : ", ") + std::string(k);
  throw Error(ErrorCode::kMalformed,
              "document.kind: \"" + doc.kind + "\" is not accepted here (expected " +
                  expected + ")");
}

Json violation_report(Json violations, Json extra = Json::object()) {
  extra["ok"] = false;
  extra["violations"] = std::move(violations);
  return extra;
}

Outcome from_fan_report(const FanReport& r) {
  if (r.ok()) return ok(Json{{"ok", true}});
  return {Status::kViolation, to_json(r)};
}

Json stacky_document(const StackyFan& sf) {
  Json doc = io::make_document("stackyfan", io::to_json(sf));
  doc["is_smooth"] = is_smooth(sf);
  doc["is_cohomologically_affine"] = is_cohomologically_affine(sf);
  doc["group"] = to_json(group_description(sf));
  return doc;
}

StackyFan stacky_input(const io::Document& doc) {
  require_kind(doc, {"fan", "stackyfan"});
  if (doc.kind == "fan") {
    Fan f = io::parse_fan(doc.payload);
    const std::size_t n = f.lattice_rank;
    return StackyFan{std::move(f), IntMatrix::identity(n), n};
  }
  return io::parse_stackyfan(doc.payload);
}

}  // namespace

Json to_json(const TightnessReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"condition", std::string(condition_name(v.condition))},
                          {"objects", v.objects},
                          {"detail", v.detail}});
  Json out{{"convention", std::string(TightnessReport::kFaceConvention)}};
  if (r.ok()) {
    out["ok"] = true;
    out["violations"] = Json::array();
    return out;
  }
  return violation_report(std::move(violations), std::move(out));
}

Json to_json(const FanReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"condition", v.kind}, {"cones", v.cones}, {"detail", v.detail}});
  if (r.ok()) return Json{{"ok", true}, {"violations", Json::array()}};
  return violation_report(std::move(violations));
}

Json to_json(const GroupDescription& g) {
  return Json{{"torus_rank", g.torus_rank}, {"torsion", io::to_json(g.torsion)}};
}

Outcome from_exception(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const NotTightError& err) {
    return error_outcome(Status::kViolation, err.code(), err.what(),
                         Json{{"report", to_json(err.report())}});
  } catch (const NotJoinClosedError& err) {
    const JoinWitness& w = err.witness();
    Json witness{{"first", w.first},
                 {"second", w.second},
                 {"over", w.over},
                 {"join", w.join.empty() ? Json(nullptr) : Json(w.join)},
                 {"join_rays", io::to_json(w.join_rays.transpose())}};
    return error_outcome(Status::kViolation, err.code(), err.what(),
                         Json{{"witness", std::move(witness)}});
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::kMalformed:
      case ErrorCode::kInvalidArgument:
        return error_outcome(Status::kMalformed, err.code(), err.what());
      case ErrorCode::kInternal:
        return error_outcome(Status::kInternal, err.code(), err.what());
      default:
        return error_outcome(Status::kViolation, err.code(), err.what());
    }
  } catch (const nlohmann::json::exception& err) {
    return error_outcome(Status::kMalformed, ErrorCode::kMalformed, err.what());
  } catch (const std::exception& err) {
    return error_outcome(Status::kInternal, ErrorCode::kInternal, err.what());
  } catch (...) {
    return error_outcome(Status::kInternal, ErrorCode::kInternal, "unknown exception");
  }
}

Outcome validate(const io::Document& doc) {
  return guarded([&]() -> Outcome {
    if (doc.kind == "diagram") {
      const TightnessReport r = validate_tight(io::parse_diagram(doc.payload));
      if (r.ok()) return ok(Json{{"ok", true}});
      return {Status::kViolation, to_json(r)};
    }
    if (doc.kind == "charts") {
      const ChartData charts = io::parse_charts(doc.payload);
      if (const TightnessReport r = validate_tight(charts.diagram); !r.ok())
        return {Status::kViolation, to_json(r)};
      try {
        glue(charts);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kMalformed || e.code() == ErrorCode::kInvalidArgument ||
            e.code() == ErrorCode::kInternal)
          throw;
        Json v = Json::array();
        v.push_back({{"condition", std::string(error_name(e.code()))},
                     {"objects", Json::array()},
                     {"detail", e.what()}});
        return {Status::kViolation, violation_report(std::move(v))};
      }
      return ok(Json{{"ok", true}});
    }
    if (doc.kind == "fan") return from_fan_report(validate_fan(io::parse_fan(doc.payload)));
    if (doc.kind == "stackyfan") {
      const StackyFan sf = io::parse_stackyfan(doc.payload);
      FanReport r = validate_fan(sf.fan);
      if (cokernel_invariants(sf.beta).free_rank != 0)
        r.violations.push_back({"infinite_cokernel", {}, "beta has infinite cokernel"});
      return from_fan_report(r);
    }
    if (doc.kind == "monoid") {
      io::parse_monoid(doc.payload);
      return ok(Json{{"ok", true}});
    }
    if (doc.kind == "cone") {
      io::parse_cone(doc.payload);
      return ok(Json{{"ok", true}});
    }
    if (doc.kind == "functional") {
      io::parse_functional(doc.payload);
      return ok(Json{{"ok", true}});
    }
    const io::FunctionalRequest req = io::parse_functional_request(doc);
    const TightnessReport r = validate_tight(req.diagram);
    if (r.ok()) return ok(Json{{"ok", true}});
    return {Status::kViolation, to_json(r)};
  });
}

Outcome colimit(const io::Document& doc) {
  return guarded([&]() -> Outcome {
    require_kind(doc, {"diagram", "charts"});
    const Diagram d = io::parse_diagram(doc.payload);
    const ColimitResult c = toric::colimit(d);
    const FaceEmbeddingReport check = verify_face_embeddings(d, c);

    Json out = io::make_document(
        "monoid", io::to_json(ToricMonoid::make(c.colimit_rank, c.cone)));
    out["colimit_rank"] = c.colimit_rank;
    Json embeddings = Json::object();
    Json bases = Json::object();
    for (const auto& [id, m] : c.embeddings) embeddings[id] = io::to_json(m);
    for (const auto& [id, m] : c.gp_bases) bases[id] = io::to_json(m.transpose());
    out["embeddings"] = std::move(embeddings);
    out["gp_bases"] = std::move(bases);
    Json issues = Json::array();
    for (const auto& i : check.issues)
      issues.push_back({{"object", i.object}, {"detail", i.detail}});
    out["face_embeddings"] = Json{{"ok", check.ok()}, {"issues", std::move(issues)}};
    return {check.ok() ? Status::kOk : Status::kInternal, std::move(out)};
  });
}

Outcome extend(const io::Document& doc) {
  return guarded([&]() -> Outcome {
    require_kind(doc, {"functional-request"});
    const io::FunctionalRequest req = io::parse_functional_request(doc);
    const DiagramExtension ext =
        extend_diagram_functional(req.diagram, req.subdiagram, req.chi, req.mode);

    Json out = io::make_document(
        "functional", io::to_json(io::FunctionalDocument{ext.colimit_rank,
                                                         ext.functional.coefficients}));
    out["mode"] = std::string(io::mode_name(req.mode));
    Json certificate = Json::object();
    for (const auto& e : ext.certificate) {
      if (!certificate.contains(e.object)) certificate[e.object] = Json::array();
      certificate[e.object].push_back({{"ray", io::to_json(e.ray)},
                                       {"value", io::to_json(e.value)},
                                       {"required_positive", e.required_positive}});
    }
    out["certificate"] = std::move(certificate);
    Json per_object = Json::object();
    for (const auto& [id, v] : ext.per_object) per_object[id] = io::to_json(v);
    out["per_object"] = std::move(per_object);
    Json trace = Json::array();
    for (const auto& s : ext.trace)
      trace.push_back({{"extended", s.extended},
                       {"from", s.from ? Json(*s.from) : Json(nullptr)},
                       {"added", s.added}});
    out["trace"] = std::move(trace);
    return ok(std::move(out));
  });
}

Outcome glue(const io::Document& doc) {
  return guarded([&]() -> Outcome {
    require_kind(doc, {"charts"});
    return ok(stacky_document(toric::glue(io::parse_charts(doc.payload))));
  });
}

Outcome check(const io::Document& doc, std::string_view which) {
  return guarded([&]() -> Outcome {
    const StackyFan sf = stacky_input(doc);
    if (which != "smooth" && which != "cohaffine" && which != "group" &&
        which != "canonical")
      throw Error(ErrorCode::kInvalidArgument,
                  "--which must be one of smooth, cohaffine, group, canonical");
    if (const FanReport r = validate_fan(sf.fan); !r.ok())
      return {Status::kViolation, to_json(r)};
    Json out{{"which", std::string(which)}};
    if (which == "smooth") {
      out["value"] = is_smooth(sf);
    } else if (which == "cohaffine") {
      out["value"] = is_cohomologically_affine(sf);
    } else if (which == "group") {
      out["value"] = to_json(group_description(sf));
    } else {
      out = stacky_document(canonical_cover(sf));
      out["which"] = "canonical";
    }
    return ok(std::move(out));
  });
}

}  // namespace toric::commands
