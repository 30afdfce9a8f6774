// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>

#include "doctest.h"
#include "support/generators.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;
using io::Json;

namespace {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(FIXTURES_DIR) / (name + ".json");
}

std::string malformed_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformed);
    return e.what();
  }
  FAIL("expected a malformed-input error");
  return {};
}

io::Document doc_of(const Json& j) { return io::parse_document(j.dump()); }

}  // namespace

TEST_CASE("integers: small as numbers, large as strings") {
  CHECK(io::to_json(Integer(-42)) == Json(-42));
  const Integer edge("9007199254740991");
  CHECK(io::to_json(edge).is_number_integer());
  CHECK(io::to_json(Integer(edge + 1)) == Json("9007199254740992"));
  CHECK(io::to_json(Integer("-123456789012345678901234567890")) ==
        Json("-123456789012345678901234567890"));
  CHECK(io::parse_integer(Json("-123456789012345678901234567890"), "x") ==
        Integer("-123456789012345678901234567890"));
  CHECK(io::parse_integer(Json(7), "x") == 7);
  CHECK(io::parse_integer(Json(18446744073709551615ULL), "x") == Integer("18446744073709551615"));
  for (const Json& bad : {Json("1.5"), Json(""), Json("-"), Json(2.5), Json(true), Json("12a")})
    CHECK(malformed_message([&] { io::parse_integer(bad, "p.q"); }).starts_with("p.q:"));
}

TEST_CASE("matrices") {
  const IntMatrix m = IntMatrix::of({{1, 2, 3}, {4, 5, 6}}, 3);
  CHECK(io::parse_matrix(io::to_json(m), 2, 3, "m") == m);
  CHECK(io::parse_matrix(Json::array(), 1, 0, "m") == IntMatrix(1, 0));
  CHECK(malformed_message([] { io::parse_matrix(Json::array(), 2, 2, "m"); }).starts_with("m:"));
  CHECK(malformed_message([&] { io::parse_matrix(io::to_json(m), 3, 2, "m"); })
            .find("rows") != std::string::npos);
  CHECK(malformed_message([] { io::parse_matrix(Json::parse("[[1,2],[3]]"), 2, 2, "m"); })
            .starts_with("m[1]:"));
}

TEST_CASE("documents validate their envelope") {
  CHECK(malformed_message([] { io::parse_document("{\"kind\": \"cone\""); })
            .starts_with("input:"));
  CHECK(malformed_message([] {
          io::parse_document(R"({"kind":"sphere","version":"1","payload":{}})");
        }).starts_with("document.kind:"));
  CHECK(malformed_message([] {
          io::parse_document(R"({"kind":"cone","version":"2","payload":{}})");
        }).starts_with("document.version:"));
  CHECK(malformed_message([] { io::parse_document(R"({"kind":"cone","version":"1"})"); })
            .find("payload") != std::string::npos);
  CHECK(malformed_message([] { io::read_document(fixture("truncated")); })
            .starts_with("input:"));
  CHECK(malformed_message([] { io::read_document(fixture("does-not-exist")); })
            .find("cannot open") != std::string::npos);
}

TEST_CASE("payload errors carry a path") {
  const Json bad_ray = Json::parse(R"({"ambient_rank": 2, "rays": [[1, 0], [1]]})");
  CHECK(malformed_message([&] { io::parse_cone(bad_ray); }).starts_with("payload.rays[1]:"));
  const Json bad_monoid = Json::parse(
      R"({"lattice_rank": 2, "cone": {"ambient_rank": 3, "rays": []}})");
  CHECK(malformed_message([&] { io::parse_monoid(bad_monoid); }).starts_with("payload.cone:"));
  Json diagram = io::read_document(fixture("quadrant-face-diagram")).payload;
  diagram["morphisms"][3]["matrix"] = Json::parse("[[1], [0, 1]]");
  CHECK(malformed_message([&] { io::parse_diagram(diagram); })
            .starts_with("payload.morphisms[3].matrix[1]:"));
  // A well-formed matrix of the wrong shape parses; validation reports it.
  diagram["morphisms"][3]["matrix"] = Json::parse("[[1, 0]]");
  CHECK(validate_tight(io::parse_diagram(diagram)).has(Condition::kStructure));
  const Json req = Json::parse(
      R"({"kind":"functional-request","version":"1","payload":{"subdiagram":[]}})");
  CHECK(malformed_message([&] { io::parse_functional_request(doc_of(req)); })
            .find("exactly one") != std::string::npos);
  const Json func = Json::parse(R"({"lattice_rank": 2, "coefficients": [1]})");
  CHECK(malformed_message([&] { io::parse_functional(func); })
            .starts_with("payload.coefficients:"));
}

TEST_CASE("fixtures round-trip") {
  for (const char* name : {"quadrant-face-diagram", "quadrant-missing-zero", "octant-triple-glue",
                           "nat-coproduct"}) {
    const io::Document d = io::read_document(fixture(name));
    CHECK(d.kind == "diagram");
    const Diagram parsed = io::parse_diagram(d.payload);
    CHECK(io::parse_diagram(io::to_json(parsed)) == parsed);
  }
  for (const char* name : {"doubled-line-charts", "doubled-plane-charts", "single-a1-chart"}) {
    const ChartData c = io::parse_charts(io::read_document(fixture(name)).payload);
    const ChartData again = io::parse_charts(io::to_json(c));
    CHECK(again.diagram == c.diagram);
    CHECK(again.betas == c.betas);
    CHECK(again.target_rank == c.target_rank);
  }
  const StackyFan sf =
      io::parse_stackyfan(io::read_document(fixture("doubled-line-stackyfan")).payload);
  CHECK(io::parse_stackyfan(io::to_json(sf)) == sf);
  const Fan f = io::parse_fan(io::read_document(fixture("a1-cone-fan")).payload);
  CHECK(io::parse_fan(io::to_json(f)) == f);
}

TEST_CASE("functional requests resolve diagram files") {
  const io::Document d = io::read_document(fixture("extend-quadrant-positive"));
  const io::FunctionalRequest r = io::parse_functional_request(d);
  CHECK(r.diagram.objects.size() == 4);
  CHECK(r.subdiagram == std::set<std::string>{"zero", "e1"});
  CHECK(r.chi.at("e1") == IntVector{1});
  CHECK(r.mode == ExtensionMode::kNonnegPositiveAway);
  CHECK(io::mode_name(ExtensionMode::kArbitrary) == "arbitrary");

  Json inline_req{{"kind", "functional-request"},
                  {"version", "1"},
                  {"payload",
                   {{"diagram", io::to_json(r.diagram)},
                    {"subdiagram", {"zero"}},
                    {"mode", "arbitrary"}}}};
  const io::FunctionalRequest r2 = io::parse_functional_request(doc_of(inline_req));
  CHECK(r2.diagram == r.diagram);
  CHECK(r2.mode == ExtensionMode::kArbitrary);
  inline_req["payload"]["mode"] = "maybe";
  CHECK(malformed_message([&] { io::parse_functional_request(doc_of(inline_req)); })
            .starts_with("payload.mode:"));
}

TEST_CASE("random diagrams and big entries round-trip through text") {
  gen::Rng rng(503);
  for (int trial = 0; trial < 30; ++trial) {
    const Cone c = gen::random_pointed_cone(rng, gen::uniform(rng, 1, 4), 6);
    const Diagram d = gen::scrambled_face_diagram(rng, c, "x", 0.3).diagram;
    const std::string text = io::dump(io::make_document("diagram", io::to_json(d)));
    CHECK(text.back() == '\n');
    const io::Document back = io::parse_document(text);
    CHECK(io::parse_diagram(back.payload) == d);
    CHECK(io::dump(io::make_document("diagram", io::to_json(io::parse_diagram(back.payload)))) ==
          text);
  }
  Integer big("1");
  for (int i = 0; i < 70; ++i) big *= 3;
  const Cone c = Cone::from_rays(2, {IntVector{big, 1}, IntVector{1, 0}});
  const Json j = io::to_json(c);
  CHECK(j.dump().find('"' + Integer(big).get_str() + '"') != std::string::npos);
  CHECK(io::parse_cone(j) == c);
}
