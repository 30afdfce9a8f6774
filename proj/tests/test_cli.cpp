// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "toric/io.hpp"

using namespace toric;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + TORIC_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string("\"") + FIXTURES_DIR + "/" + name + ".json\"";
}

Run on(const std::string& command, const std::string& name, const std::string& extra = "") {
  return run(command + " -i " + fixture(name) + (extra.empty() ? "" : " " + extra));
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(on("validate", "quadrant-face-diagram").exit_code == 0);
  CHECK(on("validate", "quadrant-missing-zero").exit_code == 1);
  CHECK(on("validate", "doubled-plane-charts").exit_code == 1);
  CHECK(on("validate", "truncated").exit_code == 2);
  CHECK(on("validate", "no-such-file").exit_code == 2);
  CHECK(on("colimit", "octant-triple-glue").exit_code == 0);
  CHECK(on("colimit", "quadrant-fan").exit_code == 2);
  CHECK(on("extend", "extend-quadrant-not-join-closed").exit_code == 1);
  CHECK(on("glue", "mismatched-betas-charts").exit_code == 1);
  CHECK(on("glue", "doubled-plane-charts").exit_code == 1);
  CHECK(on("check", "quadrant-fan", "--which smooth").exit_code == 0);
  CHECK(on("check", "quadrant-fan", "--which shiny").exit_code == 2);
  CHECK(on("check", "quadrant-fan").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--version").exit_code == 0);
}

TEST_CASE("outputs are deterministic and re-parse") {
  struct Case {
    const char* command;
    const char* fixture;
    const char* extra;
    const char* kind;
  };
  const Case cases[] = {
      {"colimit", "nat-coproduct", "", "monoid"},
      {"colimit", "octant-triple-glue", "", "monoid"},
      {"extend", "extend-quadrant-positive", "", "functional"},
      {"extend", "extend-quadrant-whole", "", "functional"},
      {"glue", "doubled-line-charts", "", "stackyfan"},
      {"glue", "single-a1-chart", "", "stackyfan"},
      {"check", "a1-cone-fan", "--which canonical", "stackyfan"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.fixture);
    const Run a = on(c.command, c.fixture, c.extra);
    const Run b = on(c.command, c.fixture, c.extra);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const io::Document d = io::parse_document(a.out);
    CHECK(d.kind == c.kind);
    const auto tmp = std::filesystem::temp_directory_path() / "toric-cli-test-reparse.json";
    std::ofstream(tmp) << a.out;
    CHECK(run("validate -i \"" + tmp.string() + "\"").exit_code == 0);
    std::filesystem::remove(tmp);
  }
}

TEST_CASE("report contents") {
  const io::Json glued = io::Json::parse(on("glue", "doubled-line-charts").out);
  CHECK(glued["payload"]["beta"] == io::Json::parse("[[1,1]]"));
  CHECK(glued["group"]["torus_rank"] == 1);
  CHECK(glued["is_cohomologically_affine"] == false);

  const io::Json plane = io::Json::parse(on("validate", "doubled-plane-charts").out);
  REQUIRE(plane["violations"].size() == 1);
  CHECK(plane["violations"][0]["condition"] == "T4");

  const io::Json ext = io::Json::parse(on("extend", "extend-quadrant-positive").out);
  CHECK(ext["payload"]["coefficients"] == io::Json::parse("[1,1]"));
  const io::Json witness = io::Json::parse(on("extend", "extend-quadrant-not-join-closed").out);
  CHECK(witness["witness"]["join"] == "quadrant");

  const io::Json group =
      io::Json::parse(on("check", "doubled-line-stackyfan", "--which group").out);
  CHECK(group["value"]["torus_rank"] == 1);
  const io::Json bad = io::Json::parse(on("validate", "truncated").out);
  CHECK(bad["error"] == "Malformed");
}

TEST_CASE("stdin input and file output") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "toric-cli-test-output.json").string();
  std::filesystem::remove(path);
  const Run r = run("colimit -o \"" + path + "\" < " + fixture("nat-coproduct"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == on("colimit", "nat-coproduct").out);
  std::filesystem::remove(path);
}
