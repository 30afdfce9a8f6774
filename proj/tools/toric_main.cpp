// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// toric: command-line front end over the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/toric.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;

int exit_code(toric_status s) {
  switch (s) {
    case TORIC_OK: return kExitOk;
    case TORIC_VIOLATION:
    case TORIC_INTERNAL: return kExitViolation;
    default: return kExitMalformed;
  }
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string error_json(const char* name, const std::string& message) {
  nlohmann::json j{{"error", name}, {"message", message}};
  return j.dump() + "\n";
}

int run(const std::string& command, const std::string& input,
        const std::string& output, const std::string& which) {
  std::string text;
  std::string base_dir;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    base_dir = std::filesystem::current_path().string();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "toric: cannot open " << input << "\n";
      write_output(output, error_json("Malformed", "cannot open " + input));
      return kExitMalformed;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
    base_dir = std::filesystem::absolute(input).parent_path().string();
  }

  toric_document* doc = nullptr;
  if (toric_status s = toric_document_parse(text.data(), text.size(),
                                            base_dir.c_str(), &doc);
      s != TORIC_OK) {
    std::cerr << "toric: " << toric_last_error() << "\n";
    write_output(output, error_json(s == TORIC_MALFORMED ? "Malformed" : "InternalError",
                                    toric_last_error()));
    return exit_code(s);
  }

  toric_report* report = nullptr;
  toric_status s = TORIC_INTERNAL;
  if (command == "validate") s = toric_validate(doc, &report);
  else if (command == "colimit") s = toric_colimit(doc, &report);
  else if (command == "extend") s = toric_extend(doc, &report);
  else if (command == "glue") s = toric_glue(doc, &report);
  else if (command == "check") s = toric_check(doc, which.c_str(), &report);
  toric_document_free(doc);

  if (s != TORIC_OK && *toric_last_error() != '\0')
    std::cerr << "toric: " << toric_last_error() << "\n";
  bool written = true;
  if (report != nullptr) written = write_output(output, toric_report_json(report));
  toric_report_free(report);
  if (!written) {
    std::cerr << "toric: cannot write " << output << "\n";
    return kExitMalformed;
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric monoids, tight diagrams and stacky fans"};
  app.set_version_flag("--version", toric_version());
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string which;
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", input, "input document (default: stdin)");
    sub->add_option("--output,-o", output, "output path (default: stdout)");
    return sub;
  };
  add("validate", "check a diagram, charts, fan, stacky fan or monoid");
  add("colimit", "colimit of a tight diagram with face-embedding verdict");
  add("extend", "extend a functional from a join-closed subdiagram");
  add("glue", "glue charts into a stacky fan");
  add("check", "fan properties or the canonical smooth cover")
      ->add_option("--which", which, "smooth | cohaffine | group | canonical")
      ->required()
      ->check(CLI::IsMember({"smooth", "cohaffine", "group", "canonical"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }
  return run(app.get_subcommands().front()->get_name(), input, output, which);
}
