// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "toric/error.hpp"

namespace toric::io {
namespace {

constexpr std::array<std::string_view, 8> kKinds = {
    "cone", "monoid", "diagram", "fan", "stackyfan", "charts",
    "functional-request", "functional"};

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kMalformed, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t parse_count(const Json& j, const std::string& where) {
  const Integer x = parse_integer(j, where);
  if (sgn(x) < 0 || !x.fits_ulong_p() || x > 1'000'000)
    malformed(where, "expected a small nonnegative integer");
  return x.get_ui();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array");
  return j;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string at(const std::string& where, const std::string& key) {
  return where + "." + key;
}

std::vector<std::size_t> parse_indices(const Json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i)
    out.push_back(parse_count(j[i], at(where, i)));
  return out;
}

// Shape is inferred from the rows; an empty array takes the fallback shape.
IntMatrix parse_matrix_inferred(const Json& j, std::size_t rows,
                                std::size_t cols, const std::string& where) {
  if (array_at(j, where).empty()) return IntMatrix(rows, cols);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_vector(j[i], at(where, i)));
    if (out.back().size() != out.front().size())
      malformed(at(where, i), "rows have different lengths");
  }
  return IntMatrix::from_rows(out, out.front().size());
}

}  // namespace

Integer parse_integer(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        s.find_first_not_of("0123456789", start) != std::string::npos)
      malformed(where, "expected a decimal integer string");
    return Integer(s);
  }
  malformed(where, "expected an integer");
}

IntVector parse_vector(const Json& j, const std::string& where) {
  IntVector v;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i)
    v.push_back(parse_integer(j[i], at(where, i)));
  return v;
}

IntMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                       const std::string& where) {
  if (array_at(j, where).empty()) {
    if (rows != 0 && cols != 0) malformed(where, "empty matrix, expected entries");
    return IntMatrix(rows, cols);
  }
  if (j.size() != rows)
    malformed(where, "expected " + std::to_string(rows) + " rows");
  IntMatrix m = parse_matrix_inferred(j, rows, cols, where);
  if (m.cols() != cols)
    malformed(where, "expected " + std::to_string(cols) + " columns");
  return m;
}

Cone parse_cone(const Json& j, const std::string& where) {
  const std::size_t n = parse_count(field(j, "ambient_rank", where), at(where, "ambient_rank"));
  const std::string rw = at(where, "rays");
  const Json& rays = array_at(field(j, "rays", where), rw);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    gens.push_back(parse_vector(rays[i], at(rw, i)));
    if (gens.back().size() != n)
      malformed(at(rw, i), "ray length differs from ambient_rank");
  }
  return Cone::from_rays(n, gens);
}

ToricMonoid parse_monoid(const Json& j, const std::string& where) {
  const std::size_t n = parse_count(field(j, "lattice_rank", where), at(where, "lattice_rank"));
  Cone c = parse_cone(field(j, "cone", where), at(where, "cone"));
  if (c.ambient_rank() != n)
    malformed(at(where, "cone"), "ambient_rank differs from lattice_rank");
  return ToricMonoid::make(n, std::move(c));
}

Diagram parse_diagram(const Json& j, const std::string& where) {
  Diagram d;
  const std::string ow = at(where, "objects");
  const Json& objects = field(j, "objects", where);
  if (!objects.is_object()) malformed(ow, "expected an object keyed by id");
  for (const auto& [id, m] : objects.items()) {
    if (id.empty()) malformed(ow, "object ids must be nonempty");
    d.objects.emplace(id, parse_monoid(m, at(ow, id)));
  }
  const std::string mw = at(where, "morphisms");
  const Json& morphisms = array_at(field(j, "morphisms", where), mw);
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const std::string w = at(mw, k);
    const Json& m = morphisms[k];
    const Json& from = field(m, "from", w);
    const Json& to = field(m, "to", w);
    if (!from.is_string() || !to.is_string())
      malformed(w, "\"from\" and \"to\" must be strings");
    Morphism f{from.get<std::string>(), to.get<std::string>(), {}};
    auto rank_of = [&](const std::string& id) {
      auto it = d.objects.find(id);
      return it == d.objects.end() ? std::size_t{0} : it->second.lattice_rank;
    };
    f.matrix = parse_matrix_inferred(field(m, "matrix", w), rank_of(f.to),
                                     rank_of(f.from), at(w, "matrix"));
    d.morphisms.push_back(std::move(f));
  }
  return d;
}

Fan parse_fan(const Json& j, const std::string& where) {
  Fan f;
  f.lattice_rank = parse_count(field(j, "lattice_rank", where), at(where, "lattice_rank"));
  const std::string rw = at(where, "rays");
  const Json& rays = array_at(field(j, "rays", where), rw);
  for (std::size_t i = 0; i < rays.size(); ++i)
    f.rays.push_back(parse_vector(rays[i], at(rw, i)));
  const std::string cw = at(where, "maximal_cones");
  const Json& cones = array_at(field(j, "maximal_cones", where), cw);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    auto idx = parse_indices(cones[k], at(cw, k));
    std::sort(idx.begin(), idx.end());
    f.maximal_cones.push_back(std::move(idx));
  }
  return f;
}

StackyFan parse_stackyfan(const Json& j, const std::string& where) {
  StackyFan sf;
  sf.fan = parse_fan(field(j, "fan", where), at(where, "fan"));
  sf.target_rank = parse_count(field(j, "target_rank", where), at(where, "target_rank"));
  sf.beta = parse_matrix(field(j, "beta", where), sf.target_rank,
                         sf.fan.lattice_rank, at(where, "beta"));
  return sf;
}

ChartData parse_charts(const Json& j, const std::string& where) {
  ChartData c;
  c.diagram = parse_diagram(j, where);
  c.target_rank = parse_count(field(j, "target_rank", where), at(where, "target_rank"));
  const std::string bw = at(where, "betas");
  const Json& betas = field(j, "betas", where);
  if (!betas.is_object()) malformed(bw, "expected an object keyed by id");
  for (const auto& [id, m] : betas.items()) {
    auto it = c.diagram.objects.find(id);
    const std::size_t cols = it == c.diagram.objects.end() ? 0 : gp(it->second).cols();
    c.betas.emplace(id, parse_matrix_inferred(m, c.target_rank, cols, at(bw, id)));
  }
  return c;
}

FunctionalRequest parse_functional_request(const Document& doc) {
  if (doc.kind != "functional-request")
    malformed("kind", "expected a functional-request document");
  const Json& j = doc.payload;
  const std::string where = "payload";
  FunctionalRequest r;
  const bool inline_diagram = j.is_object() && j.contains("diagram");
  const bool file_diagram = j.is_object() && j.contains("diagram_file");
  if (inline_diagram == file_diagram)
    malformed(where, "give exactly one of \"diagram\" and \"diagram_file\"");
  if (inline_diagram) {
    r.diagram = parse_diagram(j["diagram"], at(where, "diagram"));
  } else {
    const Json& path = j["diagram_file"];
    if (!path.is_string()) malformed(at(where, "diagram_file"), "expected a path string");
    const Document ref = read_document(doc.base_dir / path.get<std::string>());
    if (ref.kind != "diagram" && ref.kind != "charts")
      malformed(at(where, "diagram_file"), "referenced document is not a diagram");
    r.diagram = parse_diagram(ref.payload);
  }
  const std::string sw = at(where, "subdiagram");
  const Json& sub = array_at(field(j, "subdiagram", where), sw);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (!sub[i].is_string()) malformed(at(sw, i), "expected an object id");
    r.subdiagram.insert(sub[i].get<std::string>());
  }
  if (j.contains("chi")) {
    const std::string cw = at(where, "chi");
    if (!j["chi"].is_object()) malformed(cw, "expected an object keyed by id");
    for (const auto& [id, v] : j["chi"].items())
      r.chi.emplace(id, parse_vector(v, at(cw, id)));
  }
  if (j.contains("mode")) {
    const Json& mode = j["mode"];
    if (mode == "arbitrary") {
      r.mode = ExtensionMode::kArbitrary;
    } else if (mode == "nonneg_positive_away") {
      r.mode = ExtensionMode::kNonnegPositiveAway;
    } else {
      malformed(at(where, "mode"), "expected \"arbitrary\" or \"nonneg_positive_away\"");
    }
  }
  return r;
}

FunctionalDocument parse_functional(const Json& j, const std::string& where) {
  FunctionalDocument f;
  f.lattice_rank = parse_count(field(j, "lattice_rank", where), at(where, "lattice_rank"));
  f.coefficients = parse_vector(field(j, "coefficients", where), at(where, "coefficients"));
  if (f.coefficients.size() != f.lattice_rank)
    malformed(at(where, "coefficients"), "length differs from lattice_rank");
  return f;
}

Document parse_document(std::string_view text, const std::filesystem::path& base_dir) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) malformed("input", "not valid JSON");
  const Json& kind = field(j, "kind", "document");
  if (!kind.is_string() ||
      std::find(kKinds.begin(), kKinds.end(), kind.get<std::string>()) == kKinds.end())
    malformed("document.kind", "unknown kind");
  const Json& version = field(j, "version", "document");
  if (version != std::string(kFormatVersion))
    malformed("document.version", "unsupported format version");
  Document doc{kind.get<std::string>(), field(j, "payload", "document"), base_dir};
  return doc;
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.parent_path());
}

Json to_json(const Integer& x) {
  static const Integer kMax("9007199254740991");
  if (abs(x) <= kMax) return Json(static_cast<std::int64_t>(std::stoll(x.get_str())));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Cone& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  return Json{{"ambient_rank", c.ambient_rank()}, {"rays", std::move(rays)}};
}

Json to_json(const ToricMonoid& m) {
  return Json{{"lattice_rank", m.lattice_rank}, {"cone", to_json(m.cone)}};
}

Json to_json(const Diagram& d) {
  Json objects = Json::object();
  for (const auto& [id, m] : d.objects) objects[id] = to_json(m);
  Json morphisms = Json::array();
  for (const auto& f : d.morphisms)
    morphisms.push_back({{"from", f.from}, {"to", f.to}, {"matrix", to_json(f.matrix)}});
  return Json{{"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}};
}

Json to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  return Json{{"lattice_rank", f.lattice_rank},
              {"rays", std::move(rays)},
              {"maximal_cones", f.maximal_cones}};
}

Json to_json(const StackyFan& sf) {
  return Json{{"fan", to_json(sf.fan)},
              {"beta", to_json(sf.beta)},
              {"target_rank", sf.target_rank}};
}

Json to_json(const ChartData& c) {
  Json out = to_json(c.diagram);
  Json betas = Json::object();
  for (const auto& [id, b] : c.betas) betas[id] = to_json(b);
  out["betas"] = std::move(betas);
  out["target_rank"] = c.target_rank;
  return out;
}

Json to_json(const FunctionalDocument& f) {
  return Json{{"lattice_rank", f.lattice_rank}, {"coefficients", to_json(f.coefficients)}};
}

Json make_document(std::string_view kind, Json payload) {
  return Json{{"kind", std::string(kind)}, {"version", std::string(kFormatVersion)}, {"payload", std::move(payload)}};
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string_view mode_name(ExtensionMode mode) {
  return mode == ExtensionMode::kArbitrary ? "arbitrary" : "nonneg_positive_away";
}

}  // namespace toric::io
