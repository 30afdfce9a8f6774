// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"
#include "toric/stackyfan.hpp"

using namespace toric;

namespace {

ChartData load_charts(const std::string& name) {
  return io::parse_charts(
      io::read_document(std::filesystem::path(FIXTURES_DIR) / (name + ".json")).payload);
}

std::set<IntVector> ray_set(const std::vector<IntVector>& rays) {
  return {rays.begin(), rays.end()};
}

std::set<std::string> kinds(const FanReport& r) {
  std::set<std::string> out;
  for (const auto& v : r.violations) out.insert(v.kind);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInternal;
}

// Smooth iff every maximal cone of the fan on L is generated by part of a
// basis of L.
bool oracle_smooth(const StackyFan& sf) {
  for (const auto& idx : sf.fan.maximal_cones) {
    std::vector<IntVector> cols;
    for (std::size_t i : idx) cols.push_back(sf.fan.rays[i]);
    if (!oracle::saturated_basis(IntMatrix::from_columns(sf.fan.lattice_rank, cols)))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("fan validation examples") {
  const Fan halves{2, {{-1, 0}, {0, 1}, {1, 0}}, {{0, 1}, {1, 2}}};
  CHECK(validate_fan(halves).ok());
  CHECK(all_cones(halves).size() == 6);

  const Fan overlap{2, {{0, 1}, {1, 0}, {1, 1}, {1, 2}}, {{1, 3}, {0, 2}}};
  CHECK(kinds(validate_fan(overlap)).count("intersection_not_face"));

  CHECK(kinds(validate_fan(Fan{2, {{1}}, {{0}}})) == std::set<std::string>{"bad_ray_length"});
  CHECK(kinds(validate_fan(Fan{2, {{2, 0}}, {{0}}})).count("ray_not_primitive"));
  CHECK(kinds(validate_fan(Fan{2, {{1, 0}, {1, 0}}, {{0}, {1}}})).count("duplicate_ray"));
  CHECK(kinds(validate_fan(Fan{2, {{1, 0}}, {{3}}})).count("bad_index"));
  CHECK(kinds(validate_fan(Fan{1, {{1}, {-1}}, {{0, 1}}})).count("not_pointed"));
  CHECK(kinds(validate_fan(Fan{2, {{0, 1}, {1, 0}, {1, 1}}, {{0, 1, 2}}}))
            .count("ray_not_extreme"));
  CHECK(kinds(validate_fan(Fan{2, {{0, 1}, {1, 0}}, {{0}}})).count("unused_ray"));
  CHECK(kinds(validate_fan(Fan{2, {{0, 1}, {1, 0}}, {{0}, {0, 1}}})).count("not_maximal"));
}

TEST_CASE("glue: doubled line") {
  const StackyFan sf = glue(load_charts("doubled-line-charts"));
  CHECK(sf.target_rank == 1);
  CHECK(sf.fan.lattice_rank == 2);
  CHECK(ray_set(sf.fan.rays) == std::set<IntVector>{{1, 0}, {0, 1}});
  CHECK(sf.beta == IntMatrix::of({{1, 1}}, 2));
  CHECK(sf.fan.maximal_cones.size() == 2);
  CHECK(validate_fan(sf.fan).ok());
  CHECK(group_description(sf) == GroupDescription{1, {}});
  CHECK_FALSE(is_cohomologically_affine(sf));
  CHECK(is_smooth(sf));
  CHECK(canonical_cover(sf).beta == IntMatrix::of({{1, 1}}, 2));
}

TEST_CASE("glue: single chart and failure modes") {
  const StackyFan a1 = glue(load_charts("single-a1-chart"));
  CHECK(a1.fan.maximal_cones.size() == 1);
  CHECK(is_cohomologically_affine(a1));
  CHECK_FALSE(is_smooth(a1));

  CHECK(code_of([] { glue(load_charts("mismatched-betas-charts")); }) ==
        ErrorCode::kIncompatibleBetas);
  CHECK(code_of([] { glue(load_charts("doubled-plane-charts")); }) == ErrorCode::kNotTight);
  ChartData missing = load_charts("doubled-line-charts");
  missing.betas.erase("a");
  CHECK(code_of([&] { glue(missing); }) == ErrorCode::kInvalidArgument);
  ChartData shape = load_charts("doubled-line-charts");
  shape.betas["a"] = IntMatrix::of({{1, 0}}, 2);
  CHECK(code_of([&] { glue(shape); }) == ErrorCode::kInvalidArgument);
  ChartData torus = load_charts("doubled-line-charts");
  torus.target_rank = 2;
  torus.betas["0"] = IntMatrix(2, 0);
  torus.betas["a"] = IntMatrix::of({{1}, {0}}, 1);
  torus.betas["b"] = IntMatrix::of({{1}, {0}}, 1);
  CHECK(code_of([&] { glue(torus); }) == ErrorCode::kInfiniteCokernel);
}

TEST_CASE("canonical covers") {
  const Fan a1{2, {{1, 0}, {1, 2}}, {{0, 1}}};
  const StackyFan cover = canonical_cover(a1);
  CHECK(cover.beta == IntMatrix::of({{1, 1}, {0, 2}}, 2));
  CHECK(group_description(cover) == GroupDescription{0, {Integer(2)}});
  CHECK(is_smooth(cover));
  CHECK(validate_fan(cover.fan).ok());
  CHECK(code_of([] { canonical_cover(Fan{2, {{1, 0}}, {{0}}}); }) ==
        ErrorCode::kRaysDoNotSpan);
}

TEST_CASE("smoothness and groups of random complete fans") {
  gen::Rng rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const Fan f = gen::random_complete_fan(rng, n);
    REQUIRE(validate_fan(f).ok());
    const StackyFan plain{f, IntMatrix::identity(n), n};
    CHECK(is_smooth(plain) == oracle_smooth(plain));
    CHECK_FALSE(is_cohomologically_affine(plain));
    const StackyFan cover = canonical_cover(f);
    CHECK(is_smooth(cover));
    CHECK(oracle_smooth(cover));
    const GroupDescription g = group_description(cover);
    CHECK(g.torus_rank == f.rays.size() - n);
    std::vector<Integer> torsion;
    for (const auto& x : oracle::invariant_factors(IntMatrix::from_columns(n, f.rays)))
      if (x != 1) torsion.push_back(x);
    CHECK(g.torsion == torsion);
  }
}

TEST_CASE("single-cone charts reproduce the cone") {
  gen::Rng rng(409);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const Cone c = gen::random_pointed_cone(rng, n, 5);
    const StackyFan sf = glue(single_cone_charts(c));
    CHECK(sf.fan.maximal_cones.size() == 1);
    CHECK(is_cohomologically_affine(sf));
    const Cone image = Cone::from_rays(n, (sf.beta * sf.fan.cone(0).ray_matrix()).columns());
    CHECK(image == c);
    const bool simplicial_unimodular =
        c.rays().size() == n && abs(oracle::laplace_det(c.ray_matrix())) == 1;
    CHECK(is_smooth(sf) == simplicial_unimodular);
    CHECK(validate_fan(face_fan(c)).ok());
  }
}

TEST_CASE("glued random subfans") {
  gen::Rng rng(419);
  int glued = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    gen::GeneratedCharts g = gen::random_subfan_charts(rng, n, 6);
    const ColimitResult col = colimit(g.charts.diagram);
    if (col.colimit_rank < n) {
      CHECK(code_of([&] { glue(g.charts); }) == ErrorCode::kInfiniteCokernel);
      continue;
    }
    const StackyFan sf = glue(g.charts);
    ++glued;
    CHECK(validate_fan(sf.fan).ok());
    for (std::size_t k = 0; k < sf.fan.maximal_cones.size(); ++k)
      CHECK(is_face(col.cone, sf.fan.cone(k)));
    // The images in N are exactly the beta-images of the maximal member cones.
    std::set<Cone> member_images, got;
    for (const auto& [id, m] : g.charts.diagram.objects) {
      const IntMatrix coords = coordinates_in(gp(m), m.cone.ray_matrix());
      member_images.insert(Cone::from_rays(n, (g.charts.betas.at(id) * coords).columns()));
    }
    for (std::size_t k = 0; k < sf.fan.maximal_cones.size(); ++k)
      got.insert(Cone::from_rays(n, (sf.beta * sf.fan.cone(k).ray_matrix()).columns()));
    for (const auto& c : got) CHECK(member_images.count(c));
    for (const auto& c : member_images)
      CHECK(std::any_of(got.begin(), got.end(), [&](const Cone& t) { return is_face(t, c); }));
    CHECK(got.size() == sf.fan.maximal_cones.size());
  }
  CHECK(glued > 10);
}
