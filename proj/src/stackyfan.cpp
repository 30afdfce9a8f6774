// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/stackyfan.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "toric/error.hpp"
#include "toric/monoid.hpp"

namespace toric {
namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

// Fan indices of the rays of `sub`, which must all be fan rays.
std::vector<std::size_t> fan_indices(const std::vector<IntVector>& fan_rays,
                                     const std::vector<IntVector>& sub) {
  std::vector<std::size_t> out;
  for (const auto& r : sub) {
    auto it = std::find(fan_rays.begin(), fan_rays.end(), r);
    if (it == fan_rays.end())
      throw Error(ErrorCode::kInternal, "cone ray is not a fan ray");
    out.push_back(static_cast<std::size_t>(it - fan_rays.begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cone Fan::cone(std::size_t k) const {
  std::vector<IntVector> gens;
  for (std::size_t i : maximal_cones.at(k)) gens.push_back(rays.at(i));
  return Cone::from_rays(lattice_rank, gens);
}

FanReport validate_fan(const Fan& f) {
  FanReport report;
  auto flag = [&](std::string kind, std::vector<std::size_t> cones,
                  std::string detail) {
    report.violations.push_back({std::move(kind), std::move(cones), std::move(detail)});
  };

  bool rays_ok = true;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const IntVector& r = f.rays[i];
    if (r.size() != f.lattice_rank) {
      flag("bad_ray_length", {}, "ray " + std::to_string(i) + " has the wrong length");
      rays_ok = false;
      continue;
    }
    if (content(r) != 1)
      flag("ray_not_primitive", {}, "ray " + std::to_string(i) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[j] == r)
        flag("duplicate_ray", {}, "rays " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
  }
  if (!rays_ok) return report;

  std::vector<std::optional<Cone>> cones(f.maximal_cones.size());
  std::vector<char> used(f.rays.size(), 0);
  for (std::size_t k = 0; k < f.maximal_cones.size(); ++k) {
    const auto& idx = f.maximal_cones[k];
    std::set<std::size_t> distinct(idx.begin(), idx.end());
    if (distinct.size() != idx.size() ||
        std::any_of(idx.begin(), idx.end(),
                    [&](std::size_t i) { return i >= f.rays.size(); })) {
      flag("bad_index", {k}, "cone " + index_list(idx) + " has a bad ray index");
      continue;
    }
    for (std::size_t i : idx) used[i] = 1;
    try {
      cones[k] = f.cone(k);
    } catch (const Error&) {
      flag("not_pointed", {k}, "cone " + index_list(idx) + " contains a line");
      continue;
    }
    for (std::size_t i : idx)
      if (!std::binary_search(cones[k]->rays().begin(), cones[k]->rays().end(),
                              primitive(f.rays[i])))
        flag("ray_not_extreme", {k},
             "ray " + std::to_string(i) + " is not extreme in cone " + index_list(idx));
  }
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!used[i]) flag("unused_ray", {}, "ray " + std::to_string(i) + " lies in no cone");

  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!cones[a] || !cones[b]) continue;
      const Cone meet = intersect(*cones[a], *cones[b]);
      if (!is_face(*cones[a], meet) || !is_face(*cones[b], meet)) {
        flag("intersection_not_face", {a, b},
             "cones " + std::to_string(a) + " and " + std::to_string(b) +
                 " meet outside a common face");
        continue;
      }
      if (meet == *cones[a] || meet == *cones[b])
        flag("not_maximal", {a, b},
             "one of cones " + std::to_string(a) + " and " + std::to_string(b) +
                 " is a face of the other");
    }
  return report;
}

std::vector<std::vector<std::size_t>> all_cones(const Fan& f) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < f.maximal_cones.size(); ++k) {
    const Cone c = f.cone(k);
    for (const auto& face : face_index_sets(c)) {
      std::vector<IntVector> rays;
      for (std::size_t i : face) rays.push_back(c.rays()[i]);
      out.insert(fan_indices(f.rays, rays));
    }
  }
  std::vector<std::vector<std::size_t>> sorted(out.begin(), out.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return sorted;
}

StackyFan glue(const ChartData& charts) {
  const Diagram& d = charts.diagram;
  if (auto report = validate_tight(d); !report.ok())
    throw NotTightError(std::move(report));

  std::map<std::string, IntMatrix> bases;
  std::map<std::string, IntMatrix> betas;
  for (const auto& [id, m] : d.objects) {
    IntMatrix basis = gp(m);
    auto it = charts.betas.find(id);
    if (it == charts.betas.end()) {
      if (basis.cols() != 0)
        throw Error(ErrorCode::kInvalidArgument, "no beta given for object " + id);
      betas.emplace(id, IntMatrix(charts.target_rank, 0));
    } else {
      if (it->second.rows() != charts.target_rank ||
          it->second.cols() != basis.cols())
        throw Error(ErrorCode::kInvalidArgument,
                    "beta for object " + id + " has the wrong shape");
      betas.emplace(id, it->second);
    }
    bases.emplace(id, std::move(basis));
  }
  for (const auto& [id, b] : charts.betas)
    if (!d.objects.count(id))
      throw Error(ErrorCode::kInvalidArgument, "beta given for unknown object " + id);

  for (const auto& f : d.morphisms) {
    const IntMatrix x = coordinates_in(bases.at(f.to), f.matrix * bases.at(f.from));
    if (!(betas.at(f.to) * x == betas.at(f.from)))
      throw Error(ErrorCode::kIncompatibleBetas,
                  "betas of " + f.from + " and " + f.to + " disagree on the overlap");
  }

  const ColimitResult col = colimit(d);
  IntMatrix beta;
  try {
    beta = descend(d, col, betas, charts.target_rank);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIncompatibleFamily) throw;
    throw Error(ErrorCode::kIncompatibleBetas, "betas do not descend to the colimit");
  }
  if (cokernel_invariants(beta).free_rank != 0)
    throw Error(ErrorCode::kInfiniteCokernel, "glued beta has infinite cokernel");

  std::set<std::string> maximal;
  for (const auto& [id, m] : d.objects) maximal.insert(id);
  for (const auto& f : d.morphisms) maximal.erase(f.from);

  std::vector<Cone> images;
  std::set<IntVector> ray_set;
  for (const auto& id : maximal) {
    images.push_back(col.image_of(id, d));
    ray_set.insert(images.back().rays().begin(), images.back().rays().end());
  }
  StackyFan sf;
  sf.fan.lattice_rank = col.colimit_rank;
  sf.fan.rays.assign(ray_set.begin(), ray_set.end());
  std::set<std::vector<std::size_t>> cones;
  for (const auto& c : images) cones.insert(fan_indices(sf.fan.rays, c.rays()));
  for (const auto& c : cones) {
    const bool is_face_of_other = std::any_of(cones.begin(), cones.end(), [&](const auto& o) {
      return o != c && std::includes(o.begin(), o.end(), c.begin(), c.end());
    });
    if (!is_face_of_other) sf.fan.maximal_cones.push_back(c);
  }
  sf.beta = std::move(beta);
  sf.target_rank = charts.target_rank;
  return sf;
}

bool is_smooth(const StackyFan& sf) {
  for (std::size_t k = 0; k < sf.fan.maximal_cones.size(); ++k)
    if (!is_saturated_basis(sf.fan.cone(k).ray_matrix())) return false;
  return true;
}

bool is_cohomologically_affine(const StackyFan& sf) {
  return sf.fan.maximal_cones.size() == 1;
}

GroupDescription group_description(const StackyFan& sf) {
  if (cokernel_invariants(sf.beta).free_rank != 0)
    throw Error(ErrorCode::kInfiniteCokernel, "beta has infinite cokernel");
  const CokernelInvariants c = cokernel_invariants(sf.beta.transpose());
  return GroupDescription{c.free_rank, c.torsion};
}

StackyFan canonical_cover(const StackyFan& sf) {
  const Fan& f = sf.fan;
  const IntMatrix rays = IntMatrix::from_columns(f.lattice_rank, f.rays);
  if (rank(rays) != f.lattice_rank)
    throw Error(ErrorCode::kRaysDoNotSpan, "fan rays do not span the lattice");
  StackyFan cover;
  const std::size_t r = f.rays.size();
  cover.fan.lattice_rank = r;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r);
    e[i] = 1;
    cover.fan.rays.push_back(std::move(e));
  }
  cover.fan.maximal_cones = f.maximal_cones;
  for (auto& c : cover.fan.maximal_cones) std::sort(c.begin(), c.end());
  cover.beta = sf.beta * rays;
  cover.target_rank = sf.target_rank;
  return cover;
}

StackyFan canonical_cover(const Fan& f) {
  return canonical_cover(
      StackyFan{f, IntMatrix::identity(f.lattice_rank), f.lattice_rank});
}

Fan face_fan(const Cone& c) {
  Fan f{c.ambient_rank(), c.rays(), {}};
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  f.maximal_cones.push_back(std::move(all));
  return f;
}

ChartData single_cone_charts(const Cone& c) {
  ChartData charts{face_diagram(c), {}, c.ambient_rank()};
  const auto faces = face_index_sets(c);
  std::size_t k = 0;
  for (const auto& [id, m] : charts.diagram.objects) {
    // face_diagram ids are zero-padded, so map order is face order.
    const IntMatrix basis = span_sublattice(c.subcone(faces[k++]));
    charts.betas.emplace(id, basis * gp(m));
  }
  return charts;
}

}  // namespace toric
