// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/diagram.hpp"
#include "toric/intlin.hpp"

namespace toric {

/// Rays are primitive vectors in Z^lattice_rank; cones are sorted index sets.
/// Faces of maximal cones are implicit.
struct Fan {
  std::size_t lattice_rank = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> maximal_cones;

  Cone cone(std::size_t k) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct FanViolation {
  std::string kind;  // e.g. "intersection_not_face"
  std::vector<std::size_t> cones;
  std::string detail;
};

struct FanReport {
  std::vector<FanViolation> violations;
  bool ok() const { return violations.empty(); }
};

FanReport validate_fan(const Fan& f);

/// Every cone of `f`, faces included, as sorted ray index sets.
std::vector<std::vector<std::size_t>> all_cones(const Fan& f);

struct StackyFan {
  Fan fan;
  IntMatrix beta;  // Z^{fan.lattice_rank} -> Z^{target_rank}
  std::size_t target_rank = 0;

  friend bool operator==(const StackyFan&, const StackyFan&) = default;
};

struct GroupDescription {
  std::size_t torus_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const GroupDescription&,
                         const GroupDescription&) = default;
};

struct ChartData {
  Diagram diagram;
  /// beta_i on gp(D_i), in the coordinates of its canonical basis.
  std::map<std::string, IntMatrix> betas;
  std::size_t target_rank = 0;
};

/// Glues charts along their tight diagram. Throws NotTightError,
/// IncompatibleBetas, InfiniteCokernel.
StackyFan glue(const ChartData& charts);

bool is_smooth(const StackyFan& sf);
bool is_cohomologically_affine(const StackyFan& sf);

/// Invariants of coker(beta^T). Throws InfiniteCokernel.
GroupDescription group_description(const StackyFan& sf);

/// Coordinate lift to Z^{#rays}: e_rho goes to beta(u_rho) and each cone to
/// its coordinate cone. Throws RaysDoNotSpan.
StackyFan canonical_cover(const StackyFan& sf);
StackyFan canonical_cover(const Fan& f);

/// The fan of all faces of c.
Fan face_fan(const Cone& c);

/// Charts for a single cone: its face diagram with every beta_i the inclusion
/// of gp(F) into the ambient lattice.
ChartData single_cone_charts(const Cone& c);

}  // namespace toric
