// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "toric/cone.hpp"
#include "toric/intlin.hpp"

namespace toric {

/// The monoid sigma ∩ L for a pointed cone sigma in L = Z^lattice_rank.
struct ToricMonoid {
  std::size_t lattice_rank = 0;
  Cone cone;

  static ToricMonoid make(std::size_t lattice_rank, Cone cone);
  static ToricMonoid zero() { return ToricMonoid{}; }

  friend bool operator==(const ToricMonoid&, const ToricMonoid&) = default;
};

/// Saturated basis of M^gp = L ∩ span_Q(sigma), as columns.
IntMatrix gp(const ToricMonoid& m);

/// Coordinates of the columns of `vectors` in the lattice basis `basis`.
/// Throws InvalidArgument if some column is outside the lattice.
IntMatrix coordinates_in(const IntMatrix& basis, const IntMatrix& vectors);

/// A lattice map source.L -> target.L, meant to be a face inclusion.
struct FaceMorphism {
  ToricMonoid source;
  ToricMonoid target;
  IntMatrix map;
};

enum class MorphismCheck {
  kOk,
  kShapeMismatch,
  kNotInjective,
  kNotSaturated,
  kImageNotFace,
  kFaceNotProper,
};

std::string_view check_name(MorphismCheck check);

struct MorphismVerdict {
  MorphismCheck check = MorphismCheck::kOk;
  std::string detail;

  bool ok() const { return check == MorphismCheck::kOk; }
};

/// Checks that f maps gp(source) injectively onto a saturated sublattice and
/// source.cone isomorphically onto a face of target.cone; with
/// `require_proper`, that face must also differ from target.cone.
MorphismVerdict verify_face_morphism(const FaceMorphism& f,
                                     bool require_proper = true);

/// A functional on gp(on), carried by ambient dual coefficients. Two
/// representatives are equal when they agree on gp(on).
struct MonoidFunctional {
  ToricMonoid on;
  IntVector coefficients;

  /// Values on the canonical gp basis.
  IntVector gp_values() const;

  friend bool operator==(const MonoidFunctional& a, const MonoidFunctional& b) {
    return a.on == b.on && a.gp_values() == b.gp_values();
  }
};

enum class ExtensionMode { kArbitrary, kNonnegPositiveAway };

/// Extends psi from the face f.source to m = f.target: zero on the
/// complement summand of the face's gp; in positive mode, plus the least
/// multiple of the supporting functional of the face making every ray outside
/// the face take a value >= 1. The identity morphism returns psi itself.
/// Throws NegativeOnFace, InvalidArgument.
MonoidFunctional extend_functional(const ToricMonoid& m, const FaceMorphism& f,
                                   const MonoidFunctional& psi,
                                   ExtensionMode mode);

}  // namespace toric
