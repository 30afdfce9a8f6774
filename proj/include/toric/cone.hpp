// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "toric/intlin.hpp"

namespace toric {

/// A linear functional on Z^n, given by its coefficients in the dual basis.
struct Functional {
  IntVector coefficients;

  Integer operator()(const IntVector& v) const { return dot(coefficients, v); }
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// Generators of a (possibly non-pointed) cone: `rays` modulo the linear
/// subspace spanned by the columns of `lineality`. When the lineality is
/// nonzero, each ray is the primitive representative orthogonal to it.
struct DualCone {
  std::size_t ambient_rank = 0;
  std::vector<IntVector> rays;
  IntMatrix lineality;

  bool pointed() const { return lineality.cols() == 0; }
  friend bool operator==(const DualCone&, const DualCone&) = default;
};

/// Generators {g_i} -> {m : <m, g_i> >= 0 for all i}, by double description
/// (Fourier-Motzkin elimination one inequality at a time), canonicalized.
DualCone dual_of_generators(std::size_t ambient_rank,
                            const std::vector<IntVector>& generators);

/// A pointed rational polyhedral cone in Z^n, stored by its primitive extreme
/// rays in lexicographic order. The facet description is computed once at
/// construction.
class Cone {
 public:
  /// The zero cone in Z^0.
  Cone() = default;

  static Cone zero(std::size_t ambient_rank);
  /// Canonicalizes arbitrary generators. Throws NotPointed.
  static Cone from_rays(std::size_t ambient_rank,
                        const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  std::size_t dimension() const noexcept { return dimension_; }
  bool full_dimensional() const noexcept { return dimension_ == ambient_rank_; }
  /// Rays as the columns of an ambient_rank x #rays matrix.
  IntMatrix ray_matrix() const;

  /// Facet normals (restricted to the span) and the lineality of the dual.
  const DualCone& dual() const noexcept { return dual_; }

  /// Sub-cone spanned by the rays at the given (sorted) indices, which must
  /// index a face.
  Cone subcone(const std::vector<std::size_t>& ray_indices) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.rays_ == b.rays_;
  }
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  Cone(std::size_t ambient_rank, std::vector<IntVector> rays);

  std::size_t ambient_rank_ = 0;
  std::size_t dimension_ = 0;
  std::vector<IntVector> rays_;
  DualCone dual_;
};

Cone cone_from_rays(std::size_t ambient_rank,
                    const std::vector<IntVector>& generators);

/// {m : <m, v> >= 0 for all v in c}. Non-full-dimensional cones have duals
/// with nonzero lineality.
DualCone dual_cone(const Cone& c);

bool contains(const Cone& c, const IntVector& v);

/// The ray index sets of all faces of c, from {0} up to c itself, ordered by
/// size and then lexicographically.
std::vector<std::vector<std::size_t>> face_index_sets(const Cone& c);
std::vector<Cone> faces(const Cone& c);

/// Indices of the rays of the smallest face of c containing the given rays.
std::vector<std::size_t> face_closure(const Cone& c,
                                      const std::vector<IntVector>& vectors);

bool is_face(const Cone& c, const Cone& f);

/// Indices of f's rays within c's rays, if they are all rays of c.
std::optional<std::vector<std::size_t>> ray_indices(const Cone& c,
                                                    const Cone& f);

/// chi >= 0 on c, zero exactly on the rays of f and >= 1 on the other rays.
/// Throws NotAFace.
Functional supporting_functional(const Cone& c, const Cone& f);

/// Canonical basis of L intersected with span_Q(c).
IntMatrix span_sublattice(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Cone generated by the images of c's rays under `map`. Throws NotPointed if
/// the image contains a line.
Cone image(const IntMatrix& map, const Cone& c);

}  // namespace toric
