// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/monoid.hpp"

#include <utility>

#include "toric/error.hpp"

namespace toric {

ToricMonoid ToricMonoid::make(std::size_t lattice_rank, Cone cone) {
  if (cone.ambient_rank() != lattice_rank)
    throw Error(ErrorCode::kInvalidArgument,
                "monoid cone does not live in the monoid lattice");
  return ToricMonoid{lattice_rank, std::move(cone)};
}

IntMatrix gp(const ToricMonoid& m) { return span_sublattice(m.cone); }

IntMatrix coordinates_in(const IntMatrix& basis, const IntMatrix& vectors) {
  auto x = solve(basis, vectors);
  if (!x)
    throw Error(ErrorCode::kInvalidArgument,
                "vector does not lie in the given lattice");
  return *std::move(x);
}

std::string_view check_name(MorphismCheck check) {
  switch (check) {
    case MorphismCheck::kOk: return "ok";
    case MorphismCheck::kShapeMismatch: return "shape_mismatch";
    case MorphismCheck::kNotInjective: return "not_injective";
    case MorphismCheck::kNotSaturated: return "not_saturated";
    case MorphismCheck::kImageNotFace: return "image_not_face";
    case MorphismCheck::kFaceNotProper: return "face_not_proper";
  }
  return "unknown";
}

MorphismVerdict verify_face_morphism(const FaceMorphism& f,
                                     bool require_proper) {
  if (f.map.rows() != f.target.lattice_rank ||
      f.map.cols() != f.source.lattice_rank)
    return {MorphismCheck::kShapeMismatch,
            "matrix is " + std::to_string(f.map.rows()) + "x" +
                std::to_string(f.map.cols()) + ", expected " +
                std::to_string(f.target.lattice_rank) + "x" +
                std::to_string(f.source.lattice_rank)};
  const IntMatrix basis = gp(f.source);
  const IntMatrix img = f.map * basis;
  if (rank(img) != basis.cols())
    return {MorphismCheck::kNotInjective, "map is not injective on gp(source)"};
  if (!is_saturated_basis(img))
    return {MorphismCheck::kNotSaturated,
            "image of gp(source) is not a saturated sublattice"};
  Cone face;
  try {
    face = image(f.map, f.source.cone);
  } catch (const Error&) {
    return {MorphismCheck::kImageNotFace, "image cone is not pointed"};
  }
  if (!is_face(f.target.cone, face))
    return {MorphismCheck::kImageNotFace,
            "image cone is not a face of the target cone"};
  if (require_proper && face == f.target.cone)
    return {MorphismCheck::kFaceNotProper,
            "image is the whole target cone, not a proper face"};
  return {};
}

IntVector MonoidFunctional::gp_values() const {
  return pull_back(coefficients, gp(on));
}

MonoidFunctional extend_functional(const ToricMonoid& m, const FaceMorphism& f,
                                   const MonoidFunctional& psi,
                                   ExtensionMode mode) {
  if (!(f.target == m))
    throw Error(ErrorCode::kInvalidArgument,
                "extend_functional: morphism does not land in the monoid");
  if (!(psi.on == f.source) || psi.coefficients.size() != f.source.lattice_rank)
    throw Error(ErrorCode::kInvalidArgument,
                "extend_functional: functional is not on the morphism source");
  if (const auto verdict = verify_face_morphism(f, false); !verdict.ok())
    throw Error(ErrorCode::kInvalidArgument,
                "extend_functional: not a face morphism: " + verdict.detail);

  const bool positive = mode == ExtensionMode::kNonnegPositiveAway;
  if (positive) {
    for (const auto& r : f.source.cone.rays())
      if (sgn(dot(psi.coefficients, r)) < 0)
        throw Error(ErrorCode::kNegativeOnFace,
                    "extend_functional: functional is negative on the face");
  }
  if (f.source == f.target &&
      f.map == IntMatrix::identity(f.source.lattice_rank))
    return MonoidFunctional{m, psi.coefficients};

  const IntMatrix source_basis = gp(f.source);
  const IntVector values = pull_back(psi.coefficients, source_basis);
  const IntMatrix target_basis = gp(m);
  const IntMatrix face_coords =
      coordinates_in(target_basis, f.map * source_basis);

  // Zero on the complement of the face inside gp(m).
  const IntMatrix split =
      hconcat(face_coords, complement_summand(face_coords));
  IntVector padded(split.cols());
  std::copy(values.begin(), values.end(), padded.begin());
  const IntVector on_gp = pull_back(padded, inverse_unimodular(split));

  // Any lift to the ambient dual; zero on a complement of gp(m) in L.
  const IntMatrix ambient =
      hconcat(target_basis, complement_summand(target_basis));
  IntVector lifted(ambient.cols());
  std::copy(on_gp.begin(), on_gp.end(), lifted.begin());
  IntVector coefficients = pull_back(lifted, inverse_unimodular(ambient));

  if (positive) {
    const Cone face = image(f.map, f.source.cone);
    const Functional chi = supporting_functional(m.cone, face);
    Integer k = 0;
    for (const auto& r : m.cone.rays()) {
      const Integer weight = chi(r);
      if (sgn(weight) == 0) continue;  // ray of the face
      const Integer deficit = 1 - dot(coefficients, r);
      if (sgn(deficit) <= 0) continue;
      Integer need;
      mpz_cdiv_q(need.get_mpz_t(), deficit.get_mpz_t(), weight.get_mpz_t());
      if (need > k) k = need;
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      coefficients[i] += k * chi.coefficients[i];
  }
  return MonoidFunctional{m, std::move(coefficients)};
}

}  // namespace toric
