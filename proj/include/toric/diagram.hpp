// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// Finite diagrams of toric monoids with face-inclusion morphisms: tightness,
// join-closed subdiagrams, colimits over free abelian groups, and extension
// of compatible functionals to the colimit.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/error.hpp"
#include "toric/monoid.hpp"

namespace toric {

struct Morphism {
  std::string from;
  std::string to;
  IntMatrix matrix;  // Z^{rank(from)} -> Z^{rank(to)}

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Objects keyed by identifier; identity morphisms are implicit.
struct Diagram {
  std::map<std::string, ToricMonoid> objects;
  std::vector<Morphism> morphisms;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// kStructure covers unknown object ids and cyclic morphism graphs.
enum class Condition { kStructure, kT1, kT2, kT3, kT4 };

std::string_view condition_name(Condition c);

struct Violation {
  Condition condition;
  std::vector<std::string> objects;
  std::string detail;
};

struct TightnessReport {
  /// How the "all faces appear" condition is read.
  static constexpr std::string_view kFaceConvention =
      "T2 requires every proper face of each object to be the image of some "
      "object under a morphism chain; each object represents itself as its "
      "improper face";

  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Condition c) const;
};

/// Checks the four tightness conditions: proper face inclusions (T1), all
/// faces present (T2), commutativity of parallel paths (T3), and unique
/// maximal common faces (T4).
TightnessReport validate_tight(const Diagram& d);

class NotTightError : public Error {
 public:
  explicit NotTightError(TightnessReport report)
      : Error(ErrorCode::kNotTight, "diagram is not tight"),
        report_(std::move(report)) {}
  const TightnessReport& report() const noexcept { return report_; }

 private:
  TightnessReport report_;
};

/// Reachability and composite maps of a diagram's morphism graph.
/// Morphisms with the wrong shape are ignored.
class DiagramPoset {
 public:
  explicit DiagramPoset(const Diagram& d);

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::size_t index(const std::string& id) const;
  bool acyclic() const noexcept { return acyclic_; }

  /// i <= j: a (possibly empty) chain of morphisms from i to j exists.
  bool leq(std::size_t i, std::size_t j) const { return reach_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  /// A composite of a chain i -> j; requires leq(i, j).
  const IntMatrix& composite(std::size_t i, std::size_t j) const;
  /// Distinct composites of chains i -> j, at most two.
  const std::vector<IntMatrix>& composites(std::size_t i, std::size_t j) const {
    return composites_[i][j];
  }
  /// Whether two chains i -> j with different composites exist.
  bool ambiguous(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
  bool acyclic_ = true;
  std::vector<std::vector<char>> reach_;
  std::vector<std::vector<std::vector<IntMatrix>>> composites_;
};

/// Restriction of d to the given objects and the morphisms among them.
Diagram induced_subdiagram(const Diagram& d, const std::set<std::string>& ids);

struct JoinWitness {
  std::string first;
  std::string second;
  std::string over;        // parent object containing both as faces
  std::string join;        // parent object realizing their join, if any
  IntMatrix join_rays;     // rays of the join face in `over`'s lattice
};

struct JoinClosedness {
  bool join_closed = true;
  std::optional<JoinWitness> witness;
};

class NotJoinClosedError : public Error {
 public:
  explicit NotJoinClosedError(JoinWitness witness)
      : Error(ErrorCode::kNotJoinClosed, "subdiagram is not join-closed"),
        witness_(std::move(witness)) {}
  const JoinWitness& witness() const noexcept { return witness_; }

 private:
  JoinWitness witness_;
};

/// Throws NotTightSubdiagram if the members do not form a tight diagram.
JoinClosedness is_join_closed(const Diagram& parent,
                              const std::set<std::string>& members);

struct ColimitResult {
  std::size_t colimit_rank = 0;
  Cone cone;
  /// Per object: the map gp(D_i) -> L in the coordinates of gp_bases.
  std::map<std::string, IntMatrix> embeddings;
  /// Per object: the canonical basis of gp(D_i) inside L_i.
  std::map<std::string, IntMatrix> gp_bases;

  /// Image of object `id`'s cone in L.
  Cone image_of(const std::string& id, const Diagram& d) const;
};

/// L = (sum of gp(D_i)) / saturation(relations), computed after eliminating
/// every non-maximal object's generators along its first outgoing morphism.
/// Throws NotTightError.
ColimitResult colimit(const Diagram& d);

/// The unique map W: L -> Z^rows with W * embedding_i = maps_i for every
/// object. Objects with zero-rank gp may be omitted. Throws
/// IncompatibleFamily if the family does not factor through the colimit.
IntMatrix descend(const Diagram& d, const ColimitResult& c,
                  const std::map<std::string, IntMatrix>& maps,
                  std::size_t rows);

struct EmbeddingIssue {
  std::string object;
  std::string detail;
};

struct FaceEmbeddingReport {
  std::vector<EmbeddingIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Every embedding is injective and saturated on gp, commutes with the
/// morphisms, and carries the object's cone onto a face of the colimit cone
/// (certified by a supporting functional).
FaceEmbeddingReport verify_face_embeddings(const Diagram& d,
                                           const ColimitResult& c);

struct CertificateEntry {
  std::string object;
  IntVector ray;          // in the object's lattice
  Integer value;
  bool required_positive;  // the ray lies outside the image of the subdiagram
};

struct ExtensionStep {
  std::string extended;           // the maximal outside object D_b
  std::optional<std::string> from;  // the maximum sub object below it, D_m
  std::vector<std::string> added;
};

struct DiagramExtension {
  Functional functional;  // on L = colim(d)^gp
  std::size_t colimit_rank = 0;
  std::map<std::string, IntVector> per_object;  // ambient dual coefficients
  std::vector<CertificateEntry> certificate;
  std::vector<ExtensionStep> trace;
};

/// Extends a compatible family of functionals on a join-closed subdiagram to
/// the colimit of d by induction over maximal outside objects. `chi` holds
/// ambient dual coefficients per member; members with zero-rank gp may be
/// omitted. Throws NotTightError, NotJoinClosed, IncompatibleFamily,
/// NegativeOnSub.
DiagramExtension extend_diagram_functional(
    const Diagram& d, const std::set<std::string>& members,
    const std::map<std::string, IntVector>& chi, ExtensionMode mode);

/// The diagram of all faces of c, each in the coordinates of its own gp.
/// Ids are prefix + zero-padded face index; with `all_relations` every
/// inclusion is listed, otherwise only covering relations.
Diagram face_diagram(const Cone& c, std::string_view prefix = "f",
                     bool all_relations = false);

}  // namespace toric
