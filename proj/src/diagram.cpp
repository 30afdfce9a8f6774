// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace toric {
namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

std::string format_rays(const std::vector<IntVector>& rays) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rays.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < rays[i].size(); ++j)
      os << (j ? "," : "") << rays[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

bool shape_fits(const Diagram& d, const Morphism& m) {
  auto from = d.objects.find(m.from);
  auto to = d.objects.find(m.to);
  return from != d.objects.end() && to != d.objects.end() &&
         m.matrix.cols() == from->second.lattice_rank &&
         m.matrix.rows() == to->second.lattice_rank;
}

// Ray index set of the image of `source`'s cone in `target`'s cone under map,
// or nullopt if the image is not spanned by rays of the target.
std::optional<std::vector<std::size_t>> image_rays(const IntMatrix& map,
                                                   const Cone& source,
                                                   const Cone& target) {
  try {
    const Cone img = image(map, source);
    return ray_indices(target, img);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::kStructure: return "structure";
    case Condition::kT1: return "T1";
    case Condition::kT2: return "T2";
    case Condition::kT3: return "T3";
    case Condition::kT4: return "T4";
  }
  return "unknown";
}

bool TightnessReport::has(Condition c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.condition == c; });
}

DiagramPoset::DiagramPoset(const Diagram& d) {
  for (const auto& [id, obj] : d.objects) {
    index_[id] = ids_.size();
    ids_.push_back(id);
  }
  const std::size_t n = ids_.size();
  struct Edge {
    std::size_t to;
    const IntMatrix* matrix;
  };
  std::vector<std::vector<Edge>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& m : d.morphisms) {
    if (!shape_fits(d, m)) continue;
    const std::size_t a = index_.at(m.from);
    const std::size_t b = index_.at(m.to);
    out[a].push_back({b, &m.matrix});
    ++indegree[b];
  }

  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (const auto& e : out[u])
      if (--indegree[e.to] == 0) ready.push_back(e.to);
  }
  acyclic_ = order.size() == n;

  reach_.assign(n, std::vector<char>(n, 0));
  composites_.assign(n, std::vector<std::vector<IntMatrix>>(n));
  if (!acyclic_) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> stack{i};
      reach_[i][i] = 1;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& e : out[u])
          if (!reach_[i][e.to]) {
            reach_[i][e.to] = 1;
            stack.push_back(e.to);
          }
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    composites_[i][i].push_back(
        IntMatrix::identity(d.objects.at(ids_[i]).lattice_rank));
    for (std::size_t u : order) {
      for (const auto& e : out[u]) {
        for (const auto& m : composites_[i][u]) {
          auto& slot = composites_[i][e.to];
          if (slot.size() >= 2) break;
          IntMatrix p = *e.matrix * m;
          if (std::find(slot.begin(), slot.end(), p) == slot.end())
            slot.push_back(std::move(p));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) reach_[i][j] = !composites_[i][j].empty();
  }
}

std::size_t DiagramPoset::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw Error(ErrorCode::kInvalidArgument, "unknown object id: " + id);
  return it->second;
}

const IntMatrix& DiagramPoset::composite(std::size_t i, std::size_t j) const {
  if (!acyclic_ || composites_[i][j].empty())
    throw Error(ErrorCode::kInternal, "no composite from " + ids_[i] + " to " +
                                          ids_[j]);
  return composites_[i][j].front();
}

bool DiagramPoset::ambiguous(std::size_t i, std::size_t j) const {
  return composites_[i][j].size() > 1;
}

TightnessReport validate_tight(const Diagram& d) {
  TightnessReport report;
  auto& out = report.violations;

  for (std::size_t k = 0; k < d.morphisms.size(); ++k) {
    const auto& m = d.morphisms[k];
    auto from = d.objects.find(m.from);
    auto to = d.objects.find(m.to);
    if (from == d.objects.end() || to == d.objects.end()) {
      out.push_back({Condition::kStructure, {m.from, m.to},
                     "morphism " + std::to_string(k) +
                         " refers to an unknown object"});
      continue;
    }
    if (!shape_fits(d, m)) {
      out.push_back({Condition::kStructure, {m.from, m.to},
                     "morphism " + std::to_string(k) + " has shape " +
                         std::to_string(m.matrix.rows()) + "x" +
                         std::to_string(m.matrix.cols()) + ", expected " +
                         std::to_string(to->second.lattice_rank) + "x" +
                         std::to_string(from->second.lattice_rank)});
      continue;
    }
    const auto verdict =
        verify_face_morphism(FaceMorphism{from->second, to->second, m.matrix});
    if (!verdict.ok())
      out.push_back({Condition::kT1, {m.from, m.to},
                     std::string(check_name(verdict.check)) + ": " +
                         verdict.detail});
  }

  const DiagramPoset poset(d);
  if (!poset.acyclic()) {
    out.push_back({Condition::kStructure, {}, "morphism graph has a cycle"});
    return report;
  }
  const auto& ids = poset.ids();
  const std::size_t n = ids.size();
  std::vector<const ToricMonoid*> obj(n);
  for (std::size_t i = 0; i < n; ++i) obj[i] = &d.objects.at(ids[i]);

  // T2: every proper face of each object is hit by something below it.
  for (std::size_t j = 0; j < n; ++j) {
    const Cone& target = obj[j]->cone;
    std::set<std::vector<std::size_t>> present;
    for (std::size_t i = 0; i < n; ++i) {
      if (!poset.less(i, j)) continue;
      for (const IntMatrix& m : poset.composites(i, j))
        if (auto idx = image_rays(m, obj[i]->cone, target)) present.insert(*idx);
    }
    for (const auto& face : face_index_sets(target)) {
      if (face.size() == target.rays().size()) continue;
      if (present.count(face)) continue;
      std::vector<IntVector> rays;
      for (std::size_t r : face) rays.push_back(target.rays()[r]);
      out.push_back({Condition::kT2, {ids[j]},
                     "face with rays " + format_rays(rays) +
                         " is not the image of any object"});
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.ambiguous(i, j))
        out.push_back({Condition::kT3, {ids[i], ids[j]},
                       "parallel morphism chains have different composites"});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> common;
      for (std::size_t k = 0; k < n; ++k)
        if (poset.leq(k, i) && poset.leq(k, j)) common.push_back(k);
      std::vector<std::string> maximal;
      for (std::size_t k : common) {
        bool top = std::none_of(common.begin(), common.end(), [&](std::size_t o) {
          return poset.less(k, o);
        });
        if (top) maximal.push_back(ids[k]);
      }
      if (maximal.size() == 1) continue;
      out.push_back({Condition::kT4, {ids[i], ids[j]},
                     maximal.empty()
                         ? std::string("no common face")
                         : "maximal common faces are not unique: " +
                               join_ids(maximal)});
    }
  return report;
}

Diagram induced_subdiagram(const Diagram& d, const std::set<std::string>& ids) {
  Diagram sub;
  for (const auto& id : ids) {
    auto it = d.objects.find(id);
    if (it == d.objects.end())
      throw Error(ErrorCode::kInvalidArgument, "unknown object id: " + id);
    sub.objects.emplace(id, it->second);
  }
  for (const auto& m : d.morphisms)
    if (ids.count(m.from) && ids.count(m.to)) sub.morphisms.push_back(m);
  return sub;
}

JoinClosedness is_join_closed(const Diagram& parent,
                              const std::set<std::string>& members) {
  const Diagram sub = induced_subdiagram(parent, members);
  if (const auto report = validate_tight(sub); !report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::kNotTightSubdiagram,
                "members do not form a tight diagram: " +
                    std::string(condition_name(v.condition)) + " " +
                    join_ids(v.objects) + ": " + v.detail);
  }
  const DiagramPoset poset(parent);
  if (!poset.acyclic())
    throw Error(ErrorCode::kInvalidArgument, "parent diagram has a cycle");
  const auto& ids = poset.ids();
  const std::size_t n = ids.size();

  std::map<std::pair<std::size_t, std::size_t>,
           std::optional<std::vector<std::size_t>>> cache;
  auto image_in = [&](std::size_t l, std::size_t k)
      -> const std::optional<std::vector<std::size_t>>& {
    auto key = std::make_pair(l, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache
               .emplace(key, image_rays(poset.composite(l, k),
                                        parent.objects.at(ids[l]).cone,
                                        parent.objects.at(ids[k]).cone))
               .first;
    }
    return it->second;
  };

  std::vector<std::size_t> mem;
  for (const auto& id : members) mem.push_back(poset.index(id));
  for (std::size_t a = 0; a < mem.size(); ++a)
    for (std::size_t b = a + 1; b < mem.size(); ++b) {
      const std::size_t i = mem[a], j = mem[b];
      for (std::size_t k = 0; k < n; ++k) {
        if (!poset.leq(i, k) || !poset.leq(j, k)) continue;
        const Cone& top = parent.objects.at(ids[k]).cone;
        std::vector<IntVector> both;
        for (std::size_t src : {i, j}) {
          const IntMatrix& p = poset.composite(src, k);
          for (const auto& r : parent.objects.at(ids[src]).cone.rays())
            both.push_back(p * r);
        }
        const std::vector<std::size_t> join = face_closure(top, both);
        bool found = false;
        for (std::size_t l : mem)
          if (poset.leq(l, k) && image_in(l, k) == join) {
            found = true;
            break;
          }
        if (found) continue;
        JoinWitness w{ids[i], ids[j], ids[k], "", IntMatrix(top.ambient_rank(), 0)};
        for (std::size_t l = 0; l < n; ++l)
          if (poset.leq(l, k) && image_in(l, k) == join) {
            w.join = ids[l];
            break;
          }
        std::vector<IntVector> rays;
        for (std::size_t r : join) rays.push_back(top.rays()[r]);
        w.join_rays = IntMatrix::from_columns(top.ambient_rank(), rays);
        return JoinClosedness{false, std::move(w)};
      }
    }
  return JoinClosedness{};
}

Cone ColimitResult::image_of(const std::string& id, const Diagram& d) const {
  const ToricMonoid& m = d.objects.at(id);
  const IntMatrix coords = coordinates_in(gp_bases.at(id), m.cone.ray_matrix());
  return Cone::from_rays(colimit_rank, (embeddings.at(id) * coords).columns());
}

ColimitResult colimit(const Diagram& d) {
  if (auto report = validate_tight(d); !report.ok())
    throw NotTightError(std::move(report));

  ColimitResult out;
  for (const auto& [id, m] : d.objects) out.gp_bases.emplace(id, gp(m));

  // Morphisms in gp coordinates.
  std::vector<IntMatrix> gp_maps;
  std::map<std::string, std::vector<std::size_t>> outgoing;
  for (std::size_t k = 0; k < d.morphisms.size(); ++k) {
    const auto& m = d.morphisms[k];
    gp_maps.push_back(coordinates_in(out.gp_bases.at(m.to),
                                     m.matrix * out.gp_bases.at(m.from)));
    outgoing[m.from].push_back(k);
  }

  // Generators of maximal objects span the direct sum we quotient.
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const auto& [id, basis] : out.gp_bases) {
    if (outgoing.count(id)) continue;
    offset[id] = total;
    total += basis.cols();
  }

  std::map<std::string, IntMatrix> expr;
  std::function<const IntMatrix&(const std::string&)> express =
      [&](const std::string& id) -> const IntMatrix& {
    if (auto it = expr.find(id); it != expr.end()) return it->second;
    const std::size_t k = out.gp_bases.at(id).cols();
    IntMatrix e(total, k);
    if (auto off = offset.find(id); off != offset.end()) {
      for (std::size_t c = 0; c < k; ++c) e(off->second + c, c) = 1;
    } else {
      const std::size_t first = outgoing.at(id).front();
      e = express(d.morphisms[first].to) * gp_maps[first];
    }
    return expr.emplace(id, std::move(e)).first->second;
  };

  std::vector<IntVector> relations;
  for (std::size_t k = 0; k < d.morphisms.size(); ++k) {
    const auto& m = d.morphisms[k];
    const IntMatrix diff = express(m.to) * gp_maps[k] - express(m.from);
    for (std::size_t c = 0; c < diff.cols(); ++c) {
      IntVector col = diff.column(c);
      if (std::all_of(col.begin(), col.end(),
                      [](const Integer& x) { return sgn(x) == 0; }))
        continue;
      relations.push_back(std::move(col));
    }
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());

  // Canonical quotient map: the Hermite basis of the relations' annihilator.
  const IntMatrix quotient =
      relations.empty()
          ? IntMatrix::identity(total)
          : kernel_basis(IntMatrix::from_columns(total, relations).transpose())
                .transpose();
  out.colimit_rank = quotient.rows();

  std::vector<IntVector> generators;
  for (const auto& [id, m] : d.objects) {
    IntMatrix emb = quotient * express(id);
    const IntMatrix coords =
        coordinates_in(out.gp_bases.at(id), m.cone.ray_matrix());
    for (const auto& r : (emb * coords).columns()) generators.push_back(r);
    out.embeddings.emplace(id, std::move(emb));
  }
  out.cone = Cone::from_rays(out.colimit_rank, generators);
  return out;
}

IntMatrix descend(const Diagram& d, const ColimitResult& c,
                  const std::map<std::string, IntMatrix>& maps,
                  std::size_t rows) {
  IntMatrix stacked_emb(c.colimit_rank, 0);
  IntMatrix stacked_maps(rows, 0);
  for (const auto& [id, m] : d.objects) {
    const IntMatrix& emb = c.embeddings.at(id);
    auto it = maps.find(id);
    IntMatrix target(rows, emb.cols());
    if (it != maps.end()) {
      if (it->second.rows() != rows || it->second.cols() != emb.cols())
        throw Error(ErrorCode::kInvalidArgument,
                    "map for object " + id + " has the wrong shape");
      target = it->second;
    } else if (emb.cols() != 0) {
      throw Error(ErrorCode::kInvalidArgument, "no map given for object " + id);
    }
    stacked_emb = hconcat(stacked_emb, emb);
    stacked_maps = hconcat(stacked_maps, target);
  }
  auto w = solve(stacked_emb.transpose(), stacked_maps.transpose());
  if (!w)
    throw Error(ErrorCode::kIncompatibleFamily,
                "family does not factor through the colimit");
  return w->transpose();
}

FaceEmbeddingReport verify_face_embeddings(const Diagram& d,
                                           const ColimitResult& c) {
  FaceEmbeddingReport report;
  auto issue = [&](const std::string& id, std::string what) {
    report.issues.push_back({id, std::move(what)});
  };
  for (const auto& [id, m] : d.objects) {
    auto emb_it = c.embeddings.find(id);
    auto basis_it = c.gp_bases.find(id);
    if (emb_it == c.embeddings.end() || basis_it == c.gp_bases.end()) {
      issue(id, "no embedding");
      continue;
    }
    const IntMatrix& emb = emb_it->second;
    if (emb.rows() != c.colimit_rank || emb.cols() != basis_it->second.cols()) {
      issue(id, "embedding has the wrong shape");
      continue;
    }
    if (rank(emb) != emb.cols()) {
      issue(id, "embedding is not injective on gp");
      continue;
    }
    if (!is_saturated_basis(emb)) issue(id, "image of gp is not saturated");
    Cone img;
    try {
      img = c.image_of(id, d);
    } catch (const Error&) {
      issue(id, "image cone is not pointed");
      continue;
    }
    if (!is_face(c.cone, img)) {
      issue(id, "image cone is not a face of the colimit cone");
      continue;
    }
    const Functional chi = supporting_functional(c.cone, img);
    for (const auto& r : c.cone.rays()) {
      const bool in_face =
          std::binary_search(img.rays().begin(), img.rays().end(), r);
      const int s = sgn(chi(r));
      if (s < 0 || (s == 0) != in_face)
        issue(id, "supporting functional certificate fails");
    }
  }
  for (const auto& m : d.morphisms) {
    const IntMatrix x = coordinates_in(c.gp_bases.at(m.to),
                                       m.matrix * c.gp_bases.at(m.from));
    if (!(c.embeddings.at(m.to) * x == c.embeddings.at(m.from)))
      issue(m.from, "embedding does not commute with the morphism to " + m.to);
  }
  return report;
}

DiagramExtension extend_diagram_functional(
    const Diagram& d, const std::set<std::string>& members,
    const std::map<std::string, IntVector>& chi, ExtensionMode mode) {
  if (auto report = validate_tight(d); !report.ok())
    throw NotTightError(std::move(report));
  for (const auto& id : members)
    if (!d.objects.count(id))
      throw Error(ErrorCode::kInvalidArgument, "unknown member id: " + id);
  for (const auto& [id, v] : chi)
    if (!members.count(id))
      throw Error(ErrorCode::kInvalidArgument,
                  "functional given for non-member object " + id);
  if (auto jc = is_join_closed(d, members); !jc.join_closed)
    throw NotJoinClosedError(*jc.witness);

  const bool positive = mode == ExtensionMode::kNonnegPositiveAway;
  const DiagramPoset poset(d);
  const auto& ids = poset.ids();
  const std::size_t n = ids.size();
  std::vector<const ToricMonoid*> obj(n);
  std::vector<IntMatrix> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    obj[i] = &d.objects.at(ids[i]);
    basis[i] = gp(*obj[i]);
  }

  std::vector<std::optional<IntVector>> psi(n);
  for (const auto& id : members) {
    const std::size_t i = poset.index(id);
    auto it = chi.find(id);
    if (it == chi.end()) {
      if (basis[i].cols() != 0)
        throw Error(ErrorCode::kInvalidArgument,
                    "no functional given for member " + id);
      psi[i] = IntVector(obj[i]->lattice_rank);
      continue;
    }
    if (it->second.size() != obj[i]->lattice_rank)
      throw Error(ErrorCode::kInvalidArgument,
                  "functional for " + id + " has the wrong length");
    psi[i] = it->second;
  }
  for (const auto& m : d.morphisms) {
    if (!members.count(m.from) || !members.count(m.to)) continue;
    const std::size_t i = poset.index(m.from), j = poset.index(m.to);
    if (pull_back(*psi[j], m.matrix * basis[i]) != pull_back(*psi[i], basis[i]))
      throw Error(ErrorCode::kIncompatibleFamily,
                  "functionals on " + m.from + " and " + m.to +
                      " disagree along their morphism");
  }
  if (positive) {
    for (const auto& id : members) {
      const std::size_t i = poset.index(id);
      for (const auto& r : obj[i]->cone.rays())
        if (sgn(dot(*psi[i], r)) < 0)
          throw Error(ErrorCode::kNegativeOnSub,
                      "functional is negative on a ray of " + id);
    }
  }

  DiagramExtension result;
  std::vector<char> inside(n, 0);
  for (const auto& id : members) inside[poset.index(id)] = 1;
  for (;;) {
    std::optional<std::size_t> b;
    for (std::size_t i = 0; i < n && !b; ++i) {
      if (inside[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < n; ++j)
        if (poset.less(i, j)) {
          maximal = false;
          break;
        }
      if (maximal) b = i;
    }
    if (!b) {
      if (std::find(inside.begin(), inside.end(), 0) != inside.end())
        throw Error(ErrorCode::kInternal, "no maximal object outside the subdiagram");
      break;
    }

    std::vector<std::size_t> below;
    for (std::size_t l = 0; l < n; ++l)
      if (inside[l] && poset.leq(l, *b)) below.push_back(l);
    std::optional<std::size_t> top;
    for (std::size_t cand : below) {
      if (std::all_of(below.begin(), below.end(),
                      [&](std::size_t l) { return poset.leq(l, cand); })) {
        top = cand;
        break;
      }
    }
    if (!below.empty() && !top)
      throw Error(ErrorCode::kInternal,
                  "no maximum subdiagram object below " + ids[*b]);

    const ToricMonoid& target = *obj[*b];
    FaceMorphism face = top ? FaceMorphism{*obj[*top], target,
                                           poset.composite(*top, *b)}
                            : FaceMorphism{ToricMonoid::zero(), target,
                                           IntMatrix(target.lattice_rank, 0)};
    MonoidFunctional restricted{face.source, top ? *psi[*top] : IntVector{}};
    const IntVector extended =
        extend_functional(target, face, restricted, mode).coefficients;

    ExtensionStep step{ids[*b], top ? std::optional(ids[*top]) : std::nullopt, {}};
    for (std::size_t l = 0; l < n; ++l) {
      if (!poset.leq(l, *b)) continue;
      IntVector pulled = pull_back(extended, poset.composite(l, *b));
      if (inside[l]) {
        if (pull_back(pulled, basis[l]) != pull_back(*psi[l], basis[l]))
          throw Error(ErrorCode::kInternal,
                      "extension disagrees with the subdiagram on " + ids[l]);
        continue;
      }
      psi[l] = std::move(pulled);
      inside[l] = 1;
      step.added.push_back(ids[l]);
    }
    result.trace.push_back(std::move(step));
  }

  const ColimitResult col = colimit(d);
  std::map<std::string, IntMatrix> values;
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector v = pull_back(*psi[i], basis[i]);
    values.emplace(ids[i], IntMatrix::from_rows({v}, v.size()));
    result.per_object.emplace(ids[i], *psi[i]);
  }
  const IntMatrix w = descend(d, col, values, 1);
  result.functional = Functional{w.row(0)};
  result.colimit_rank = col.colimit_rank;

  // Certificate, re-checked against the contract.
  std::vector<Cone> sub_images;
  for (const auto& id : members) sub_images.push_back(col.image_of(id, d));
  for (std::size_t i = 0; i < n; ++i) {
    const IntMatrix coords =
        coordinates_in(col.gp_bases.at(ids[i]), obj[i]->cone.ray_matrix());
    const IntMatrix in_colimit = col.embeddings.at(ids[i]) * coords;
    for (std::size_t r = 0; r < obj[i]->cone.rays().size(); ++r) {
      const IntVector v = in_colimit.column(r);
      const bool in_sub = std::any_of(sub_images.begin(), sub_images.end(),
                                      [&](const Cone& c) { return contains(c, v); });
      CertificateEntry e{ids[i], obj[i]->cone.rays()[r],
                         result.functional(v), positive && !in_sub};
      if (e.value != dot(*psi[i], e.ray))
        throw Error(ErrorCode::kInternal, "descended functional disagrees on " + ids[i]);
      if (positive && (sgn(e.value) < 0 || (e.required_positive && e.value < 1)))
        throw Error(ErrorCode::kInternal,
                    "positivity contract fails on a ray of " + ids[i]);
      result.certificate.push_back(std::move(e));
    }
  }
  return result;
}

Diagram face_diagram(const Cone& c, std::string_view prefix,
                     bool all_relations) {
  const auto faces = face_index_sets(c);
  const std::size_t width = std::to_string(faces.empty() ? 0 : faces.size() - 1).size();
  auto name = [&](std::size_t i) {
    std::string digits = std::to_string(i);
    return std::string(prefix) + std::string(width - digits.size(), '0') + digits;
  };
  std::vector<IntMatrix> bases;
  Diagram d;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Cone sub = c.subcone(faces[i]);
    IntMatrix b = span_sublattice(sub);
    const IntMatrix coords = coordinates_in(b, sub.ray_matrix());
    d.objects.emplace(name(i), ToricMonoid::make(
                                   b.cols(), Cone::from_rays(b.cols(), coords.columns())));
    bases.push_back(std::move(b));
  }
  auto subset = [](const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) {
    return a.size() < b.size() &&
           std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (!subset(faces[i], faces[j])) continue;
      if (!all_relations) {
        bool cover = true;
        for (std::size_t k = 0; k < faces.size() && cover; ++k)
          if (subset(faces[i], faces[k]) && subset(faces[k], faces[j]))
            cover = false;
        if (!cover) continue;
      }
      d.morphisms.push_back(
          {name(i), name(j), coordinates_in(bases[j], bases[i])});
    }
  return d;
}

}  // namespace toric
