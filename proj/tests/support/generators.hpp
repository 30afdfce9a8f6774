// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// Random inputs with a fixed seed: cones, face diagrams in scrambled
// coordinates, coproducts, subfan charts and complete fans.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "toric/cone.hpp"
#include "toric/diagram.hpp"
#include "toric/intlin.hpp"
#include "toric/monoid.hpp"
#include "toric/stackyfan.hpp"

namespace toric::gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

inline IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && coin(rng)) u.negate_column(0);
    return u;
  }
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = uniform(rng, 0, n - 1);
    std::size_t j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    u.add_column_multiple(i, j, uniform(rng, -1, 1));
  }
  if (coin(rng)) u.swap_columns(0, n - 1);
  if (coin(rng)) u.negate_column(uniform(rng, 0, n - 1));
  return u;
}

/// Pointed cone in Z^n with between n and max_rays generators in [-3, 3]^n,
/// all positive on a random functional. With full_dim the cone spans Q^n.
inline Cone random_pointed_cone(Rng& rng, std::size_t n, std::size_t max_rays,
                                bool full_dim = true) {
  for (;;) {
    IntVector h(n);
    for (auto& x : h) x = uniform(rng, 1, 3);
    const std::size_t count = uniform(rng, std::max<std::size_t>(n, 1), std::max(n, max_rays));
    std::vector<IntVector> gens;
    while (gens.size() < count) {
      IntVector v(n);
      for (auto& x : v) x = uniform(rng, -3, 3);
      if (sgn(dot(h, v)) > 0) gens.push_back(std::move(v));
    }
    if (!full_dim && n > 1 && coin(rng)) {
      // Collapse into a random proper subspace.
      const std::size_t d = uniform(rng, 1, n - 1);
      IntMatrix embed = random_matrix(rng, n, d, -1, 1);
      if (oracle::rational_rank(embed) != d) continue;
      std::vector<IntVector> low;
      for (const auto& g : gens) {
        IntVector v(g.begin(), g.begin() + d);
        IntVector image = embed * v;
        if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return sgn(x) == 0; }))
          continue;
        low.push_back(std::move(image));
      }
      if (low.empty()) continue;
      try {
        return Cone::from_rays(n, low);
      } catch (const Error&) {
        continue;
      }
    }
    if (full_dim && oracle::rational_rank(IntMatrix::from_columns(n, gens)) != n) continue;
    return Cone::from_rays(n, gens);
  }
}

struct GeneratedDiagram {
  Diagram diagram;
  std::size_t ambient_rank = 0;
  /// Object lattice -> ambient lattice; zero on torus coordinates.
  std::map<std::string, IntMatrix> to_ambient;
  /// Face index sets of the generating cone, by object id.
  std::map<std::string, std::vector<std::size_t>> face_of;
  std::string zero_id;
  std::string top_id;
};

inline IntMatrix pad(const IntMatrix& x, std::size_t rows, std::size_t cols) {
  IntMatrix out(rows, cols);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = x(r, c);
  return out;
}

/// Face diagram of c where each object gets scrambled coordinates and, with
/// probability torus_p, an extra torus coordinate outside its gp.
inline GeneratedDiagram scrambled_face_diagram(Rng& rng, const Cone& c,
                                               const std::string& prefix,
                                               double torus_p = 0.2,
                                               bool all_relations = false) {
  GeneratedDiagram g;
  g.ambient_rank = c.ambient_rank();
  const auto faces = face_index_sets(c);
  std::vector<std::string> ids;
  std::vector<IntMatrix> bases, units;
  std::vector<std::size_t> dims, ranks;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string id = prefix + std::to_string(1000 + i).substr(1);
    const Cone sub = c.subcone(faces[i]);
    IntMatrix basis = span_saturation(sub.ray_matrix());
    const std::size_t k = basis.cols();
    const std::size_t t = coin(rng, torus_p) ? 1 : 0;
    IntMatrix u = random_unimodular(rng, k + t);
    const IntMatrix coords = *solve(basis, sub.ray_matrix());
    const IntMatrix rays = u * pad(coords, k + t, coords.cols());
    g.diagram.objects.emplace(id, ToricMonoid::make(k + t, Cone::from_rays(k + t, rays.columns())));
    g.to_ambient.emplace(id, pad(basis, g.ambient_rank, k + t) * inverse_unimodular(u));
    g.face_of.emplace(id, faces[i]);
    ids.push_back(id);
    bases.push_back(std::move(basis));
    units.push_back(std::move(u));
    dims.push_back(k);
    ranks.push_back(k + t);
  }
  g.zero_id = ids.front();
  g.top_id = ids.back();
  auto below = [&](std::size_t i, std::size_t j) {
    return faces[i].size() < faces[j].size() &&
           std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
  };
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (!below(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < faces.size() && cover; ++k)
        if (below(i, k) && below(k, j)) cover = false;
      if (!cover && !all_relations) continue;
      const IntMatrix x = *solve(bases[j], bases[i]);
      const IntMatrix m = units[j] * pad(x, ranks[j], ranks[i]) * inverse_unimodular(units[i]);
      g.diagram.morphisms.push_back({ids[i], ids[j], m});
    }
  return g;
}

/// Direct sum of two face diagrams glued along a single zero object.
inline GeneratedDiagram coproduct(const GeneratedDiagram& a, const GeneratedDiagram& b) {
  GeneratedDiagram g;
  g.ambient_rank = a.ambient_rank + b.ambient_rank;
  g.zero_id = a.zero_id;
  const ToricMonoid& zero = a.diagram.objects.at(a.zero_id);
  auto shift = [&](const IntMatrix& m, std::size_t offset) {
    IntMatrix out(g.ambient_rank, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(r + offset, c) = m(r, c);
    return out;
  };
  for (const auto& [id, m] : a.diagram.objects) {
    g.diagram.objects.emplace(id, m);
    g.to_ambient.emplace(id, shift(a.to_ambient.at(id), 0));
  }
  for (const auto& [id, m] : b.diagram.objects) {
    if (id == b.zero_id) continue;
    g.diagram.objects.emplace(id, m);
    g.to_ambient.emplace(id, shift(b.to_ambient.at(id), a.ambient_rank));
  }
  g.diagram.morphisms = a.diagram.morphisms;
  for (auto f : b.diagram.morphisms) {
    if (f.from == b.zero_id) {
      f.from = g.zero_id;
      f.matrix = IntMatrix(b.diagram.objects.at(f.to).lattice_rank, zero.lattice_rank);
    }
    g.diagram.morphisms.push_back(std::move(f));
  }
  return g;
}

/// Random orientation-free charts: a face-closed family of faces of a random
/// full-dimensional cone, with beta = B * (inclusion into Z^n) for a random
/// nonsingular B.
struct GeneratedCharts {
  ChartData charts;
  GeneratedDiagram source;
};

inline GeneratedCharts random_subfan_charts(Rng& rng, std::size_t n, std::size_t max_rays) {
  const Cone c = random_pointed_cone(rng, n, max_rays);
  GeneratedDiagram all = scrambled_face_diagram(rng, c, "f");
  std::vector<std::string> ids;
  for (const auto& [id, m] : all.diagram.objects) ids.push_back(id);
  std::set<std::string> members;
  const std::size_t picks = uniform(rng, 1, 3);
  for (std::size_t p = 0; p < picks; ++p) {
    const std::string& top = ids[uniform(rng, 0, ids.size() - 1)];
    const auto& face = all.face_of.at(top);
    for (const auto& id : ids) {
      const auto& other = all.face_of.at(id);
      if (std::includes(face.begin(), face.end(), other.begin(), other.end())) members.insert(id);
    }
  }
  IntMatrix beta;
  do {
    beta = random_matrix(rng, n, n, -3, 3);
  } while (oracle::laplace_det(beta) == 0);

  GeneratedCharts out;
  out.charts.diagram = induced_subdiagram(all.diagram, members);
  out.charts.target_rank = n;
  for (const auto& id : members) {
    const ToricMonoid& m = all.diagram.objects.at(id);
    out.charts.betas.emplace(id, beta * all.to_ambient.at(id) * gp(m));
  }
  out.source = std::move(all);
  return out;
}

/// Complete fan: face fan of the convex hull of primitive points containing
/// +-e_i, found by brute force over (n-1)-subsets. n in {1, 2, 3}.
inline Fan random_complete_fan(Rng& rng, std::size_t n) {
  std::set<IntVector> points;
  for (std::size_t i = 0; i < n; ++i)
    for (long s : {-1L, 1L}) {
      IntVector e(n);
      e[i] = s;
      points.insert(e);
    }
  const std::size_t extra = n == 1 ? 0 : uniform(rng, 0, 2 * n);
  while (points.size() < 2 * n + extra) {
    IntVector v(n);
    for (auto& x : v) x = uniform(rng, -3, 3);
    if (content(v) == 1) points.insert(v);
  }
  const std::vector<IntVector> pts(points.begin(), points.end());
  std::set<std::vector<std::size_t>> facets;
  if (n == 1) {
    facets = {{0}, {1}};
  } else {
    oracle::for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
      // Affine hyperplane through n points: normal to their differences.
      std::vector<oracle::Vec64> diffs;
      const auto p0 = oracle::to64(pts[idx[0]]);
      for (std::size_t k = 1; k < n; ++k) {
        auto d = oracle::to64(pts[idx[k]]);
        for (std::size_t c = 0; c < n; ++c) d[c] -= p0[c];
        diffs.push_back(std::move(d));
      }
      const auto h = oracle::cofactor_normal(diffs, n);
      if (std::all_of(h.begin(), h.end(), [](std::int64_t x) { return x == 0; })) return;
      const std::int64_t level = oracle::dot64(h, p0);
      bool above = false, below = false;
      std::vector<std::size_t> on;
      for (std::size_t q = 0; q < pts.size(); ++q) {
        const std::int64_t v = oracle::dot64(h, oracle::to64(pts[q]));
        above |= v > level;
        below |= v < level;
        if (v == level) on.push_back(q);
      }
      if (above && below) return;
      facets.insert(on);
    });
  }
  std::vector<Cone> cones;
  std::set<IntVector> rays;
  for (const auto& f : facets) {
    std::vector<IntVector> gens;
    for (std::size_t q : f) gens.push_back(pts[q]);
    cones.push_back(Cone::from_rays(n, gens));
    rays.insert(cones.back().rays().begin(), cones.back().rays().end());
  }
  Fan fan{n, std::vector<IntVector>(rays.begin(), rays.end()), {}};
  for (const auto& c : cones) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(std::find(fan.rays.begin(), fan.rays.end(), r) - fan.rays.begin());
    std::sort(idx.begin(), idx.end());
    fan.maximal_cones.push_back(std::move(idx));
  }
  return fan;
}

}  // namespace toric::gen
