// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "toric/error.hpp"

namespace toric {
namespace {

using ZeroSet = std::vector<char>;

std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t n) {
  return rank(IntMatrix::from_columns(n, vectors));
}

// r <- a*r - b*l, primitive.
IntVector combine(const Integer& a, const IntVector& r, const Integer& b,
                  const IntVector& l) {
  IntVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = a * r[i] - b * l[i];
  return primitive(std::move(out));
}

// Projection of r onto the orthogonal complement of the column span of lin,
// scaled to a primitive integer vector.
IntVector project_off(const IntVector& r, const IntMatrix& lin) {
  const std::size_t n = lin.rows();
  const std::size_t k = lin.cols();
  // Solve (lin^T lin) y = lin^T r over Q by Gauss-Jordan.
  std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Integer s;
      for (std::size_t t = 0; t < n; ++t) s += lin(t, i) * lin(t, j);
      aug[i][j] = s;
    }
    Integer s;
    for (std::size_t t = 0; t < n; ++t) s += lin(t, i) * r[t];
    aug[i][k] = s;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (sgn(aug[p][c]) == 0) ++p;  // Gram matrix of a basis is invertible
    std::swap(aug[p], aug[c]);
    const Rational piv = aug[c][c];
    for (auto& x : aug[c]) x /= piv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<Rational> proj(n);
  for (std::size_t t = 0; t < n; ++t) {
    proj[t] = r[t];
    for (std::size_t i = 0; i < k; ++i) proj[t] -= aug[i][k] * lin(t, i);
  }
  Integer den = 1;
  for (const auto& x : proj) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                     x.get_den_mpz_t());
  IntVector out(n);
  for (std::size_t t = 0; t < n; ++t) {
    Rational scaled = proj[t] * den;
    out[t] = scaled.get_num();
  }
  return primitive(std::move(out));
}

ZeroSet zero_set(const IntVector& r, const std::vector<IntVector>& rows) {
  ZeroSet z(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) z[i] = sgn(dot(rows[i], r)) == 0;
  return z;
}

std::vector<IntVector> canonical_generators(
    std::size_t n, const std::vector<IntVector>& generators) {
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != n)
      throw Error(ErrorCode::kInvalidArgument,
                  "generator length differs from ambient rank");
    IntVector p = primitive(g);
    if (std::any_of(p.begin(), p.end(), [](const Integer& x) { return sgn(x) != 0; }))
      gens.push_back(std::move(p));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

DualCone dual_of_generators(std::size_t n,
                            const std::vector<IntVector>& generators) {
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const auto& raw : generators) {
    if (raw.size() != n)
      throw Error(ErrorCode::kInvalidArgument,
                  "generator length differs from ambient rank");
    const IntVector g = primitive(raw);
    auto hit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const IntVector& l) { return sgn(dot(g, l)) != 0; });
    if (hit != lineality.end()) {
      IntVector l = *hit;
      lineality.erase(hit);
      Integer a = dot(g, l);
      if (sgn(a) < 0) {
        for (auto& x : l) x = -x;
        a = -a;
      }
      for (auto& other : lineality) {
        const Integer b = dot(g, other);
        if (sgn(b) != 0) other = combine(a, other, b, l);
      }
      for (auto& r : rays) {
        const Integer b = dot(g, r);
        if (sgn(b) != 0) r = combine(a, r, b, l);
      }
      rays.push_back(std::move(l));
      processed.push_back(g);
      continue;
    }

    std::vector<IntVector> pos, neg, next;
    for (auto& r : rays) {
      const int s = sgn(dot(g, r));
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
      else next.push_back(r);
    }
    processed.push_back(g);
    if (neg.empty()) {
      next.insert(next.end(), pos.begin(), pos.end());
      rays = std::move(next);
      continue;
    }
    // Extreme rays of the pointed quotient have exactly rank(A) - 1
    // independent tight constraints; rank(A) = n - dim(lineality).
    const std::size_t target = n - lineality.size() - 1;
    std::set<ZeroSet> seen;
    for (const auto& r : next) seen.insert(zero_set(r, processed));
    std::vector<IntVector> combos;
    for (const auto& p : pos) {
      const ZeroSet zp = zero_set(p, processed);
      for (const auto& q : neg) {
        const ZeroSet zq = zero_set(q, processed);
        std::vector<IntVector> common;
        std::size_t count = 0;
        for (std::size_t i = 0; i + 1 < processed.size(); ++i)
          if (zp[i] && zq[i]) {
            common.push_back(processed[i]);
            ++count;
          }
        // Adjacency needs at least target - 1 shared old constraints.
        if (count + 1 < target) continue;
        if (rank_of(common, n) + 1 != target) continue;
        IntVector c = combine(dot(g, p), q, dot(g, q), p);
        ZeroSet zc = zero_set(c, processed);
        if (seen.insert(zc).second) combos.push_back(std::move(c));
      }
    }
    next.insert(next.end(), pos.begin(), pos.end());
    next.insert(next.end(), combos.begin(), combos.end());
    rays = std::move(next);
  }

  DualCone out;
  out.ambient_rank = n;
  out.lineality = IntMatrix(n, 0);
  if (!lineality.empty())
    out.lineality = span_saturation(IntMatrix::from_columns(n, lineality));
  for (auto& r : rays) {
    out.rays.push_back(out.lineality.cols() ? project_off(r, out.lineality)
                                            : primitive(r));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

Cone::Cone(std::size_t ambient_rank, std::vector<IntVector> rays)
    : ambient_rank_(ambient_rank), rays_(std::move(rays)) {
  dual_ = dual_of_generators(ambient_rank_, rays_);
  dimension_ = ambient_rank_ - dual_.lineality.cols();
}

Cone Cone::zero(std::size_t ambient_rank) { return Cone(ambient_rank, {}); }

Cone Cone::from_rays(std::size_t n, const std::vector<IntVector>& generators) {
  std::vector<IntVector> gens = canonical_generators(n, generators);
  if (gens.empty()) return zero(n);
  const DualCone d = dual_of_generators(n, gens);
  std::vector<IntVector> span = d.rays;
  for (std::size_t c = 0; c < d.lineality.cols(); ++c)
    span.push_back(d.lineality.column(c));
  if (rank_of(span, n) != n)
    throw Error(ErrorCode::kNotPointed, "generated cone contains a line");

  std::vector<IntVector> extreme;
  for (const auto& g : gens) {
    std::vector<IntVector> tight;
    for (const auto& m : d.rays)
      if (sgn(dot(m, g)) == 0) tight.push_back(m);
    for (std::size_t c = 0; c < d.lineality.cols(); ++c)
      tight.push_back(d.lineality.column(c));
    if (rank_of(tight, n) + 1 == n) extreme.push_back(g);
  }
  Cone c;
  c.ambient_rank_ = n;
  c.rays_ = std::move(extreme);
  c.dual_ = d;
  c.dimension_ = n - d.lineality.cols();
  return c;
}

IntMatrix Cone::ray_matrix() const {
  return IntMatrix::from_columns(ambient_rank_, rays_);
}

Cone Cone::subcone(const std::vector<std::size_t>& ray_indices) const {
  std::vector<IntVector> sub;
  for (std::size_t i : ray_indices) sub.push_back(rays_.at(i));
  return Cone(ambient_rank_, std::move(sub));
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.ambient_rank_ != b.ambient_rank_)
    return a.ambient_rank_ < b.ambient_rank_;
  return a.rays_ < b.rays_;
}

Cone cone_from_rays(std::size_t ambient_rank,
                    const std::vector<IntVector>& generators) {
  return Cone::from_rays(ambient_rank, generators);
}

DualCone dual_cone(const Cone& c) { return c.dual(); }

bool contains(const Cone& c, const IntVector& v) {
  if (v.size() != c.ambient_rank())
    throw Error(ErrorCode::kInvalidArgument, "vector length differs from rank");
  const DualCone& d = c.dual();
  for (std::size_t col = 0; col < d.lineality.cols(); ++col)
    if (sgn(dot(d.lineality.column(col), v)) != 0) return false;
  return std::all_of(d.rays.begin(), d.rays.end(),
                     [&](const IntVector& m) { return sgn(dot(m, v)) >= 0; });
}

std::vector<std::vector<std::size_t>> face_index_sets(const Cone& c) {
  using Face = std::vector<std::size_t>;
  Face top(c.rays().size());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  std::set<Face> found{top};
  std::vector<Face> frontier{top};
  const auto& normals = c.dual().rays;
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const auto& f : frontier) {
      for (const auto& m : normals) {
        Face child;
        for (std::size_t i : f)
          if (sgn(dot(m, c.rays()[i])) == 0) child.push_back(i);
        if (child.size() == f.size()) continue;
        if (found.insert(child).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Face> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() < b.size();
  });
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& idx : face_index_sets(c)) out.push_back(c.subcone(idx));
  return out;
}

std::vector<std::size_t> face_closure(const Cone& c,
                                      const std::vector<IntVector>& vectors) {
  IntVector s(c.ambient_rank());
  for (const auto& m : c.dual().rays) {
    bool vanishes = std::all_of(vectors.begin(), vectors.end(),
                                [&](const IntVector& v) { return sgn(dot(m, v)) == 0; });
    if (!vanishes) continue;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.rays().size(); ++i)
    if (sgn(dot(s, c.rays()[i])) == 0) out.push_back(i);
  return out;
}

std::optional<std::vector<std::size_t>> ray_indices(const Cone& c,
                                                    const Cone& f) {
  if (f.ambient_rank() != c.ambient_rank()) return std::nullopt;
  std::vector<std::size_t> idx;
  for (const auto& r : f.rays()) {
    auto it = std::lower_bound(c.rays().begin(), c.rays().end(), r);
    if (it == c.rays().end() || *it != r) return std::nullopt;
    idx.push_back(static_cast<std::size_t>(it - c.rays().begin()));
  }
  return idx;
}

bool is_face(const Cone& c, const Cone& f) {
  auto idx = ray_indices(c, f);
  if (!idx) return false;
  return face_closure(c, f.rays()) == *idx;
}

Functional supporting_functional(const Cone& c, const Cone& f) {
  if (!is_face(c, f))
    throw Error(ErrorCode::kNotAFace, "supporting_functional: not a face");
  IntVector s(c.ambient_rank());
  for (const auto& m : c.dual().rays) {
    bool vanishes = std::all_of(f.rays().begin(), f.rays().end(),
                                [&](const IntVector& v) { return sgn(dot(m, v)) == 0; });
    if (!vanishes) continue;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
  }
  return Functional{primitive(std::move(s))};
}

IntMatrix span_sublattice(const Cone& c) {
  return span_saturation(c.ray_matrix());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::kInvalidArgument, "intersect: rank mismatch");
  const std::size_t n = a.ambient_rank();
  std::vector<IntVector> gens;
  for (const Cone* c : {&a, &b}) {
    const DualCone& d = c->dual();
    gens.insert(gens.end(), d.rays.begin(), d.rays.end());
    for (std::size_t col = 0; col < d.lineality.cols(); ++col) {
      IntVector l = d.lineality.column(col);
      gens.push_back(l);
      for (auto& x : l) x = -x;
      gens.push_back(std::move(l));
    }
  }
  const DualCone meet = dual_of_generators(n, gens);
  if (!meet.pointed())
    throw Error(ErrorCode::kInternal, "intersection of pointed cones has a line");
  return Cone::from_rays(n, meet.rays);
}

Cone image(const IntMatrix& map, const Cone& c) {
  if (map.cols() != c.ambient_rank())
    throw Error(ErrorCode::kInvalidArgument, "image: shape mismatch");
  std::vector<IntVector> gens;
  for (const auto& r : c.rays()) gens.push_back(map * r);
  return Cone::from_rays(map.rows(), gens);
}

}  // namespace toric
