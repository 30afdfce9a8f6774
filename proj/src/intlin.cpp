// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

#include "toric/intlin.hpp"

#include <algorithm>
#include <utility>

#include "toric/error.hpp"

namespace toric {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::of(std::initializer_list<std::initializer_list<long>> rows,
                        std::size_t cols) {
  if (rows.size() > 0) cols = rows.begin()->size();
  IntMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols)
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix literal");
    std::size_t c = 0;
    for (long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() +
                       static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t count) const {
  IntMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t count) const {
  IntMatrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> which) const {
  IntMatrix m(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < which.size(); ++c)
      m(r, c) = (*this)(r, which[c]);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::kInvalidArgument, "matrix product shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  Integer t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(m(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::kInvalidArgument, "matrix difference shape mismatch");
  IntMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    m.entries_[i] = a.entries_[i] - b.entries_[i];
  return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size())
    throw Error(ErrorCode::kInvalidArgument, "matrix-vector shape mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), v[k].get_mpz_t());
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j,
                                 const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    mpz_addmul((*this)(i, c).get_mpz_t(), factor.get_mpz_t(),
               (*this)(j, c).get_mpz_t());
}

void IntMatrix::add_column_multiple(std::size_t i, std::size_t j,
                                    const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    mpz_addmul((*this)(r, i).get_mpz_t(), factor.get_mpz_t(),
               (*this)(r, j).get_mpz_t());
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_column(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw Error(ErrorCode::kInvalidArgument, "hconcat row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::kInvalidArgument, "dot product length mismatch");
  Integer s;
  for (std::size_t i = 0; i < a.size(); ++i)
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (sgn(g) == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector pull_back(const IntVector& v, const IntMatrix& m) {
  if (v.size() != m.rows())
    throw Error(ErrorCode::kInvalidArgument, "pull_back shape mismatch");
  IntVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(v[r]) == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_addmul(out[c].get_mpz_t(), v[r].get_mpz_t(), m(r, c).get_mpz_t());
  }
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && sgn(d(r, r)) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Smallest nonzero |entry| in the block starting at (t, t).
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (sgn(d(i, j)) == 0) continue;
      if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.d;
  Integer q;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    for (;;) {
      d.swap_rows(t, pr);
      s.u.swap_rows(t, pr);
      d.swap_columns(t, pc);
      s.v.swap_columns(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        s.u.add_row_multiple(i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_column_multiple(j, t, q);
        s.v.add_column_multiple(j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold an offending row into row t and go again.
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == m) break;
        d.add_row_multiple(t, bad, 1);
        s.u.add_row_multiple(t, bad, 1);
      }
      find_pivot(d, t, pr, pc);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

HermiteDecomposition column_hermite_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteDecomposition out{a, IntMatrix::identity(n), 0};
  IntMatrix& h = out.h;
  IntMatrix& w = out.w;
  std::size_t pc = 0;
  Integer g, x, y, ag, bg, q;
  for (std::size_t i = 0; i < m && pc < n; ++i) {
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (sgn(h(i, j)) == 0) continue;
      const Integer a0 = h(i, pc);
      const Integer b0 = h(i, j);
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a0.get_mpz_t(),
                 b0.get_mpz_t());
      mpz_divexact(ag.get_mpz_t(), a0.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(bg.get_mpz_t(), b0.get_mpz_t(), g.get_mpz_t());
      // [col_pc, col_j] <- [col_pc, col_j] * [[x, -bg], [y, ag]], det 1.
      for (IntMatrix* mat : {&h, &w}) {
        for (std::size_t r = 0; r < mat->rows(); ++r) {
          const Integer p = (*mat)(r, pc);
          const Integer s = (*mat)(r, j);
          (*mat)(r, pc) = x * p + y * s;
          (*mat)(r, j) = ag * s - bg * p;
        }
      }
    }
    if (sgn(h(i, pc)) == 0) continue;
    if (sgn(h(i, pc)) < 0) {
      h.negate_column(pc);
      w.negate_column(pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, pc).get_mpz_t());
      if (sgn(q) == 0) continue;
      q = -q;
      h.add_column_multiple(j, pc, q);
      w.add_column_multiple(j, pc, q);
    }
    ++pc;
  }
  out.rank = pc;
  return out;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  CokernelInvariants out;
  const std::size_t r = s.rank();
  out.free_rank = a.rows() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (s.d(i, i) != 1) out.torsion.push_back(s.d(i, i));
  return out;
}

std::size_t rank(const IntMatrix& a) { return column_hermite_form(a).rank; }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  IntMatrix basis = s.v.column_range(r, a.cols() - r);
  return column_hermite_form(basis).h.column_range(0, basis.cols());
}

IntMatrix span_saturation(const IntMatrix& b) {
  const IntMatrix annihilator = kernel_basis(b.transpose());
  return kernel_basis(annihilator.transpose());
}

IntMatrix saturate(const IntMatrix& b) {
  if (rank(b) != b.cols())
    throw Error(ErrorCode::kDependentColumns,
                "saturate: columns are linearly dependent");
  return span_saturation(b);
}

bool is_saturated_basis(const IntMatrix& b) {
  const SmithDecomposition s = smith_normal_form(b);
  if (s.rank() != b.cols()) return false;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (s.d(i, i) != 1) return false;
  return true;
}

IntMatrix complement_summand(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const HermiteDecomposition hb = column_hermite_form(b);
  const IntMatrix basis = hb.h.column_range(0, hb.rank);
  const std::size_t k = basis.cols();
  if (!is_saturated_basis(basis))
    throw Error(ErrorCode::kNotSaturated,
                "complement_summand: column lattice is not saturated");
  // With unit pivots, the coordinate vectors of the non-pivot rows complete
  // the echelon basis to a unitriangular matrix.
  std::vector<char> pivot_row(n, 0);
  bool unit_pivots = true;
  for (std::size_t j = 0; j < k && unit_pivots; ++j) {
    std::size_t r = 0;
    while (sgn(basis(r, j)) == 0) ++r;
    pivot_row[r] = 1;
    unit_pivots = basis(r, j) == 1;
  }
  if (unit_pivots) {
    IntMatrix c(n, n - k);
    std::size_t col = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (!pivot_row[r]) c(r, col++) = 1;
    return c;
  }
  // Otherwise basis^T * W = [I | 0]; basis is the first k columns of W^{-T}
  // and the remaining columns complete it.
  const HermiteDecomposition ht = column_hermite_form(basis.transpose());
  const IntMatrix completed = inverse_unimodular(ht.w).transpose();
  return completed.column_range(k, n - k);
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw Error(ErrorCode::kInvalidArgument, "solve: shape mismatch");
  const SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  const IntVector ub = s.u * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.d(i, i).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.d(i, i).get_mpz_t());
    } else if (sgn(ub[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows())
    throw Error(ErrorCode::kInvalidArgument, "solve: shape mismatch");
  const SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  const IntMatrix ub = s.u * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i < r) {
        if (!mpz_divisible_p(ub(i, c).get_mpz_t(), s.d(i, i).get_mpz_t()))
          return std::nullopt;
        mpz_divexact(y(i, c).get_mpz_t(), ub(i, c).get_mpz_t(),
                     s.d(i, i).get_mpz_t());
      } else if (sgn(ub(i, c)) != 0) {
        return std::nullopt;
      }
    }
  return s.v * y;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  const SmithDecomposition s = smith_normal_form(a);
  if (s.d != IntMatrix::identity(a.rows()))
    throw Error(ErrorCode::kInvalidArgument, "matrix is not unimodular");
  // U A V = I  =>  A^{-1} = V U
  return s.v * s.u;
}

}  // namespace toric
