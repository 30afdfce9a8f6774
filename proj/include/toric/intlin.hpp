// Copyright 2026 The toricglue Authors
// SPDX-License-Identifier: Apache-2.0

// Exact integer linear algebra over GMP integers. IntMatrix(r, c) is the map
// Z^c -> Z^r; vectors are columns. Empty matrices (0 rows or 0 columns) are
// legal everywhere.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Row-major literal; `cols` disambiguates matrices with no rows.
  static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows,
                      std::size_t cols = 0);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;
  std::span<const Integer> entries() const noexcept { return entries_; }

  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_range(std::size_t first, std::size_t count) const;
  IntMatrix row_range(std::size_t first, std::size_t count) const;
  IntMatrix select_columns(std::span<const std::size_t> which) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_columns(std::size_t i, std::size_t j);
  /// row_i += factor * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);
  /// col_i += factor * col_j
  void add_column_multiple(std::size_t i, std::size_t j,
                           const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
/// gcd of the entries; zero for the zero vector.
Integer content(std::span<const Integer> v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
/// Row vector times matrix: (v^T * m)^T.
IntVector pull_back(const IntVector& v, const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors() const;
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties by
/// lowest row then lowest column. Output is deterministic.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// H = A * W with W unimodular and H in reduced column echelon form: every
/// pivot is positive and the entries left of a pivot lie in [0, pivot).
/// H is unique for the column lattice of A.
struct HermiteDecomposition {
  IntMatrix h;
  IntMatrix w;
  std::size_t rank = 0;
};

HermiteDecomposition column_hermite_form(const IntMatrix& a);

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const CokernelInvariants&,
                         const CokernelInvariants&) = default;
};

/// Z^rows / im(A) = Z^free_rank + sum of Z/torsion_i.
CokernelInvariants cokernel_invariants(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

/// Canonical (column Hermite) basis of the saturated lattice ker(A).
IntMatrix kernel_basis(const IntMatrix& a);

/// Canonical basis of span_Q(columns) intersected with Z^rows. Columns may be
/// dependent.
IntMatrix span_saturation(const IntMatrix& b);

/// Saturation of the column lattice of B. Throws DependentColumns.
IntMatrix saturate(const IntMatrix& b);

/// Columns C with (column lattice of B) + C = Z^rows, obtained by
/// Hermite completion of B^T. Throws NotSaturated.
IntMatrix complement_summand(const IntMatrix& b);

/// Integer solution of A x = b, if one exists.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);
/// Integer solution X of A X = B, if one exists.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// True iff the columns are independent and span a saturated sublattice.
bool is_saturated_basis(const IntMatrix& b);

IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace toric
