#pragma once

// Exact linear algebra for the trace-space computations: incremental row
// echelon forms over a field policy D, integer row lattices kept in echelon
// form by unimodular gcd steps, and Smith normal form.

#include "preproj/scalar.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace preproj {

template <class D>
using SparseRow = std::vector<std::pair<int, typename D::Scalar>>;  // sorted by column, no zeros

/// Row echelon form built one row at a time. Pivot rows are monic.
template <class D>
class SparseEchelon {
 public:
  using Scalar = typename D::Scalar;

  SparseEchelon(D dom, int ncols) : dom_(std::move(dom)), ncols_(ncols), pivot_row_(ncols, -1) {}

  int cols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduces `row` against the pivots; true when it added a new pivot.
  bool add_row(const SparseRow<D>& row);
  /// What is left of `row` after elimination (empty iff row lies in the span).
  SparseRow<D> reduce(const SparseRow<D>& row) const;
  bool in_span(const SparseRow<D>& row) const { return reduce(row).empty(); }

  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

 private:
  D dom_;
  int ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow<D>> rows_;
};

using IntRow = std::vector<mpz_class>;

/// Lattice spanned by integer rows, in echelon form with positive pivots.
class IntegerLattice {
 public:
  explicit IntegerLattice(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

  int cols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  void add_row(IntRow row);
  bool contains(IntRow v) const;
  const std::vector<IntRow>& basis() const { return rows_; }

  /// Invariant factors of Z^ncols / lattice that exceed 1, in divisibility order.
  std::vector<mpz_class> torsion() const;
  int free_rank() const { return ncols_ - rank(); }

 private:
  int ncols_;
  std::vector<int> pivot_of_col_;
  std::vector<IntRow> rows_;  // rows_[k] has leading column pivot_cols_[k]
  std::vector<int> pivot_cols_;
};

/// Diagonal of the Smith normal form of a dense integer matrix (nonzero
/// entries only, each dividing the next).
std::vector<mpz_class> smith_diagonal(std::vector<IntRow> m);

extern template class SparseEchelon<RationalDomain>;
extern template class SparseEchelon<PrimeField>;

}  // namespace preproj
