#pragma once

// Exact linear algebra over the rationals, sized for the linear systems that
// arise here: Killing-equation solves, span comparisons, and derivation
// kernels.  Rows are kept sparse (column -> value) because generator images
// touch only a handful of monomials each.

#include "kt/rational.hpp"

#include <map>
#include <vector>

namespace kt {

using SparseRow = std::map<int, Rational>;

// Incremental reduced row echelon form.  Columns are eliminated in
// increasing column-index order; callers choose the pivoting priority by
// how they number columns.
class Echelon {
  public:
    // Reduces the row against the current basis and inserts the remainder
    // if it is nonzero.  Returns true when the rank grew.
    bool insert(SparseRow row);

    // Reduces a row against the basis without inserting it.
    SparseRow reduce(SparseRow row) const;

    size_t rank() const { return rows_.size(); }
    const std::map<int, SparseRow>& rows() const { return rows_; }  // pivot col -> row

  private:
    std::map<int, SparseRow> rows_;
};

size_t rank_of(const std::vector<std::vector<Rational>>& mat);

// Right-nullspace of the sparse system {row . x = 0}, x over columns
// 0..ncols-1.  The basis is canonical: reduced echelon form with pivots on
// the smallest-index columns, one vector per free column in column order,
// free coordinate set to 1.
std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols);

}  // namespace kt
