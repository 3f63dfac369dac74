#include "kt/linalg.hpp"

namespace kt {

namespace {

// row -= factor * other, sparsely.  `factor` is taken by value because the
// callers pass a coefficient of `row` itself, which the loop may erase.
void axpy(SparseRow& row, Rational factor, const SparseRow& other) {
    if (factor == 0) return;
    for (const auto& [col, val] : other) {
        auto it = row.find(col);
        if (it == row.end()) {
            row.emplace(col, -factor * val);
        } else {
            it->second -= factor * val;
            if (it->second == 0) row.erase(it);
        }
    }
}

void scale_to_unit_pivot(SparseRow& row) {
    Rational lead = row.begin()->second;
    if (lead == 1) return;
    for (auto& [col, val] : row) val /= lead;
}

}  // namespace

SparseRow Echelon::reduce(SparseRow row) const {
    // Eliminate against every matching pivot, not only the leading one, so
    // the result has no support on any pivot column.  A pivot row's support
    // starts at its pivot column, so entries left of `col` never change.
    auto it = row.begin();
    while (it != row.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        axpy(row, it->second, p->second);
        it = row.upper_bound(col);
    }
    return row;
}

bool Echelon::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    scale_to_unit_pivot(row);
    int pivot = row.begin()->first;
    // Back-substitute into existing rows so the form stays fully reduced.
    for (auto& [p, r] : rows_) {
        auto it = r.find(pivot);
        if (it != r.end()) axpy(r, it->second, row);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

size_t rank_of(const std::vector<std::vector<Rational>>& mat) {
    Echelon ech;
    for (const auto& dense : mat) {
        SparseRow row;
        for (size_t j = 0; j < dense.size(); ++j)
            if (dense[j] != 0) row.emplace(static_cast<int>(j), dense[j]);
        ech.insert(std::move(row));
    }
    return ech.rank();
}

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols) {
    Echelon ech;
    for (const auto& r : rows) ech.insert(r);

    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [p, r] : ech.rows()) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[f] = 1;
        for (const auto& [p, r] : ech.rows()) {
            auto it = r.find(f);
            if (it != r.end()) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace kt
