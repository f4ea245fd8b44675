// Dense exact linear algebra over Rat: Gaussian elimination with
// deterministic pivoting, plus the handful of derived routines the
// geometric kernel needs (rank, kernels, determinants, linear solves).
#pragma once

#include "polyvert/rational.hpp"

#include <optional>
#include <vector>

namespace polyvert {

using Mat = std::vector<Vec>;  // row-major

// Reduced row echelon form in place.  Pivot choice is deterministic:
// first row with a nonzero entry in the leftmost unfinished column.
// Returns the pivot columns (their count is the rank).
std::vector<size_t> rref(Mat& m);

size_t rank(Mat m);

// Solves A x = b.  Returns nullopt when inconsistent; when the system is
// underdetermined the solution with zeros in all free columns is returned.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Basis of { x : A x = 0 }, one vector per free column, deterministic.
std::vector<Vec> kernel_basis(const Mat& a, size_t cols);

// Determinant of a square matrix (Gaussian elimination, exact).
Rat det(Mat m);

// rank of the span of a set of vectors
inline size_t rank_of(const std::vector<Vec>& rows) { return rank(Mat(rows.begin(), rows.end())); }

// True when `v` lies in the row span of `rows`.
bool in_span(const std::vector<Vec>& rows, const Vec& v);

}  // namespace polyvert
