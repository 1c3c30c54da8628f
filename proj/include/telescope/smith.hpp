#pragma once

#include <vector>

#include "telescope/integer_matrix.hpp"

namespace telescope {

/// U * A * V = D with U, V unimodular and D diagonal in Smith form.
struct SmithDecomposition {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;

  /// Diagonal entries d_1..d_min(rows, cols), nonnegative, each dividing the next.
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

/// Deterministic Smith normal form. The pivot at each stage is the nonzero
/// entry of least absolute value in the trailing submatrix, ties broken by
/// (row, col) order.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Checks U*A*V == D, |det U| == |det V| == 1, the diagonal shape and the
/// divisibility chain. Used by tests and by the catalog verifier.
bool certifies(const SmithDecomposition& snf, const IntegerMatrix& a);

}  // namespace telescope
