#pragma once

#include <string>
#include <vector>

#include "polyspace.hpp"

namespace tric {

// The twelve reference shapes of the result tables. The equilateral height
// sqrt(3)/2 is irrational; its closest double is used as the exact rational
// shape parameter (the constants are Lipschitz in b, so the 1e-16 relative
// shape displacement is far below every reported digit).
struct TableShape {
  std::string label;
  TriangleShape shape;
  bool b_is_approximate;
};
const std::vector<TableShape>& table_shapes();

struct TableRow {
  TableShape shape;
  double k_value = 0;
  std::vector<double> upper_bounds;  // per requested n, transferred bounds
  double subspace_estimate = 0;      // degree-limited Rayleigh supremum
};

struct TableResult {
  int j = 0;
  std::vector<int> ns;
  int degree = 0;
  std::vector<TableRow> rows;
};

// One table: K_j, the transferred discrete upper bounds for each n, and the
// polynomial-subspace estimate. For j = 4 the transfer consumes the j = 2
// bound of the same n, which is computed on the side.
TableResult compute_table(int j, const std::vector<int>& ns, int degree);

// Single cells (used by tests to avoid recomputation patterns).
double table_upper_bound(int j, int n, const TriangleShape& shape);

}  // namespace tric
