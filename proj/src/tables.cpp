#include "tables.hpp"

#include <cmath>

#include "eigensolve.hpp"

namespace tric {

const std::vector<TableShape>& table_shapes() {
  static const std::vector<TableShape> shapes = [] {
    std::vector<TableShape> s;
    auto add = [&s](const std::string& label, const Rat& a, const Rat& b,
                    bool approx = false) {
      s.push_back(TableShape{label, TriangleShape{a, b}, approx});
    };
    add("T_{0,1}", rat(0), rat(1));
    add("T_{0,1/2}", rat(0), rat(1, 2));
    add("T_{0,1/5}", rat(0), rat(1, 5));
    add("T_{0,1/10}", rat(0), rat(1, 10));
    add("T_{1/4,1}", rat(1, 4), rat(1));
    add("T_{1/4,1/2}", rat(1, 4), rat(1, 2));
    add("T_{1/4,1/5}", rat(1, 4), rat(1, 5));
    add("T_{1/4,1/10}", rat(1, 4), rat(1, 10));
    add("T_{1/2,sqrt(3)/2}", rat(1, 2), rat_from_double(std::sqrt(3.0) / 2), true);
    add("T_{1/2,1/2}", rat(1, 2), rat(1, 2));
    add("T_{1/2,1/5}", rat(1, 2), rat(1, 5));
    add("T_{1/2,1/10}", rat(1, 2), rat(1, 10));
    return s;
  }();
  return shapes;
}

double table_upper_bound(int j, int n, const TriangleShape& shape) {
  double c = discrete_constant(j, n, shape);
  if (j != 4) return bound_from_discrete(j, n, c);
  double c2 = bound_from_discrete(2, n, discrete_constant(2, n, shape));
  return bound_from_discrete(4, n, c, c2);
}

TableResult compute_table(int j, const std::vector<int>& ns, int degree) {
  TableResult out;
  out.j = j;
  out.ns = ns;
  out.degree = degree;
  for (const TableShape& ts : table_shapes()) {
    TableRow row;
    row.shape = ts;
    row.k_value = std::sqrt(rat_to_double(l_constant(j, ts.shape)));
    for (int n : ns) row.upper_bounds.push_back(table_upper_bound(j, n, ts.shape));
    if (degree > 0)
      row.subspace_estimate = poly_subspace_constant(j, ts.shape, subspace_spec(j, degree));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace tric
