#include "mesh.hpp"

#include <stdexcept>

namespace tric {

namespace {

std::vector<std::vector<int>> zeros(int rows, int cols) {
  return std::vector<std::vector<int>>(static_cast<size_t>(rows),
                                       std::vector<int>(static_cast<size_t>(cols), 0));
}

}  // namespace

MeshIndexing build_indexing(int n) {
  if (n < 2) throw std::invalid_argument("refinement requires n >= 2");
  MeshIndexing m;
  m.n = n;

  // vertex ids over oblique coordinates (p, q), bottom row first
  m.vertex_list = zeros(n + 1, n + 1);
  {
    int i = 1;
    for (int q = 0; q <= n; ++q)
      for (int p = 0; p <= n - q; ++p)
        m.vertex_list[static_cast<size_t>(p)][static_cast<size_t>(q)] = i++;
    m.vertex_count = i - 1;
  }

  // edge ids keyed by the doubled midpoint coordinates, three per up-cell
  m.edge_list = zeros(2 * n, 2 * n);
  {
    int i = 1;
    for (int q = 0; q <= n - 1; ++q)
      for (int p = 0; p <= n - 1 - q; ++p) {
        int cp[3] = {p, p + 1, p};
        int cq[3] = {q, q, q + 1};
        m.edge_list[static_cast<size_t>(cp[1] + cp[2])][static_cast<size_t>(cq[1] + cq[2])] = i++;
        m.edge_list[static_cast<size_t>(cp[2] + cp[0])][static_cast<size_t>(cq[2] + cq[0])] = i++;
        m.edge_list[static_cast<size_t>(cp[0] + cp[1])][static_cast<size_t>(cq[0] + cq[1])] = i++;
      }
    m.edge_count = i - 1;
  }

  // face ids keyed by the summed corner coordinates, up-cell then down-cell
  m.face_list = zeros(3 * n, 3 * n);
  {
    int i = 1;
    for (int q = 0; q <= n - 1; ++q)
      for (int p = 0; p <= n - 1 - q; ++p) {
        m.face_list[static_cast<size_t>(3 * p + 1)][static_cast<size_t>(3 * q + 1)] = i++;
        if (p + q < n - 1)
          m.face_list[static_cast<size_t>(3 * p + 2)][static_cast<size_t>(3 * q + 2)] = i++;
      }
    m.face_count = i - 1;
  }

  // element tables, same cell order as the id assignment
  auto edge_at = [&m](const int cp[3], const int cq[3], int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return m.edge_list[static_cast<size_t>(cp[a] + cp[b])][static_cast<size_t>(cq[a] + cq[b])];
  };
  for (int q = 0; q <= n - 1; ++q)
    for (int p = 0; p <= n - 1 - q; ++p) {
      int up_p[3] = {p, p + 1, p}, up_q[3] = {q, q, q + 1};
      int face_up = m.face_list[static_cast<size_t>(up_p[0] + up_p[1] + up_p[2])]
                               [static_cast<size_t>(up_q[0] + up_q[1] + up_q[2])];
      m.alpha_elements.push_back(
          {edge_at(up_p, up_q, 0), edge_at(up_p, up_q, 1), edge_at(up_p, up_q, 2), face_up});
      m.beta_elements.push_back(
          {m.vertex_list[static_cast<size_t>(up_p[0])][static_cast<size_t>(up_q[0])],
           m.vertex_list[static_cast<size_t>(up_p[1])][static_cast<size_t>(up_q[1])],
           m.vertex_list[static_cast<size_t>(up_p[2])][static_cast<size_t>(up_q[2])],
           edge_at(up_p, up_q, 0), edge_at(up_p, up_q, 1), edge_at(up_p, up_q, 2)});
      m.beta_orientation.push_back(1);
      if (p + q < n - 1) {
        int dn_p[3] = {p + 1, p, p + 1}, dn_q[3] = {q + 1, q + 1, q};
        int face_dn = m.face_list[static_cast<size_t>(dn_p[0] + dn_p[1] + dn_p[2])]
                                 [static_cast<size_t>(dn_q[0] + dn_q[1] + dn_q[2])];
        m.alpha_elements.push_back(
            {edge_at(dn_p, dn_q, 0), edge_at(dn_p, dn_q, 1), edge_at(dn_p, dn_q, 2), face_dn});
        m.beta_elements.push_back(
            {m.vertex_list[static_cast<size_t>(dn_p[0])][static_cast<size_t>(dn_q[0])],
             m.vertex_list[static_cast<size_t>(dn_p[1])][static_cast<size_t>(dn_q[1])],
             m.vertex_list[static_cast<size_t>(dn_p[2])][static_cast<size_t>(dn_q[2])],
             edge_at(dn_p, dn_q, 0), edge_at(dn_p, dn_q, 1), edge_at(dn_p, dn_q, 2)});
        m.beta_orientation.push_back(2);
      }
    }
  return m;
}

std::vector<std::vector<int>> constraint_groups(Space space, const MeshIndexing& idx) {
  const int n = idx.n;
  std::vector<std::vector<int>> groups;
  switch (space) {
    case Space::V11: {
      // all face dofs, column-major over the id table (reference order)
      std::vector<int> g;
      for (size_t q = 0; q < idx.face_list[0].size(); ++q)
        for (size_t p = 0; p < idx.face_list.size(); ++p)
          if (idx.face_list[p][q] > 0) g.push_back(idx.edge_count + idx.face_list[p][q]);
      groups.push_back(std::move(g));
      break;
    }
    case Space::V12: {
      std::vector<int> diag, row1, col1;
      for (int i = 2; i <= 2 * n; ++i) {
        int id = idx.edge_list[static_cast<size_t>(i - 1)][static_cast<size_t>(2 * (n + 1) - i - 1)];
        if (id > 0) diag.push_back(id);
      }
      for (size_t q = 0; q < idx.edge_list[0].size(); ++q)
        if (idx.edge_list[0][q] > 0) row1.push_back(idx.edge_list[0][q]);
      for (size_t p = 0; p < idx.edge_list.size(); ++p)
        if (idx.edge_list[p][0] > 0) col1.push_back(idx.edge_list[p][0]);
      groups.push_back(std::move(diag));
      groups.push_back(std::move(row1));
      groups.push_back(std::move(col1));
      break;
    }
    case Space::V2: {
      groups.push_back({idx.vertex_list[0][0]});
      groups.push_back({idx.vertex_list[static_cast<size_t>(n)][0]});
      groups.push_back({idx.vertex_list[0][static_cast<size_t>(n)]});
      break;
    }
  }
  return groups;
}

namespace {

struct FormPair {
  LocalForm a_form, b_form;
  bool beta;
};

FormPair forms_for(Space space, int j) {
  if (space == Space::V11 && j == 1) return {LocalForm::alpha0, LocalForm::alpha1, false};
  if (space == Space::V12 && j == 2) return {LocalForm::alpha0, LocalForm::alpha1, false};
  if (space == Space::V2 && j == 3) return {LocalForm::beta0, LocalForm::beta2, true};
  if (space == Space::V2 && j == 4) return {LocalForm::beta1, LocalForm::beta2, true};
  throw std::invalid_argument("incompatible (space, j) pair");
}

// w-dofs of a downward cell carry the opposite edge direction: flip the
// vertex/edge cross blocks of the local matrix.
SymRatMatrix flip_cross_blocks(const SymRatMatrix& m) {
  SymRatMatrix r = m;
  for (int p = 0; p < 3; ++p)
    for (int q = 3; q < 6; ++q) {
      r.at(p, q) = -r.at(p, q);
      r.at(q, p) = -r.at(q, p);
    }
  return r;
}

void scatter(SymRatMatrix& global, const SymRatMatrix& local, const int* ids, int k) {
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      const Rat& v = local.at(p, q);
      if (v != 0) global.at(ids[p] - 1, ids[q] - 1) += v;
    }
}

// Reference constraint folding: for each sum-zero group substitute the first
// listed dof by minus the sum of the rest (rank-1 row/column updates against
// the original representative row/column), then delete the representative
// rows/columns at the end. Singleton groups are plain deletions.
SymRatMatrix fold_constraints_ref(const SymRatMatrix& m,
                                  const std::vector<std::vector<int>>& groups) {
  SymRatMatrix work = m;
  int n = work.order();
  std::vector<int> reps;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    int s = g.front() - 1;
    reps.push_back(s);
    if (g.size() == 1) continue;
    std::vector<Rat> col_s(static_cast<size_t>(n)), row_s(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) col_s[static_cast<size_t>(r)] = work.at(r, s);
    for (int c = 0; c < n; ++c) row_s[static_cast<size_t>(c)] = work.at(s, c);
    Rat corner = work.at(s, s);
    for (size_t t = 1; t < g.size(); ++t) {
      int ti = g[t] - 1;
      for (int r = 0; r < n; ++r) work.at(r, ti) -= col_s[static_cast<size_t>(r)];
      for (int c = 0; c < n; ++c) work.at(ti, c) -= row_s[static_cast<size_t>(c)];
    }
    for (size_t t = 1; t < g.size(); ++t)
      for (size_t u = 1; u < g.size(); ++u) work.at(g[t] - 1, g[u] - 1) += corner;
  }
  // compact away the representative rows/columns
  std::vector<bool> drop(static_cast<size_t>(n), false);
  for (int s : reps) drop[static_cast<size_t>(s)] = true;
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<size_t>(i)]) keep.push_back(i);
  SymRatMatrix out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          work.at(keep[i], keep[j]);
  return out;
}

SymRatMatrix assemble_form(const MeshIndexing& idx, const ElementGeometry& geom,
                           LocalForm form, bool beta, bool flip_down,
                           const std::vector<std::vector<int>>& groups) {
  SymRatMatrix local_up = local_matrix(form, geom);
  SymRatMatrix local_down = beta && flip_down ? flip_cross_blocks(local_up) : local_up;
  int total = beta ? idx.beta_dofs() : idx.alpha_dofs();
  SymRatMatrix global(total);
  if (beta) {
    for (size_t e = 0; e < idx.beta_elements.size(); ++e) {
      std::array<int, 6> ids = idx.beta_elements[e];
      for (int k = 3; k < 6; ++k) ids[static_cast<size_t>(k)] += idx.vertex_count;
      scatter(global, idx.beta_orientation[e] == 1 ? local_up : local_down, ids.data(), 6);
    }
  } else {
    for (const auto& el : idx.alpha_elements) {
      std::array<int, 4> ids = el;
      ids[3] += idx.edge_count;
      scatter(global, local_up, ids.data(), 4);
    }
  }
  return fold_constraints_ref(global, groups);
}

int expected_dim(Space space, int n) {
  switch (space) {
    case Space::V11: return (n + 1) * (5 * n - 2) / 2;
    case Space::V12: return (5 * n * n + 3 * n - 6) / 2;
    case Space::V2: return (n + 2) * (2 * n - 1);
  }
  return 0;
}

}  // namespace

AssembledPencil assemble(Space space, int j, int n, const TriangleShape& shape) {
  FormPair fp = forms_for(space, j);
  MeshIndexing idx = build_indexing(n);
  ElementGeometry geom = shape_element_geometry(shape, n);
  auto groups = constraint_groups(space, idx);
  AssembledPencil p;
  p.space = space;
  p.j = j;
  p.n = n;
  p.shape = shape;
  p.A = assemble_form(idx, geom, fp.a_form, fp.beta, true, groups);
  p.B = assemble_form(idx, geom, fp.b_form, fp.beta, true, groups);
  p.dim = p.A.order();
  if (p.dim != expected_dim(space, n))
    throw std::logic_error("assembled dimension disagrees with the closed formula");
  return p;
}

AssembledPencil assemble_ignoring_orientation(Space space, int j, int n,
                                              const TriangleShape& shape) {
  FormPair fp = forms_for(space, j);
  MeshIndexing idx = build_indexing(n);
  ElementGeometry geom = shape_element_geometry(shape, n);
  auto groups = constraint_groups(space, idx);
  AssembledPencil p;
  p.space = space;
  p.j = j;
  p.n = n;
  p.shape = shape;
  p.A = assemble_form(idx, geom, fp.a_form, fp.beta, false, groups);
  p.B = assemble_form(idx, geom, fp.b_form, fp.beta, false, groups);
  p.dim = p.A.order();
  return p;
}

SymRatMatrix assemble_shifted(Space space, int j, int n, const TriangleShape& shape,
                              const Rat& lambda) {
  FormPair fp = forms_for(space, j);
  MeshIndexing idx = build_indexing(n);
  ElementGeometry geom = shape_element_geometry(shape, n);
  auto groups = constraint_groups(space, idx);
  SymRatMatrix a_up = local_matrix(fp.a_form, geom);
  SymRatMatrix b_up = local_matrix(fp.b_form, geom);
  SymRatMatrix shifted_up(b_up.order());
  for (int p = 0; p < b_up.order(); ++p)
    for (int q = 0; q < b_up.order(); ++q)
      shifted_up.at(p, q) = lambda * b_up.at(p, q) - a_up.at(p, q);
  SymRatMatrix shifted_down =
      fp.beta ? flip_cross_blocks(shifted_up) : shifted_up;
  int total = fp.beta ? idx.beta_dofs() : idx.alpha_dofs();
  SymRatMatrix global(total);
  if (fp.beta) {
    for (size_t e = 0; e < idx.beta_elements.size(); ++e) {
      std::array<int, 6> ids = idx.beta_elements[e];
      for (int k = 3; k < 6; ++k) ids[static_cast<size_t>(k)] += idx.vertex_count;
      scatter(global, idx.beta_orientation[e] == 1 ? shifted_up : shifted_down,
              ids.data(), 6);
    }
  } else {
    for (const auto& el : idx.alpha_elements) {
      std::array<int, 4> ids = el;
      ids[3] += idx.edge_count;
      scatter(global, shifted_up, ids.data(), 4);
    }
  }
  return fold_constraints_ref(global, groups);
}

Rat rayleigh_quotient(const AssembledPencil& pencil, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != pencil.dim)
    throw std::invalid_argument("vector dimension mismatch");
  bool nonzero = false;
  for (const Rat& v : x)
    if (v != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("zero vector");
  Rat num(0), den(0);
  for (int i = 0; i < pencil.dim; ++i)
    for (int j = 0; j < pencil.dim; ++j) {
      num += x[static_cast<size_t>(i)] * pencil.A.at(i, j) * x[static_cast<size_t>(j)];
      den += x[static_cast<size_t>(i)] * pencil.B.at(i, j) * x[static_cast<size_t>(j)];
    }
  if (den == 0) throw std::logic_error("B-form degenerate along the given vector");
  return Rat(num / den);
}

Space space_for_j(int j) {
  switch (j) {
    case 1: return Space::V11;
    case 2: return Space::V12;
    case 3:
    case 4: return Space::V2;
    default: throw std::invalid_argument("j must be in 1..4");
  }
}

}  // namespace tric
