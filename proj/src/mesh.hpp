#pragma once

#include <array>

#include "elements.hpp"

namespace tric {

// Uniform n^2 refinement bookkeeping. The id tables are keyed by the oblique
// coordinates of the reference indexing procedures and hold 1-based ids
// assigned in the reference iteration order (0 marks an unused slot), so ids
// are reproducible against the published figures. Vertex, edge and face ids
// each start at 1; family offsets are applied when elements are mapped to
// global dofs.
struct MeshIndexing {
  int n = 0;
  std::vector<std::vector<int>> vertex_list;  // (n+1) x (n+1)
  std::vector<std::vector<int>> edge_list;    // 2n x 2n
  std::vector<std::vector<int>> face_list;    // 3n x 3n
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;

  // per element, ids in local dof order; beta rows carry orientation 1 (up)
  // or 2 (down)
  std::vector<std::array<int, 4>> alpha_elements;  // [edge1, edge2, edge3, face]
  std::vector<std::array<int, 6>> beta_elements;   // [v1, v2, v3, e1, e2, e3]
  std::vector<int> beta_orientation;

  int alpha_dofs() const { return edge_count + face_count; }
  int beta_dofs() const { return vertex_count + edge_count; }
};

MeshIndexing build_indexing(int n);

enum class Space { V11, V12, V2 };

// Sum-zero / zero-value constraint groups in the family dof numbering
// (1-based). V11: one group of all face dofs; V12: one group of boundary
// edge dofs per side; V2: the three corner vertex dofs, each pinned to zero.
std::vector<std::vector<int>> constraint_groups(Space space, const MeshIndexing& idx);

struct AssembledPencil {
  Space space;
  int j = 0;
  int n = 0;
  TriangleShape shape;
  SymRatMatrix A, B;  // numerator and denominator forms, constraints folded
  int dim = 0;
};

// Exact global pencil for C_j^{(n)}(T_{a,b}). Valid pairs: V11 with j=1 and
// V12 with j=2 (forms alpha0/alpha1), V2 with j=3 (beta0/beta2) or j=4
// (beta1/beta2).
AssembledPencil assemble(Space space, int j, int n, const TriangleShape& shape);

// lambda * B - A assembled in one pass (memory-light path for certificates);
// identical to combining the pencil members entrywise.
SymRatMatrix assemble_shifted(Space space, int j, int n, const TriangleShape& shape,
                              const Rat& lambda);

// Exact x^T A x / x^T B x.
Rat rayleigh_quotient(const AssembledPencil& pencil, const std::vector<Rat>& x);

Space space_for_j(int j);

// Test hook: assemble with every beta cross-block sign forced positive
// (deliberately wrong orientation handling).
AssembledPencil assemble_ignoring_orientation(Space space, int j, int n,
                                              const TriangleShape& shape);

}  // namespace tric
