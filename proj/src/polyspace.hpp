#pragma once

#include "mesh.hpp"

namespace tric {

struct PolynomialSubspaceSpec {
  int degree = 10;
  Space space = Space::V11;
};

inline PolynomialSubspaceSpec subspace_spec(int j, int degree = 10) {
  return PolynomialSubspaceSpec{degree, space_for_j(j)};
}

// Rayleigh-quotient supremum over the degree-bounded polynomial subspace of
// the j-th constrained space on T_{a,b}: exact rational Gram matrices and
// constraint null space, exact LDL^T reduction of the denominator form, one
// final conversion to doubles for the standard symmetric eigensolve.
double poly_subspace_constant(int j, const TriangleShape& shape,
                              const PolynomialSubspaceSpec& spec);

}  // namespace tric
