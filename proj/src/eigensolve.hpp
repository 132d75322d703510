#pragma once

#include <Eigen/Dense>

#include "mesh.hpp"

namespace tric {

struct EigenEstimate {
  double value = 0;
  double residual = 0;  // ||A x - value B x|| / ||x|| at the returned pair
  int iterations = 0;
};

Eigen::MatrixXd to_double_matrix(const SymRatMatrix& m);

// Largest generalized eigenvalue of (A, B), B positive definite: reduce by
// the B-Cholesky factor to a standard symmetric problem, dense solve, then
// refine one eigenvector by inverse iteration for the residual report.
EigenEstimate max_gen_eig(const SymRatMatrix& A, const SymRatMatrix& B);
EigenEstimate max_gen_eig(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

// Independent second path: own Cholesky plus cyclic Jacobi rotations.
// Intended for cross-checks on moderate dimensions.
double max_gen_eig_jacobi(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

// C_j^{(n)}(T_{a,b}) = sqrt(lambda_max) of the matching pencil.
double discrete_constant(int j, int n, const TriangleShape& shape);

// Upper-bound transfer: sqrt(n^2/(n^2-1)) C for j=1,2; sqrt(n^4/(n^4-1)) C
// for j=3; sqrt(C^2 + c2_bound^2/n^2) for j=4 (c2_bound must be the already
// transferred j=2 bound for the same n).
double bound_from_discrete(int j, int n, double discrete_value, double c2_bound = -1);

}  // namespace tric
