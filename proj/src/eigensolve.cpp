#include "eigensolve.hpp"

#include <cmath>
#include <stdexcept>

namespace tric {

Eigen::MatrixXd to_double_matrix(const SymRatMatrix& m) {
  Eigen::MatrixXd r(m.order(), m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) r(i, j) = rat_to_double(m.at(i, j));
  return r;
}

EigenEstimate max_gen_eig(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(A.rows());
  Eigen::LLT<Eigen::MatrixXd> llt(B);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("B is not numerically positive definite");
  Eigen::MatrixXd L = llt.matrixL();
  // C = L^{-1} A L^{-T}
  Eigen::MatrixXd C = L.triangularView<Eigen::Lower>().solve(A);
  C = L.triangularView<Eigen::Lower>().solve(C.transpose()).transpose();
  C = 0.5 * (C + C.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen solve failed");
  double lam = es.eigenvalues()(n - 1);

  // inverse iteration near lam for a residual certificate of the estimate
  double shift = lam * (1 + 1e-8) + 1e-300;
  Eigen::MatrixXd M = C - shift * Eigen::MatrixXd::Identity(n, n);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
  y.normalize();
  int iters = 0;
  for (; iters < 4; ++iters) {
    Eigen::VectorXd z = lu.solve(y);
    double nz = z.norm();
    if (!std::isfinite(nz) || nz == 0) break;
    y = z / nz;
  }
  Eigen::VectorXd x = L.transpose().triangularView<Eigen::Upper>().solve(y);
  double xn = x.norm();
  EigenEstimate est;
  est.value = lam;
  est.iterations = iters;
  est.residual = xn > 0 ? (A * x - lam * (B * x)).norm() / xn : 0.0;
  return est;
}

EigenEstimate max_gen_eig(const SymRatMatrix& A, const SymRatMatrix& B) {
  return max_gen_eig(to_double_matrix(A), to_double_matrix(B));
}

namespace {

// plain lower Cholesky, no pivoting
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(B.rows());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = B(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (d <= 0) throw std::domain_error("B is not numerically positive definite");
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = B(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

}  // namespace

double max_gen_eig_jacobi(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXd L = cholesky_lower(B);
  // forward/backward triangular solves without Eigen's views
  Eigen::MatrixXd C(n, n);
  {
    Eigen::MatrixXd T(n, n);  // T = L^{-1} A
    for (int col = 0; col < n; ++col)
      for (int i = 0; i < n; ++i) {
        double s = A(i, col);
        for (int k = 0; k < i; ++k) s -= L(i, k) * T(k, col);
        T(i, col) = s / L(i, i);
      }
    for (int row = 0; row < n; ++row)  // C = T L^{-T}
      for (int j = 0; j < n; ++j) {
        double s = T(row, j);
        for (int k = 0; k < j; ++k) s -= C(row, k) * L(j, k);
        C(row, j) = s / L(j, j);
      }
  }
  C = 0.5 * (C + C.transpose());
  // cyclic Jacobi
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += C(p, q) * C(p, q);
    if (off < 1e-26 * n * n) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = C(p, q);
        if (apq == 0) continue;
        double theta = (C(q, q) - C(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double ckp = C(k, p), ckq = C(k, q);
          C(k, p) = c * ckp - s * ckq;
          C(k, q) = s * ckp + c * ckq;
        }
        for (int k = 0; k < n; ++k) {
          double cpk = C(p, k), cqk = C(q, k);
          C(p, k) = c * cpk - s * cqk;
          C(q, k) = s * cpk + c * cqk;
        }
      }
  }
  double lam = C(0, 0);
  for (int i = 1; i < n; ++i) lam = std::max(lam, C(i, i));
  return lam;
}

double discrete_constant(int j, int n, const TriangleShape& shape) {
  AssembledPencil pencil = assemble(space_for_j(j), j, n, shape);
  EigenEstimate est = max_gen_eig(pencil.A, pencil.B);
  if (est.value < 0) throw std::logic_error("negative leading eigenvalue");
  return std::sqrt(est.value);
}

double bound_from_discrete(int j, int n, double discrete_value, double c2_bound) {
  double n2 = static_cast<double>(n) * n;
  switch (j) {
    case 1:
    case 2:
      return std::sqrt(n2 / (n2 - 1)) * discrete_value;
    case 3:
      return std::sqrt(n2 * n2 / (n2 * n2 - 1)) * discrete_value;
    case 4:
      if (c2_bound < 0)
        throw std::invalid_argument("j = 4 transfer needs the j = 2 bound");
      return std::sqrt(discrete_value * discrete_value + c2_bound * c2_bound / n2);
    default:
      throw std::invalid_argument("j must be in 1..4");
  }
}

}  // namespace tric
