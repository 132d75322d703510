#include "polyspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "tri_integrals.hpp"

namespace tric {

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_matrix(int rows, int cols) {
  return RatMatrix(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
}

Rat binom(int n, int k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return rat(b, Int(1));
}

// Exact integral of x^p y^q over T_{a,b} via the pullback x = xi + a eta,
// y = b eta from the reference triangle (Jacobian b).
struct MonomialTable {
  int max_deg;
  Rat a, b;
  std::vector<Rat> cache;
  std::vector<bool> have;

  MonomialTable(int max_deg_, const Rat& a_, const Rat& b_)
      : max_deg(max_deg_), a(a_), b(b_),
        cache(static_cast<size_t>(max_deg_ + 1) * (max_deg_ + 1)),
        have(static_cast<size_t>(max_deg_ + 1) * (max_deg_ + 1), false) {}

  Rat get(int p, int q) {
    if (p < 0 || q < 0) return rat(0);
    size_t key = static_cast<size_t>(p) * (max_deg + 1) + q;
    if (have[key]) return cache[key];
    Rat acc(0);
    Int fact_pq2;
    mpz_fac_ui(fact_pq2.get_mpz_t(), static_cast<unsigned long>(p + q + 2));
    for (int i = 0; i <= p; ++i) {
      Int fi, fm;
      mpz_fac_ui(fi.get_mpz_t(), static_cast<unsigned long>(i));
      mpz_fac_ui(fm.get_mpz_t(), static_cast<unsigned long>(p + q - i));
      acc += binom(p, i) * rat_pow(a, p - i) * rat(Int(fi * fm), fact_pq2);
    }
    Rat val = Rat(acc * rat_pow(b, q) * b);
    cache[key] = val;
    have[key] = true;
    return val;
  }
};

struct Basis {
  std::vector<std::pair<int, int>> exps;  // (p, q), p + q <= degree
};

Basis make_basis(int degree) {
  Basis bs;
  for (int d = 0; d <= degree; ++d)
    for (int p = d; p >= 0; --p) bs.exps.emplace_back(p, d - p);
  return bs;
}

// constraint rows, one per functional, columns over the basis
RatMatrix constraint_rows(Space space, const Basis& bs, const TriangleShape& shape,
                          MonomialTable& mono) {
  const Rat &a = shape.a, &b = shape.b;
  int dim = static_cast<int>(bs.exps.size());
  auto edge_int = [&](int p, int q, int which) -> Rat {
    // integral over t in [0,1] of basis restricted to edge `which`
    switch (which) {
      case 1: {  // (1,0) -> (a,b): x = 1 + (a-1) t, y = b t
        Rat acc(0);
        for (int k = 0; k <= p; ++k)
          acc += binom(p, k) * rat_pow(Rat(a - 1), k) * rat(1, k + q + 1);
        return Rat(acc * rat_pow(b, q));
      }
      case 2:  // (a,b) -> (0,0): x = a (1-t), y = b (1-t)
        return Rat(rat_pow(a, p) * rat_pow(b, q) / rat(p + q + 1));
      case 3:  // (0,0) -> (1,0): x = t, y = 0
        return q == 0 ? rat(1, p + 1) : rat(0);
      default:
        throw std::logic_error("unreachable");
    }
  };
  RatMatrix rows;
  switch (space) {
    case Space::V11: {
      rows = rat_matrix(1, dim);
      for (int i = 0; i < dim; ++i)
        rows[0][static_cast<size_t>(i)] = mono.get(bs.exps[static_cast<size_t>(i)].first,
                                                   bs.exps[static_cast<size_t>(i)].second);
      break;
    }
    case Space::V12: {
      rows = rat_matrix(3, dim);
      for (int e = 1; e <= 3; ++e)
        for (int i = 0; i < dim; ++i)
          rows[static_cast<size_t>(e - 1)][static_cast<size_t>(i)] =
              edge_int(bs.exps[static_cast<size_t>(i)].first,
                       bs.exps[static_cast<size_t>(i)].second, e);
      break;
    }
    case Space::V2: {
      rows = rat_matrix(3, dim);
      for (int i = 0; i < dim; ++i) {
        auto [p, q] = bs.exps[static_cast<size_t>(i)];
        rows[0][static_cast<size_t>(i)] = (p == 0 && q == 0) ? rat(1) : rat(0);
        rows[1][static_cast<size_t>(i)] = q == 0 ? rat(1) : rat(0);
        rows[2][static_cast<size_t>(i)] = Rat(rat_pow(a, p) * rat_pow(b, q));
      }
      break;
    }
  }
  return rows;
}

// exact null-space basis via reduced row echelon form
RatMatrix null_space(RatMatrix rows, int dim) {
  int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col(static_cast<size_t>(m), -1);
  int r = 0;
  for (int c = 0; c < dim && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(piv)]);
    Rat inv = 1 / rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    for (int cc = 0; cc < dim; ++cc) rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rat f = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int cc = 0; cc < dim; ++cc)
        rows[static_cast<size_t>(i)][static_cast<size_t>(cc)] -=
            f * rows[static_cast<size_t>(r)][static_cast<size_t>(cc)];
    }
    pivot_col[static_cast<size_t>(r)] = c;
    ++r;
  }
  if (r < m) throw std::domain_error("constraint functionals are rank deficient");
  std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
  for (int i = 0; i < r; ++i) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = true;
  RatMatrix N = rat_matrix(dim, dim - r);
  int col = 0;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    N[static_cast<size_t>(f)][static_cast<size_t>(col)] = rat(1);
    for (int i = 0; i < r; ++i)
      N[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])][static_cast<size_t>(col)] =
          -rows[static_cast<size_t>(i)][static_cast<size_t>(f)];
    ++col;
  }
  return N;
}

RatMatrix reduce(const RatMatrix& G, const RatMatrix& N) {
  int dim = static_cast<int>(G.size());
  int k = static_cast<int>(N[0].size());
  RatMatrix GN = rat_matrix(dim, k);
  for (int i = 0; i < dim; ++i)
    for (int c = 0; c < k; ++c) {
      Rat acc(0);
      for (int j = 0; j < dim; ++j) {
        const Rat& nv = N[static_cast<size_t>(j)][static_cast<size_t>(c)];
        if (nv != 0) acc += G[static_cast<size_t>(i)][static_cast<size_t>(j)] * nv;
      }
      GN[static_cast<size_t>(i)][static_cast<size_t>(c)] = acc;
    }
  RatMatrix R = rat_matrix(k, k);
  for (int rI = 0; rI < k; ++rI)
    for (int c = 0; c < k; ++c) {
      Rat acc(0);
      for (int j = 0; j < dim; ++j) {
        const Rat& nv = N[static_cast<size_t>(j)][static_cast<size_t>(rI)];
        if (nv != 0) acc += nv * GN[static_cast<size_t>(j)][static_cast<size_t>(c)];
      }
      R[static_cast<size_t>(rI)][static_cast<size_t>(c)] = acc;
    }
  return R;
}

}  // namespace

double poly_subspace_constant(int j, const TriangleShape& shape,
                              const PolynomialSubspaceSpec& spec) {
  if (spec.degree < 2) throw std::invalid_argument("degree must be at least 2");
  Basis bs = make_basis(spec.degree);
  int dim = static_cast<int>(bs.exps.size());
  MonomialTable mono(2 * spec.degree + 1, shape.a, shape.b);

  RatMatrix l2 = rat_matrix(dim, dim), h1 = rat_matrix(dim, dim), h2 = rat_matrix(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = i; k < dim; ++k) {
      auto [pi, qi] = bs.exps[static_cast<size_t>(i)];
      auto [pk, qk] = bs.exps[static_cast<size_t>(k)];
      Rat l2v = mono.get(pi + pk, qi + qk);
      Rat h1v(0), h2v(0);
      if (pi > 0 && pk > 0)
        h1v += rat(static_cast<long>(pi) * pk) * mono.get(pi + pk - 2, qi + qk);
      if (qi > 0 && qk > 0)
        h1v += rat(static_cast<long>(qi) * qk) * mono.get(pi + pk, qi + qk - 2);
      if (pi > 1 && pk > 1)
        h2v += rat(static_cast<long>(pi) * (pi - 1) * pk * (pk - 1)) *
               mono.get(pi + pk - 4, qi + qk);
      if (pi > 0 && qi > 0 && pk > 0 && qk > 0)
        h2v += rat(2L * pi * qi * pk * qk) * mono.get(pi + pk - 2, qi + qk - 2);
      if (qi > 1 && qk > 1)
        h2v += rat(static_cast<long>(qi) * (qi - 1) * qk * (qk - 1)) *
               mono.get(pi + pk, qi + qk - 4);
      l2[static_cast<size_t>(i)][static_cast<size_t>(k)] = l2v;
      l2[static_cast<size_t>(k)][static_cast<size_t>(i)] = l2v;
      h1[static_cast<size_t>(i)][static_cast<size_t>(k)] = h1v;
      h1[static_cast<size_t>(k)][static_cast<size_t>(i)] = h1v;
      h2[static_cast<size_t>(i)][static_cast<size_t>(k)] = h2v;
      h2[static_cast<size_t>(k)][static_cast<size_t>(i)] = h2v;
    }

  Space space = space_for_j(j);
  if (spec.space != space)
    throw std::invalid_argument("subspace spec names a space that does not match j");
  const RatMatrix* Araw;
  const RatMatrix* Braw;
  switch (j) {
    case 1:
    case 2: Araw = &l2; Braw = &h1; break;
    case 3: Araw = &l2; Braw = &h2; break;
    case 4: Araw = &h1; Braw = &h2; break;
    default: throw std::invalid_argument("j must be in 1..4");
  }

  RatMatrix N = null_space(constraint_rows(space, bs, shape, mono), dim);
  RatMatrix A = reduce(*Araw, N);
  RatMatrix B = reduce(*Braw, N);
  int k = static_cast<int>(A.size());

  // exact LDL^T of B (unit lower L, diagonal d)
  RatMatrix L = rat_matrix(k, k);
  std::vector<Rat> d(static_cast<size_t>(k));
  for (int jj = 0; jj < k; ++jj) {
    Rat acc = B[static_cast<size_t>(jj)][static_cast<size_t>(jj)];
    for (int p = 0; p < jj; ++p)
      acc -= L[static_cast<size_t>(jj)][static_cast<size_t>(p)] *
             L[static_cast<size_t>(jj)][static_cast<size_t>(p)] * d[static_cast<size_t>(p)];
    if (acc <= 0) throw std::domain_error("denominator form is not positive definite");
    d[static_cast<size_t>(jj)] = acc;
    L[static_cast<size_t>(jj)][static_cast<size_t>(jj)] = rat(1);
    for (int i = jj + 1; i < k; ++i) {
      Rat s = B[static_cast<size_t>(i)][static_cast<size_t>(jj)];
      for (int p = 0; p < jj; ++p)
        s -= L[static_cast<size_t>(i)][static_cast<size_t>(p)] *
             L[static_cast<size_t>(jj)][static_cast<size_t>(p)] * d[static_cast<size_t>(p)];
      L[static_cast<size_t>(i)][static_cast<size_t>(jj)] = Rat(s / acc);
    }
  }

  // W = L^{-1} A L^{-T}, exact
  RatMatrix T = rat_matrix(k, k);
  for (int col = 0; col < k; ++col)
    for (int i = 0; i < k; ++i) {
      Rat s = A[static_cast<size_t>(i)][static_cast<size_t>(col)];
      for (int p = 0; p < i; ++p)
        s -= L[static_cast<size_t>(i)][static_cast<size_t>(p)] * T[static_cast<size_t>(p)][static_cast<size_t>(col)];
      T[static_cast<size_t>(i)][static_cast<size_t>(col)] = s;
    }
  RatMatrix W = rat_matrix(k, k);
  for (int row = 0; row < k; ++row)
    for (int jj = 0; jj < k; ++jj) {
      Rat s = T[static_cast<size_t>(row)][static_cast<size_t>(jj)];
      for (int p = 0; p < jj; ++p)
        s -= W[static_cast<size_t>(row)][static_cast<size_t>(p)] * L[static_cast<size_t>(jj)][static_cast<size_t>(p)];
      W[static_cast<size_t>(row)][static_cast<size_t>(jj)] = s;
    }

  // scale by d^{-1/2} on both sides, then one dense symmetric solve
  std::vector<double> dsqrt(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) dsqrt[static_cast<size_t>(i)] = std::sqrt(rat_to_double(d[static_cast<size_t>(i)]));
  Eigen::MatrixXd M(k, k);
  for (int i = 0; i < k; ++i)
    for (int jj = 0; jj < k; ++jj)
      M(i, jj) = rat_to_double(W[static_cast<size_t>(i)][static_cast<size_t>(jj)]) /
                 (dsqrt[static_cast<size_t>(i)] * dsqrt[static_cast<size_t>(jj)]);
  M = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen solve failed");
  double lam = es.eigenvalues()(k - 1);
  if (lam < 0) throw std::logic_error("negative leading eigenvalue");
  return std::sqrt(lam);
}

}  // namespace tric
