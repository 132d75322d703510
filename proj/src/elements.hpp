#pragma once

#include "forms.hpp"
#include "geometry.hpp"
#include "symmat.hpp"

namespace tric {

// Similarity-invariant element data: area s and c_k = |gamma_k|^2 / s.
struct ElementGeometry {
  Rat s, c1, c2, c3;
};

ElementGeometry element_geometry(const Triangle& tri);

// Geometry of one cell of the uniform n^2 refinement of T_{a,b}: the cells
// are all similar to T_{a,b}, c_k are shape-only and s = (b/2) / n^2.
ElementGeometry shape_element_geometry(const TriangleShape& shape, int n);

// Degrees of freedom of the two local interpolations: edge mean values plus
// the element mean, and vertex values plus edge normal-flux integrals.
struct AlphaDofs {
  Rat w1, w2, w3, u0;
};
struct BetaDofs {
  Rat u1, u2, u3, w1, w2, w3;
};

// Exact values of the local quadratic forms.
Rat f_alpha(int kind, const ElementGeometry& g, const AlphaDofs& d);  // kind 0|1
Rat f_beta(int kind, const ElementGeometry& g, const BetaDofs& d);    // kind 0|1|2

enum class LocalForm { alpha0, alpha1, beta0, beta1, beta2 };

// Coefficient matrix M with dof^T M dof equal to the form, obtained as the
// exact half-Hessian of the form expression (dof order w1,w2,w3,u0 for the
// alpha family and u1,u2,u3,w1,w2,w3 for the beta family).
SymRatMatrix local_matrix(LocalForm form, const ElementGeometry& g);

// Exact dofs of a polynomial u (variables "x", "y") on a rational triangle.
AlphaDofs alpha_dofs_of(const Triangle& tri, const Poly& u);
BetaDofs beta_dofs_of(const Triangle& tri, const Poly& u);

// Exact interpolants: the element of Q_alpha (span{x^2+y^2, x, y, 1})
// matching u's edge means and element mean, and the element of Q_beta (full
// quadratics) matching u's vertex values and edge normal fluxes. Computed by
// solving the matching conditions exactly.
Poly alpha_interpolant(const Triangle& tri, const Poly& u);
Poly beta_interpolant(const Triangle& tri, const Poly& u);

// Exact Dirichlet energies of a polynomial, used in the consistency and
// orthogonality tests: integral over tri of u^2, |grad u|^2, and the squared
// H^2 seminorm integrand u_xx^2 + 2 u_xy^2 + u_yy^2.
Rat l2_norm2(const Triangle& tri, const Poly& u);
Rat h1_seminorm2(const Triangle& tri, const Poly& u);
Rat h2_seminorm2(const Triangle& tri, const Poly& u);

}  // namespace tric
