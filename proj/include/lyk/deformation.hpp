#pragma once

#include "lyk/cohomology.hpp"

namespace lyk {

struct NotNijenhuisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidDeformationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix-valued polynomial truncated at t^{order}: products drop higher terms.
struct MatrixPoly {
  std::size_t order = 0;
  std::vector<Matrix> coeffs;  // coefficient of t^k at index k, size order+1

  static MatrixPoly constant(Matrix m, std::size_t order);
  // From low-order coefficients; missing entries are zero rows x cols.
  static MatrixPoly from_coeffs(std::vector<Matrix> low, std::size_t order,
                                std::size_t rows, std::size_t cols);

  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
  friend bool operator==(const MatrixPoly&, const MatrixPoly&) = default;
};

// H_t = sum terms[i] t^i; terms[0] must be a crossed homomorphism.
struct DeformationSeries {
  ActionContext ctx;
  std::vector<Matrix> terms;

  DeformationSeries(ActionContext ctx_in, std::vector<Matrix> terms_in);
  std::size_t order() const { return terms.size() - 1; }
};

// The operator z -> <<x,y,z>>_g extended linearly over the wedge
// coordinates of X, and the action's D likewise.
Matrix wedge_L(const LYAlgebra& g, const Cochain& X);
Matrix wedge_D(const LYAlgebra& g, const Representation& rep, const Cochain& X);

// All t-coefficients of the crossed-homomorphism equations for H + tK:
// t^1 is the induced-complex cocycle condition on K, t^2 the quadratic
// conditions, t^3 the cubic ternary condition. Empty report iff H + tK is
// crossed for every scalar t.
Report is_linear_deformation(const CrossedMap& H, const Matrix& K);

// Coefficient equations of both crossed-homomorphism identities for every
// t^s with 1 <= s <= order, on all basis tuples.
Report is_formal_deformation(const DeformationSeries& s);

// terms[1] as a 1-cochain of the induced complex; a cocycle for every valid
// series. Requires is_formal_deformation(s) empty and order >= 1.
Cochain infinitesimal(const DeformationSeries& s);

// Nijenhuis element conditions for X in ^2 g, with L = wedge_L(X) acting on
// g and Dx = wedge_D(X) acting on h, on all basis tuples:
//   (1) [Ly,Lz] = 0                  (2) <<Ly,Lz,w>>+<<Ly,z,Lw>>+<<y,Lz,Lw>> = 0
//   (3) <<Ly,Lz,Lw>> = 0             (4) rho(Ly) Dx = 0
//   (5) mu(Ly,z)Dx + mu(y,Lz)Dx + mu(Ly,Lz) = 0
//   (6) mu(Ly,Lz)Dx = 0              (7) Dx (Dx H - H L) = 0
Report is_nijenhuis(const Cochain& X, const CrossedMap& H);

// (Id + t Dx)^{-1} H (Id + t L) computed in K[t]/(t^{N+1}); for a Nijenhuis
// X this collapses to H + t delta0(X,H) (asserted; a failure means a bug).
// Returns the order-1 series.
DeformationSeries trivial_deformation(const Cochain& X, const CrossedMap& H,
                                      std::size_t N);

// Equivalence of two same-order deformations of the same crossed map via
// phi_t = Id + t L(X) + ..., vphi_t = Id + t D(X) + ...: checks that phi_t,
// vphi_t are homomorphisms of g[t], h[t], the two action-compatibility
// identities, and the intertwining vphi_t . s2 = s1 . phi_t, all as
// truncated-polynomial identities modulo t^{order+1}.
Report are_equivalent_formal(const DeformationSeries& s1,
                             const DeformationSeries& s2, const Cochain& X,
                             const std::vector<Matrix>& phi,
                             const std::vector<Matrix>& vphi);

// The degree-2 cochain (Ob_I, Ob_II) of an order-n series:
//   Ob_I(x,y)    = sum_{i+j=n+1, 0<i,j<n+1} [H_i x, H_j y]_h
//   Ob_II(x,y,z) = sum_{i+j+k=n+1, 0<i,j,k<n+1} <<H_i x, H_j y, H_k z>>_h
// Always a cocycle of the induced complex.
Cochain obstruction(const DeformationSeries& s);

// A matrix K with coboundary(K) = -obstruction(s), i.e. an H_{n+1} making
// the extended series an order n+1 deformation; nullopt iff the obstruction
// class is nontrivial.
std::optional<Matrix> extend(const DeformationSeries& s);

}  // namespace lyk
