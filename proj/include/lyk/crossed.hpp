#pragma once

#include "lyk/representation.hpp"

namespace lyk {

struct NotInvertibleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ContextMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool same_context(const ActionContext& a, const ActionContext& b);

// A linear map H: g -> h (n x m matrix) together with the validated action
// context it lives in. Whether H actually satisfies the crossed-homomorphism
// equations is a separate question answered by is_crossed_hom.
struct CrossedMap {
  ActionContext ctx;
  Matrix matrix;  // n x m, columns are H(e_i)

  CrossedMap(ActionContext ctx_in, Matrix matrix_in);
};

// The two defining equations on all basis pairs/triples:
//   H[x,y]     = rho(x)Hy - rho(y)Hx + [Hx,Hy]_h
//   H<<x,y,z>> = D(x,y)Hz + mu(y,z)Hx - mu(x,z)Hy + <<Hx,Hy,Hz>>_h
Report is_crossed_hom(const CrossedMap& H);

// The block-stacked matrix [I_m ; H]: g -> g (+) h.
Matrix graph_map(const CrossedMap& H);

// Executable form of the graph characterization: true iff
// [is_crossed_hom(H) empty] == [graph_map(H) is a homomorphism into the
// semidirect product]. Expected true for every H.
bool check_graph_equivalence(const CrossedMap& H);

// Relative Rota-Baxter operator of weight lambda: T: h -> g with
//   [Tu,Tv]      = T( rho(Tu)v - rho(Tv)u + lambda [u,v]_h )
//   <<Tu,Tv,Tw>> = T( D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v + lambda <<u,v,w>>_h )
// checked on all basis tuples of h.
Report is_relative_rb(const Matrix& T, const Rational& lambda,
                      const LYAlgebra& g, const LYAlgebra& h,
                      const Representation& rep);

struct InverseCorrespondence {
  Matrix T;      // H^{-1}
  Report check;  // is_relative_rb(T, 1, ...)
};

// For invertible H: H is crossed iff H^{-1} is a weight-1 relative
// Rota-Baxter operator. Throws NotInvertibleError otherwise.
InverseCorrespondence inverse_correspondence(const CrossedMap& H);

// A pair of endomorphisms (psi_g, psi_h) intended as a morphism between two
// crossed maps over the same context.
struct CrossedMorphism {
  Matrix psi_g;  // m x m
  Matrix psi_h;  // n x n
};

// Checks, for a morphism from h_from to h_to:
//   (a) psi_g, psi_h are algebra homomorphisms;
//   (b) psi_h . h_from = h_to . psi_g as matrices;
//   (c) psi_h rho(x) = rho(psi_g x) psi_h and
//       psi_h mu(x,y) = mu(psi_g x, psi_g y) psi_h on basis tuples.
// When the report is empty the derived compatibility
// psi_h D(x,y) = D(psi_g x, psi_g y) psi_h is additionally asserted
// (ContainmentError on failure: it is implied, so a failure is a bug).
Report is_crossed_morphism(const CrossedMorphism& mor, const CrossedMap& h_from,
                           const CrossedMap& h_to);

}  // namespace lyk
