#pragma once

#include <vector>

#include "lyk/algebra.hpp"

namespace lyk {

struct InvalidActionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A representation (rho, mu) of an m-dimensional algebra on Q^n, stored as
// operator matrices on basis inputs. The derived operator D is never stored;
// it is recomputed from rho and mu on demand (D_of / D_lin).
struct Representation {
  std::size_t source_dim = 0;  // m
  std::size_t target_dim = 0;  // n
  std::vector<Matrix> rho;              // rho[i], n x n
  std::vector<std::vector<Matrix>> mu;  // mu[i][j], n x n, ordered pairs

  static Representation trivial(std::size_t source_dim, std::size_t target_dim);

  // Linear extensions to arbitrary vectors.
  Matrix rho_of(const Vec& x) const;
  Matrix mu_of(const Vec& x, const Vec& y) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

// D(e_i,e_j) = mu(e_j,e_i) - mu(e_i,e_j) + [rho(e_i),rho(e_j)] - rho([e_i,e_j]).
Matrix D_of(const LYAlgebra& alg, const Representation& rep, std::size_t i,
            std::size_t j);
// Bilinear extension of D.
Matrix D_lin(const LYAlgebra& alg, const Representation& rep, const Vec& x,
             const Vec& y);

// The five defining conditions, evaluated on all basis tuples.
Report check_representation(const LYAlgebra& alg, const Representation& rep);

// Three identities that follow from the defining conditions; expected empty
// for every valid representation (a cross-check, not a filter).
Report check_derived_identities(const LYAlgebra& alg, const Representation& rep);

// rho[i] = matrix of z -> [e_i,z]; mu[i][j] = matrix of z -> <<z,e_i,e_j>>.
// Throws InvalidAlgebraError when alg fails check_axioms.
Representation adjoint_rep(const LYAlgebra& alg);

// Action conditions: operator images inside the strict center of h, and
// annihilation of the derived subspaces [h,h] and <<h,h,h>>; the same
// conditions are also verified for the derived operator D.
Report check_action(const LYAlgebra& g, const LYAlgebra& h,
                    const Representation& rep);

// Semidirect product on g (+) h:
//   [x+u, y+v]     = [x,y]_g + rho(x)v - rho(y)u + [u,v]_h
//   <<x+u,y+v,z+w>> = <<x,y,z>>_g + D(x,y)w + mu(y,z)u - mu(x,z)v + <<u,v,w>>_h
// g coordinates come first. Throws InvalidActionError when check_action fails.
LYAlgebra semidirect(const LYAlgebra& g, const LYAlgebra& h,
                     const Representation& rep);

// A validated bundle (g, h, rep): construction runs check_axioms on both
// algebras, check_representation and check_action, throwing on any failure.
struct ActionContext {
  LYAlgebra g;
  LYAlgebra h;
  Representation rep;

  ActionContext(LYAlgebra g_in, LYAlgebra h_in, Representation rep_in);
};

}  // namespace lyk
