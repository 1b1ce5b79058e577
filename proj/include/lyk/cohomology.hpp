#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "lyk/crossed.hpp"

namespace lyk {

struct NotCrossedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingCrossedMapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnsupportedDegreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- wedge-pair basis of ^2 g -----------------------------------------
// Basis of antisymmetric pairs e_i ^ e_j, i < j, in lexicographic order.

std::size_t wedge_count(std::size_t m);  // m(m-1)/2

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t m);

// Index of e_i ^ e_j (requires i < j) in the lexicographic pair basis.
std::size_t wedge_index(std::size_t m, std::size_t i, std::size_t j);

// Coordinates of x ^ y over the wedge-pair basis.
Vec wedge_of(const Vec& x, const Vec& y);

// ---- cochains ----------------------------------------------------------
// Degree p = 0: a coordinate vector over the wedge-pair basis (size P).
// Degree p = 1: a linear map g -> V, stored input-major: entry for input
//   basis vector z and output row r sits at z*n + r.
// Degree p >= 2: a pair (f, g) with f over (^2 g)^{x(p-1)} and g over
//   (^2 g)^{x(p-1)} (x) g. The f block comes first; within each block the
//   layout is input-major (input tuple index times n, plus output row).
//   Input tuples over wedge indices are ordered lexicographically with the
//   first factor most significant.
class Cochain {
 public:
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim,
          Vec payload);

  static Cochain zero(std::size_t degree, std::size_t source_dim,
                      std::size_t target_dim);
  static Cochain degree1(const Matrix& map);  // n x m matrix -> 1-cochain

  std::size_t degree() const { return degree_; }
  std::size_t source_dim() const { return m_; }
  std::size_t target_dim() const { return n_; }
  const Vec& payload() const { return payload_; }
  Vec& payload() { return payload_; }

  Matrix as_matrix() const;  // degree-1 cochain back to an n x m matrix

  std::size_t f_inputs() const;  // number of f-block input tuples
  std::size_t g_inputs() const;  // number of g-block input tuples

  // Value (a vector in V) at a basis input tuple of the f or g block.
  Vec f_at(std::size_t input_idx) const;
  Vec g_at(std::size_t input_idx) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

  // Total payload length for the given shape.
  static std::size_t payload_size(std::size_t degree, std::size_t source_dim,
                                  std::size_t target_dim);

 private:
  std::size_t degree_, m_, n_;
  Vec payload_;
};

// A cochain complex: coefficients (alg, rep), optionally rooted at a crossed
// homomorphism (then rep = induced_rep(crossed) and degree-0 cochains exist).
struct ComplexContext {
  LYAlgebra alg;
  Representation rep;
  std::optional<CrossedMap> crossed;

  // Plain Yamaguti complex; validates that rep is a representation.
  static ComplexContext plain(LYAlgebra alg, Representation rep);
  // Crossed-homomorphism complex; requires is_crossed_hom(H) empty and uses
  // the induced representation as coefficients.
  static ComplexContext for_crossed(const CrossedMap& H);
};

// rho_H(x)u = [Hx,u]_h + rho(x)u;  mu_H(x,y)u = <<u,Hx,Hy>>_h + mu(x,y)u.
// Throws NotCrossedError when is_crossed_hom(H) is nonempty.
Representation induced_rep(const CrossedMap& H);

// Degree 0 -> 1: (delta X)(z) = mu(y,z)Hx - mu(x,z)Hy + <<Hx,Hy,Hz>>_h,
// extended bilinearly over the wedge coordinates of X. Always a 1-cocycle
// of the induced complex.
Cochain delta0(const Cochain& X, const CrossedMap& H);

// Coboundary of a degree p >= 1 cochain.
Cochain coboundary(const ComplexContext& ctx, const Cochain& c);

// One additive term of the coboundary at degree p: the output block entry
// (out_g ? g : f, out_idx) receives coeff * op * (input value at
// (in_g ? g : f, in_idx)); op == nullptr means the identity operator.
// Matrix assembly and pointwise evaluation both consume this enumeration,
// so there is exactly one rendering of the coboundary formulas.
using TermSink =
    std::function<void(bool out_g, std::size_t out_idx, bool in_g,
                       std::size_t in_idx, const Rational& coeff,
                       const Matrix* op)>;
void for_each_coboundary_term(const ComplexContext& ctx, std::size_t p,
                              const TermSink& sink);

// Matrix of the coboundary C^p -> C^{p+1} over the payload bases.
// Supported p: 0 (requires ctx.crossed), 1, 2, 3.
Matrix operator_matrix(const ComplexContext& ctx, std::size_t p);

bool is_cocycle(const ComplexContext& ctx, const Cochain& c);
// Degree-1 coboundaries require ctx.crossed (they come from ^2 g).
bool is_coboundary(const ComplexContext& ctx, const Cochain& c);

// dim ker(operator_matrix(p)) - rank(operator_matrix(p-1)). For the plain
// complex at p = 1 there are no coboundaries (returns dim ker only); the
// crossed complex at p = 0 likewise. Supported p: 0, 1, 2.
std::size_t cohomology_dim(const ComplexContext& ctx, std::size_t p);

// Transport of cochains along a morphism (psi_g invertible):
//   (p c)(X_1,...,X_n[,z]) = psi_h ( c(psi_g^{-1} X_1, ... [, psi_g^{-1} z]) ).
// Commutes with the coboundaries of the two crossed complexes.
Cochain pushforward(const CrossedMorphism& mor, const Cochain& c);

}  // namespace lyk
