#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lyk/linalg.hpp"
#include "lyk/report.hpp"

namespace lyk {

struct AntisymmetryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotLieAlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidAlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A linear subspace of Q^ambient_dim given by an independent basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;
};

// Finite-dimensional Lie-Yamaguti algebra stored as structure constants on
// a fixed basis: a binary bracket antisymmetric in its two arguments and a
// ternary bracket antisymmetric in its first two. Both orientations of every
// constant are stored; the constructor rejects tensors that are not
// antisymmetric. All indices are 0-based internally (reports print 1-based).
class LYAlgebra {
 public:
  // binary: flat m*m*m, c[(i*m+j)*m+k] = coeff of e_k in [e_i,e_j]
  // ternary: flat m^4,  d[((i*m+j)*m+k)*m+l] = coeff of e_l in <<e_i,e_j,e_k>>
  LYAlgebra(std::size_t dim, std::vector<Rational> binary,
            std::vector<Rational> ternary);

  static LYAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return binary_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& d(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) const {
    return ternary_[(((i * dim_ + j) * dim_) + k) * dim_ + l];
  }

  // Structure-constant columns on basis pairs/triples.
  Vec bracket2_basis(std::size_t i, std::size_t j) const;
  Vec bracket3_basis(std::size_t i, std::size_t j, std::size_t k) const;

  // Multilinear extensions.
  Vec bracket2(const Vec& x, const Vec& y) const;
  Vec bracket3(const Vec& x, const Vec& y, const Vec& z) const;

  friend bool operator==(const LYAlgebra&, const LYAlgebra&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> binary_;
  std::vector<Rational> ternary_;
};

// Incremental construction with automatic antisymmetric mirroring: setting
// [e_i,e_j] also sets [e_j,e_i] = -[e_i,e_j]. Indices 0-based.
class LYAlgebraBuilder {
 public:
  explicit LYAlgebraBuilder(std::size_t dim);
  LYAlgebraBuilder& binary(std::size_t i, std::size_t j, std::size_t k,
                           const Rational& value);
  LYAlgebraBuilder& ternary(std::size_t i, std::size_t j, std::size_t k,
                            std::size_t l, const Rational& value);
  LYAlgebra build() const;

 private:
  std::size_t dim_;
  std::vector<Rational> binary_;
  std::vector<Rational> ternary_;
};

// Evaluates the four defining axioms on all basis tuples. Empty report
// iff the structure constants define a Lie-Yamaguti algebra.
Report check_axioms(const LYAlgebra& alg);

// Strict center: [x,y]=0, <<x,y,z>>=0 and <<y,x,z>>=0 for all y,z.
Subspace center(const LYAlgebra& alg);

// The weaker pointwise membership test with the ternary conditions joined
// by OR; this set need not be a subspace.
bool center_membership_literal(const LYAlgebra& alg, const Vec& x);

bool is_homomorphism(const Matrix& phi, const LYAlgebra& a, const LYAlgebra& b);

// Lie algebra -> Lie-Yamaguti algebra with <<x,y,z>> = [[x,y],z].
// lie_constants: flat m*m*m as in LYAlgebra::c. Throws NotLieAlgebraError
// when antisymmetry or the Jacobi identity fails.
LYAlgebra from_lie_algebra(std::size_t dim,
                           const std::vector<Rational>& lie_constants);

// The 4-dimensional example: [e1,e2] = 2 e4, <<e1,e2,e1>> = e4.
LYAlgebra k4_example();

}  // namespace lyk
