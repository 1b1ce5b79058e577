#include "lyk/algebra.hpp"

#include <string>
#include <utility>

namespace lyk {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) out += ",";
    out += "e" + std::to_string(i + 1);
    first = false;
  }
  out += ")";
  return out;
}

}  // namespace

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim) throw DimensionError("ambient dim mismatch");
  if (basis.empty()) return is_zero(v);
  return solve(Matrix::from_columns(ambient_dim, basis), v).has_value();
}

LYAlgebra::LYAlgebra(std::size_t dim, std::vector<Rational> binary,
                     std::vector<Rational> ternary)
    : dim_(dim), binary_(std::move(binary)), ternary_(std::move(ternary)) {
  if (binary_.size() != dim * dim * dim || ternary_.size() != dim * dim * dim * dim)
    throw DimensionError("structure constant tensor size mismatch");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c(i, j, k) != -c(j, i, k))
          throw AntisymmetryError("binary bracket not antisymmetric at " +
                                  tuple_str({i, j}));
        for (std::size_t l = 0; l < dim_; ++l)
          if (d(i, j, k, l) != -d(j, i, k, l))
            throw AntisymmetryError(
                "ternary bracket not antisymmetric in first two slots at " +
                tuple_str({i, j, k}));
      }
}

LYAlgebra LYAlgebra::abelian(std::size_t dim) {
  return LYAlgebra(dim, std::vector<Rational>(dim * dim * dim),
                   std::vector<Rational>(dim * dim * dim * dim));
}

Vec LYAlgebra::bracket2_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec LYAlgebra::bracket3_basis(std::size_t i, std::size_t j,
                              std::size_t k) const {
  Vec v(dim_);
  for (std::size_t l = 0; l < dim_; ++l) v[l] = d(i, j, k, l);
  return v;
}

Vec LYAlgebra::bracket2(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("bracket argument dim mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = c(i, j, k);
        if (sgn(ck) != 0) out[k] += s * ck;
      }
    }
  }
  return out;
}

Vec LYAlgebra::bracket3(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
    throw DimensionError("bracket argument dim mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (sgn(z[k]) == 0) continue;
        Rational t = s * z[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          const Rational& dl = d(i, j, k, l);
          if (sgn(dl) != 0) out[l] += t * dl;
        }
      }
    }
  }
  return out;
}

LYAlgebraBuilder::LYAlgebraBuilder(std::size_t dim)
    : dim_(dim),
      binary_(dim * dim * dim),
      ternary_(dim * dim * dim * dim) {}

LYAlgebraBuilder& LYAlgebraBuilder::binary(std::size_t i, std::size_t j,
                                           std::size_t k,
                                           const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw DimensionError("builder index out of range");
  if (i == j && sgn(value) != 0)
    throw AntisymmetryError("nonzero [e_i,e_i]");
  binary_[(i * dim_ + j) * dim_ + k] = value;
  binary_[(j * dim_ + i) * dim_ + k] = -value;
  return *this;
}

LYAlgebraBuilder& LYAlgebraBuilder::ternary(std::size_t i, std::size_t j,
                                            std::size_t k, std::size_t l,
                                            const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_ || l >= dim_)
    throw DimensionError("builder index out of range");
  if (i == j && sgn(value) != 0)
    throw AntisymmetryError("nonzero <<e_i,e_i,e_k>>");
  ternary_[(((i * dim_ + j) * dim_) + k) * dim_ + l] = value;
  ternary_[(((j * dim_ + i) * dim_) + k) * dim_ + l] = -value;
  return *this;
}

LYAlgebra LYAlgebraBuilder::build() const {
  return LYAlgebra(dim_, binary_, ternary_);
}

Report check_axioms(const LYAlgebra& alg) {
  Report rep;
  const std::size_t m = alg.dim();
  auto b2 = [&](const Vec& x, const Vec& y) { return alg.bracket2(x, y); };
  auto b3 = [&](const Vec& x, const Vec& y, const Vec& z) {
    return alg.bracket3(x, y, z);
  };
  std::vector<Vec> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = unit_vec(m, i);

  // LY1: cyclic sum of [[x,y],z] + <<x,y,z>> over (x,y,z) vanishes.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vec r = b2(alg.bracket2_basis(i, j), e[k]);
        add_scaled(r, 1, b2(alg.bracket2_basis(j, k), e[i]));
        add_scaled(r, 1, b2(alg.bracket2_basis(k, i), e[j]));
        add_scaled(r, 1, alg.bracket3_basis(i, j, k));
        add_scaled(r, 1, alg.bracket3_basis(j, k, i));
        add_scaled(r, 1, alg.bracket3_basis(k, i, j));
        if (!is_zero(r)) rep.add("LY1", tuple_str({i, j, k}), vec_str(r));
      }

  // LY2: cyclic sum of <<[x,y],z,w>> over (x,y,z) vanishes.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec r = b3(alg.bracket2_basis(i, j), e[k], e[l]);
          add_scaled(r, 1, b3(alg.bracket2_basis(j, k), e[i], e[l]));
          add_scaled(r, 1, b3(alg.bracket2_basis(k, i), e[j], e[l]));
          if (!is_zero(r)) rep.add("LY2", tuple_str({i, j, k, l}), vec_str(r));
        }

  // LY3: <<x,y,->> is a derivation of the binary bracket.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vec r = b3(e[i], e[j], alg.bracket2_basis(k, l));
          add_scaled(r, -1, b2(alg.bracket3_basis(i, j, k), e[l]));
          add_scaled(r, -1, b2(e[k], alg.bracket3_basis(i, j, l)));
          if (!is_zero(r)) rep.add("LY3", tuple_str({i, j, k, l}), vec_str(r));
        }

  // LY4: <<x,y,->> is a derivation of the ternary bracket.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          for (std::size_t t = 0; t < m; ++t) {
            Vec r = b3(e[i], e[j], alg.bracket3_basis(k, l, t));
            add_scaled(r, -1, b3(alg.bracket3_basis(i, j, k), e[l], e[t]));
            add_scaled(r, -1, b3(e[k], alg.bracket3_basis(i, j, l), e[t]));
            add_scaled(r, -1, b3(e[k], e[l], alg.bracket3_basis(i, j, t)));
            if (!is_zero(r))
              rep.add("LY4", tuple_str({i, j, k, l, t}), vec_str(r));
          }

  return rep;
}

Subspace center(const LYAlgebra& alg) {
  const std::size_t m = alg.dim();
  // x in the center iff [x,e_j] = 0, <<x,e_j,e_k>> = 0 and <<e_j,x,e_k>> = 0
  // for all basis j,k. Stack all conditions as one matrix acting on x.
  std::size_t rows = m * m + 2 * m * m * m;
  Matrix cond(rows, m);
  std::size_t row = 0;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t out = 0; out < m; ++out, ++row)
      for (std::size_t i = 0; i < m; ++i) cond(row, i) = alg.c(i, j, out);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t out = 0; out < m; ++out, ++row)
        for (std::size_t i = 0; i < m; ++i) cond(row, i) = alg.d(i, j, k, out);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t out = 0; out < m; ++out, ++row)
        for (std::size_t i = 0; i < m; ++i) cond(row, i) = alg.d(j, i, k, out);
  return Subspace{m, kernel_basis(cond)};
}

bool center_membership_literal(const LYAlgebra& alg, const Vec& x) {
  const std::size_t m = alg.dim();
  if (x.size() != m) throw DimensionError("vector dim mismatch");
  std::vector<Vec> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = unit_vec(m, i);
  for (std::size_t j = 0; j < m; ++j)
    if (!is_zero(alg.bracket2(x, e[j]))) return false;
  bool first_slot = true, second_slot = true;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      if (first_slot && !is_zero(alg.bracket3(x, e[j], e[k])))
        first_slot = false;
      if (second_slot && !is_zero(alg.bracket3(e[j], x, e[k])))
        second_slot = false;
    }
  return first_slot || second_slot;
}

bool is_homomorphism(const Matrix& phi, const LYAlgebra& a,
                     const LYAlgebra& b) {
  const std::size_t m = a.dim();
  if (phi.rows() != b.dim() || phi.cols() != m)
    throw DimensionError("homomorphism matrix shape mismatch");
  std::vector<Vec> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = phi.column(i);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (phi.apply(a.bracket2_basis(i, j)) != b.bracket2(img[i], img[j]))
        return false;
      for (std::size_t k = 0; k < m; ++k)
        if (phi.apply(a.bracket3_basis(i, j, k)) !=
            b.bracket3(img[i], img[j], img[k]))
          return false;
    }
  return true;
}

LYAlgebra from_lie_algebra(std::size_t dim,
                           const std::vector<Rational>& lie_constants) {
  if (lie_constants.size() != dim * dim * dim)
    throw DimensionError("lie constant tensor size mismatch");
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return lie_constants[(i * dim + j) * dim + k];
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw NotLieAlgebraError("bracket not antisymmetric");
  auto bracket = [&](const Vec& x, const Vec& y) {
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (sgn(y[j]) == 0) continue;
        for (std::size_t k = 0; k < dim; ++k)
          if (sgn(c(i, j, k)) != 0) out[k] += x[i] * y[j] * c(i, j, k);
      }
    }
    return out;
  };
  std::vector<Vec> e(dim);
  for (std::size_t i = 0; i < dim; ++i) e[i] = unit_vec(dim, i);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec r = bracket(bracket(e[i], e[j]), e[k]);
        add_scaled(r, 1, bracket(bracket(e[j], e[k]), e[i]));
        add_scaled(r, 1, bracket(bracket(e[k], e[i]), e[j]));
        if (!is_zero(r))
          throw NotLieAlgebraError("Jacobi identity fails at " +
                                   tuple_str({i, j, k}));
      }
  std::vector<Rational> ternary(dim * dim * dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec v = bracket(bracket(e[i], e[j]), e[k]);
        for (std::size_t l = 0; l < dim; ++l)
          ternary[(((i * dim + j) * dim) + k) * dim + l] = v[l];
      }
  return LYAlgebra(dim, lie_constants, std::move(ternary));
}

LYAlgebra k4_example() {
  return LYAlgebraBuilder(4)
      .binary(0, 1, 3, 2)
      .ternary(0, 1, 0, 3, 1)
      .build();
}

}  // namespace lyk
