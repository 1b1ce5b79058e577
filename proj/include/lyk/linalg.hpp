#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lyk/rational.hpp"

namespace lyk {

using Vec = std::vector<Rational>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a claimed subspace containment fails; signals an upstream
// construction bug, not bad user input.
struct ContainmentError : std::logic_error {
  using std::logic_error::logic_error;
};

// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;  // matrix * vector
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Unique reduced row-echelon form, exact arithmetic throughout.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right null space {v : m v = 0}; size = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

// Some solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Inverse of a square matrix, nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// dim span(z_basis) - dim span(b_basis). Every b_basis vector must lie in
// span(z_basis); throws ContainmentError otherwise.
std::size_t quotient_dim(const std::vector<Vec>& z_basis,
                         const std::vector<Vec>& b_basis);

// Vec helpers.
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec& add_scaled(Vec& target, const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

// "(a, b, c)" with exact rational entries; used in reports.
std::string vec_str(const Vec& v);

}  // namespace lyk
