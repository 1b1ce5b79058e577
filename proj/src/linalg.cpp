#include "lyk/linalg.hpp"

#include <algorithm>

namespace lyk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix shape mismatch in *");
  Matrix out(a.rows(), b.cols());
  // Skip zero entries; the operator matrices this library produces are
  // overwhelmingly sparse.
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& av = a(r, k);
      if (sgn(av) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Rational& bv = b(k, c);
        if (sgn(bv) != 0) out(r, c) += av * bv;
      }
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) swap(a(lead, c), a(piv, c));
    Rational inv = 1 / a(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  for (std::size_t p : red.pivot_cols)
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(a.cols());
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
    x[red.pivot_cols[i]] = red.reduced(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

std::size_t quotient_dim(const std::vector<Vec>& z_basis,
                         const std::vector<Vec>& b_basis) {
  std::size_t ambient = z_basis.empty()
                            ? (b_basis.empty() ? 0 : b_basis.front().size())
                            : z_basis.front().size();
  Matrix z = Matrix::from_columns(ambient, z_basis);
  std::size_t zr = rank(z);
  for (const Vec& b : b_basis)
    if (!solve(z, b)) throw ContainmentError("b_basis vector outside span(z_basis)");
  Matrix b = Matrix::from_columns(ambient, b_basis);
  return zr - rank(b);
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Vec& add_scaled(Vec& target, const Rational& s, const Vec& v) {
  if (target.size() != v.size()) throw DimensionError("vector size mismatch");
  if (sgn(s) == 0) return target;
  for (std::size_t i = 0; i < v.size(); ++i) target[i] += s * v[i];
  return target;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace lyk
