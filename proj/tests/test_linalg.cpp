#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testutil.hpp"

using namespace lyk;
using lyktest::Rng;
using lyktest::random_matrix;
using lyktest::random_vec;

namespace {

Matrix from_rows(const std::vector<Vec>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rref on fixed inputs") {
  RrefResult id = rref(Matrix::identity(2));
  CHECK(id.reduced == Matrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});

  RrefResult z = rref(Matrix(3, 4));
  CHECK(z.rank == 0);
  CHECK(z.pivot_cols.empty());
  CHECK(z.reduced == Matrix(3, 4));

  Matrix m = from_rows({{1, 2}, {2, 4}});
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.reduced(0, 0) == 1);
  CHECK(r.reduced(0, 1) == 2);
  CHECK(r.reduced(1, 0) == 0);
  CHECK(r.reduced(1, 1) == 0);
}

TEST_CASE("kernel_basis on fixed inputs") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());

  std::vector<Vec> k = kernel_basis(Matrix(2, 3));
  REQUIRE(k.size() == 3);
  CHECK(rank(Matrix::from_columns(3, k)) == 3);

  std::vector<Vec> line = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(line.size() == 1);
  CHECK(line[0][0] == -line[0][1]);
  CHECK(!is_zero(line[0]));
}

TEST_CASE("solve on fixed inputs") {
  Vec b = {3, -1, 2};
  CHECK(solve(Matrix::identity(3), b) == b);

  auto x = solve(from_rows({{1, 1}}), Vec{2});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 2);

  Matrix col(2, 1);
  col(0, 0) = 1;
  CHECK(!solve(col, Vec{0, 1}).has_value());
}

TEST_CASE("quotient_dim") {
  std::vector<Vec> q2 = {{1, 0}, {0, 1}};
  CHECK(quotient_dim(q2, {}) == 2);
  CHECK(quotient_dim(q2, q2) == 0);
  CHECK(quotient_dim(q2, {Vec{1, 1}}) == 1);
  CHECK_THROWS_AS(quotient_dim({Vec{1, 0}}, {Vec{0, 1}}), ContainmentError);
}

TEST_CASE("inverse") {
  Rng rng(11);
  std::size_t found = 0;
  while (found < 10) {
    Matrix m = random_matrix(rng, 4, 4);
    auto inv = inverse(m);
    if (!inv) continue;
    ++found;
    CHECK(m * *inv == Matrix::identity(4));
    CHECK(*inv * m == Matrix::identity(4));
  }
  CHECK(!inverse(from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("randomized linear-algebra invariants") {
  Rng rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    std::size_t rows = std::size_t(rng.between(1, 5));
    std::size_t cols = std::size_t(rng.between(1, 5));
    Matrix m = random_matrix(rng, rows, cols);

    RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(rank(m) == rank(m.transpose()));

    std::vector<Vec> ker = kernel_basis(m);
    CHECK(ker.size() == cols - r.rank);
    for (const Vec& v : ker) CHECK(is_zero(m.apply(v)));

    Vec b = random_vec(rng, rows);
    auto x = solve(m, b);
    Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
      aug(i, cols) = b[i];
    }
    CHECK(x.has_value() == (rank(aug) == r.rank));
    if (x) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("matrix arithmetic basics") {
  Rng rng(3);
  Matrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
  Vec v = random_vec(rng, 2);
  CHECK((a * b).apply(v) == a.apply(b.apply(v)));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(Matrix::identity(3) * a == a);
  CHECK((a - a).is_zero());

  Matrix cols = Matrix::from_columns(3, {a.column(0), a.column(2)});
  CHECK(cols.column(0) == a.column(0));
  CHECK(cols.column(1) == a.column(2));

  CHECK_THROWS_AS(a.apply(v), DimensionError);
  CHECK_THROWS_AS(b * a * b, DimensionError);
}

TEST_CASE("vector helpers") {
  CHECK(vec_str(Vec{Rational(1), Rational(-1, 2), Rational(0)}) ==
        "(1, -1/2, 0)");
  CHECK(is_zero(zero_vec(3)));
  CHECK(unit_vec(3, 1) == Vec{0, 1, 0});
  Vec t = {1, 2};
  add_scaled(t, Rational(1, 2), Vec{4, -4});
  CHECK(t == Vec{3, 0});
  CHECK(dot(Vec{1, 2, 3}, Vec{3, 2, 1}) == 10);
}
