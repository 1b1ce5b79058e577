#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "testutil.hpp"

using namespace lyk;
using lyktest::Rng;

namespace {

Cochain basis_wedge(std::size_t m, std::size_t n, std::size_t i,
                    std::size_t j) {
  Vec payload = zero_vec(wedge_count(m));
  payload[wedge_index(m, i, j)] = 1;
  return Cochain(0, m, n, std::move(payload));
}

// The order-s coefficient equations of the two crossed-homomorphism
// identities, written out directly as an independent cross-check.
bool coefficients_hold(const ActionContext& ctx,
                       const std::vector<Matrix>& terms, std::size_t s) {
  const std::size_t m = ctx.g.dim();
  auto term = [&](std::size_t a) {
    return a < terms.size() ? terms[a] : Matrix(ctx.h.dim(), m);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec r = ctx.rep.rho[i].apply(term(s).column(j));
      add_scaled(r, -1, ctx.rep.rho[j].apply(term(s).column(i)));
      add_scaled(r, -1, term(s).apply(ctx.g.bracket2_basis(i, j)));
      for (std::size_t a = 0; a <= s; ++a)
        add_scaled(r, 1,
                   ctx.h.bracket2(term(a).column(i), term(s - a).column(j)));
      if (!is_zero(r)) return false;
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix dij = D_of(ctx.g, ctx.rep, i, j);
      for (std::size_t k = 0; k < m; ++k) {
        Vec r = dij.apply(term(s).column(k));
        add_scaled(r, 1, ctx.rep.mu[j][k].apply(term(s).column(i)));
        add_scaled(r, -1, ctx.rep.mu[i][k].apply(term(s).column(j)));
        add_scaled(r, -1, term(s).apply(ctx.g.bracket3_basis(i, j, k)));
        for (std::size_t a = 0; a <= s; ++a)
          for (std::size_t b = 0; a + b <= s; ++b)
            add_scaled(r, 1,
                       ctx.h.bracket3(term(a).column(i), term(b).column(j),
                                      term(s - a - b).column(k)));
        if (!is_zero(r)) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("matrix polynomials") {
  Rng rng(3);
  Matrix a = lyktest::random_matrix(rng, 3, 3);
  Matrix b = lyktest::random_matrix(rng, 3, 3);
  MatrixPoly pa = MatrixPoly::from_coeffs({Matrix::identity(3), a}, 2, 3, 3);
  MatrixPoly pb = MatrixPoly::from_coeffs({Matrix::identity(3), b}, 2, 3, 3);
  MatrixPoly prod = pa * pb;
  CHECK(prod.coeffs[0] == Matrix::identity(3));
  CHECK(prod.coeffs[1] == a + b);
  CHECK(prod.coeffs[2] == a * b);  // truncation keeps t^2, drops nothing here
  CHECK(MatrixPoly::constant(a, 1).coeffs[1].is_zero());
}

TEST_CASE("wedge operators") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  Cochain x12 = basis_wedge(4, 4, 0, 1);
  Matrix l = wedge_L(ctx.g, x12);
  CHECK(l.apply(unit_vec(4, 0)) == ctx.g.bracket3_basis(0, 1, 0));
  CHECK(wedge_D(ctx.g, ctx.rep, x12) == D_of(ctx.g, ctx.rep, 0, 1));
  CHECK(wedge_L(ctx.g, basis_wedge(4, 4, 2, 3)).is_zero());
  CHECK(wedge_D(ctx.g, ctx.rep, basis_wedge(4, 4, 2, 3)).is_zero());
}

TEST_CASE("linear deformations") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  CrossedMap h0(ctx, lyktest::h0_matrix());
  Rng rng(19);

  CHECK(is_linear_deformation(h0, Matrix(4, 4)).empty());

  // Directions inside the family stay crossed for every t.
  for (int iter = 0; iter < 5; ++iter) {
    Matrix k = lyktest::random_family_crossed(rng, ctx).matrix;
    CHECK(is_linear_deformation(h0, k).empty());
    // exact specialization at rational points
    for (int t0 = 1; t0 <= 3; ++t0)
      CHECK(is_crossed_hom(CrossedMap(ctx, h0.matrix + k * Rational(t0)))
                .empty());
  }

  // On this context every 1-cocycle is a linear-deformation direction: no
  // cocycle image carries an e1 component, so all the higher bracket terms
  // vanish identically.
  ComplexContext cc = ComplexContext::for_crossed(h0);
  for (const Vec& v : kernel_basis(operator_matrix(cc, 1)))
    CHECK(is_linear_deformation(h0, Cochain(1, 4, 4, v).as_matrix()).empty());

  // A 1-cocycle whose image violates the quadratic condition lives on the
  // Heisenberg adjoint context: K = diag(1,1,2) is closed but [Ke1,Ke2] != 0.
  LYAlgebra h3 = lyktest::heisenberg3();
  ActionContext hctx(h3, h3, adjoint_rep(h3));
  CrossedMap hzero(hctx, Matrix(3, 3));
  Matrix k3 = Matrix::identity(3);
  k3(2, 2) = 2;
  ComplexContext hcc = ComplexContext::for_crossed(hzero);
  REQUIRE(is_cocycle(hcc, Cochain::degree1(k3)));
  Report quad = is_linear_deformation(hzero, k3);
  REQUIRE(!quad.empty());
  for (const Violation& viol : quad.violations)
    CHECK(viol.equation.find("t^2") != std::string::npos);

  CHECK_THROWS_AS(
      is_linear_deformation(CrossedMap(ctx, Matrix::identity(4)), Matrix(4, 4)),
      NotCrossedError);
}

TEST_CASE("formal deformations and infinitesimals") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  Rng rng(23);
  Matrix h0 = lyktest::h0_matrix();

  DeformationSeries constant(ctx, {h0});
  CHECK(is_formal_deformation(constant).empty());
  CHECK(infinitesimal(DeformationSeries(ctx, {h0, Matrix(4, 4)})) ==
        Cochain::zero(1, 4, 4));

  for (int iter = 0; iter < 5; ++iter) {
    Matrix k = lyktest::random_family_crossed(rng, ctx).matrix;
    DeformationSeries s(ctx, {h0, k});
    CHECK(is_formal_deformation(s).empty());
    CHECK(coefficients_hold(ctx, s.terms, 1));
    Cochain inf = infinitesimal(s);
    CHECK(inf.as_matrix() == k);
    CHECK(is_cocycle(ComplexContext::for_crossed(CrossedMap(ctx, h0)), inf));
  }

  CHECK_THROWS_AS(DeformationSeries(ctx, {Matrix::identity(4)}),
                  NotCrossedError);
  CHECK_THROWS_AS(DeformationSeries(ctx, {}), DimensionError);
}

TEST_CASE("Nijenhuis elements") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  CrossedMap h0(ctx, lyktest::h0_matrix());

  CHECK(is_nijenhuis(Cochain::zero(0, 4, 4), h0).empty());
  // All six basis wedges qualify on the desk example: operators either
  // vanish or land in the e4 line which every bracket kills.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(is_nijenhuis(basis_wedge(4, 4, i, j), h0).empty());
}

TEST_CASE("trivial deformations") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  CrossedMap h0(ctx, lyktest::h0_matrix());

  DeformationSeries zero = trivial_deformation(Cochain::zero(0, 4, 4), h0, 3);
  CHECK(zero.terms == std::vector<Matrix>{h0.matrix, Matrix(4, 4)});

  Cochain x34 = basis_wedge(4, 4, 2, 3);
  DeformationSeries s = trivial_deformation(x34, h0, 4);
  CHECK(s.order() == 1);
  CHECK(s.terms[0] == h0.matrix);
  CHECK(s.terms[1] == delta0(x34, h0).as_matrix());
  CHECK(is_formal_deformation(s).empty());
  CHECK(is_linear_deformation(h0, s.terms[1]).empty());

  Cochain x12 = basis_wedge(4, 4, 0, 1);
  DeformationSeries s12 = trivial_deformation(x12, h0, 3);
  CHECK(s12.terms[1] == delta0(x12, h0).as_matrix());
  CHECK(is_linear_deformation(h0, s12.terms[1]).empty());

  CHECK_THROWS_AS(trivial_deformation(Cochain::degree1(Matrix(4, 4)), h0, 2),
                  DimensionError);
}

TEST_CASE("formal equivalence") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  CrossedMap h0(ctx, lyktest::h0_matrix());
  Matrix id = Matrix::identity(4), z = Matrix(4, 4);

  DeformationSeries c1(ctx, {h0.matrix, z});
  CHECK(are_equivalent_formal(c1, c1, Cochain::zero(0, 4, 4), {id, z}, {id, z})
            .empty());

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Cochain x = basis_wedge(4, 4, i, j);
      DeformationSeries deformed = trivial_deformation(x, h0, 2);
      std::vector<Matrix> phi = {id, wedge_L(ctx.g, x)};
      std::vector<Matrix> vphi = {id, wedge_D(ctx.g, ctx.rep, x)};
      CHECK(are_equivalent_formal(DeformationSeries(ctx, {h0.matrix, z}),
                                  deformed, x, phi, vphi)
                .empty());
    }

  // A genuinely different deformation is not intertwined by the identity.
  Matrix k = lyktest::family_matrix({0, 1, 0, 0, 0, 2});
  DeformationSeries other(ctx, {h0.matrix, k});
  CHECK(!are_equivalent_formal(c1, other, Cochain::zero(0, 4, 4), {id, z},
                               {id, z})
             .empty());
}

TEST_CASE("obstructions and extension") {
  ActionContext ctx = lyktest::k4_adjoint_ctx();
  Matrix h0 = lyktest::h0_matrix();
  ComplexContext cc = ComplexContext::for_crossed(CrossedMap(ctx, h0));
  Rng rng(47);

  // Order-1 series: the obstruction is the wedge of [Kx,Ky]; the ternary
  // block needs three positive indices summing to 2, so it vanishes.
  Matrix m1 = operator_matrix(cc, 1);
  std::vector<Vec> cocycles = kernel_basis(m1);
  REQUIRE(!cocycles.empty());
  for (int iter = 0; iter < 6; ++iter) {
    Vec v = zero_vec(16);
    for (const Vec& kv : cocycles) add_scaled(v, rng.rat(), kv);
    Matrix k = Cochain(1, 4, 4, v).as_matrix();
    DeformationSeries s(ctx, {h0, k});
    Cochain ob = obstruction(s);
    for (std::size_t w = 0; w < 6; ++w) {
      auto [a, b] = wedge_pairs(4)[w];
      CHECK(ob.f_at(w) == ctx.h.bracket2(k.column(a), k.column(b)));
    }
    for (std::size_t gi = 0; gi < ob.g_inputs(); ++gi)
      CHECK(is_zero(ob.g_at(gi)));
    CHECK(is_cocycle(cc, ob));

    auto next = extend(s);
    CHECK(next.has_value() == is_coboundary(cc, ob));
    if (next) {
      DeformationSeries longer(ctx, {h0, k, *next});
      CHECK(is_formal_deformation(longer).empty());
      CHECK(coefficients_hold(ctx, longer.terms, 2));
    }
  }

  // Constant series: zero obstruction, zero extension works.
  DeformationSeries constant(ctx, {h0});
  CHECK(is_zero(obstruction(constant).payload()));
  auto ext = extend(constant);
  REQUIRE(ext.has_value());
  CHECK(is_formal_deformation(DeformationSeries(ctx, {h0, *ext})).empty());

  // Abelian, ternary-trivial target: obstructions always vanish.
  Rng rng2(5);
  ActionContext nctx = lyktest::random_nilpotent_ctx(rng2);
  Matrix nh = lyktest::random_crossed_abelian(rng2, nctx);
  REQUIRE(is_crossed_hom(CrossedMap(nctx, nh)).empty());
  Matrix nk = lyktest::random_crossed_abelian(rng2, nctx);
  DeformationSeries ns(nctx, {nh, nk});
  if (is_formal_deformation(ns).empty())
    CHECK(is_zero(obstruction(ns).payload()));

  // A genuinely obstructed direction: trivial action on k4, H = 0. Cocycles
  // are homomorphism candidates, but [Kx,Ky] need not be a coboundary.
  ActionContext flat = lyktest::trivial_ctx(k4_example(), k4_example());
  ComplexContext fcc =
      ComplexContext::for_crossed(CrossedMap(flat, Matrix(4, 4)));
  std::vector<Vec> fk = kernel_basis(operator_matrix(fcc, 1));
  bool blocked = false;
  Rng rng3(21);
  for (int iter = 0; iter < 20 && !blocked; ++iter) {
    Vec v = zero_vec(16);
    for (const Vec& kv : fk) add_scaled(v, rng3.rat(-2, 2), kv);
    Matrix k = Cochain(1, 4, 4, v).as_matrix();
    DeformationSeries s(flat, {Matrix(4, 4), k});
    Cochain ob = obstruction(s);
    CHECK(is_cocycle(fcc, ob));
    bool cob = is_coboundary(fcc, ob);
    CHECK(extend(s).has_value() == cob);
    if (!cob) blocked = true;
  }
  CHECK(blocked);
}
