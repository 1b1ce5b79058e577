#include "lyk/crossed.hpp"

#include <string>

namespace lyk {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
         std::to_string(k + 1) + ")";
}

}  // namespace

bool same_context(const ActionContext& a, const ActionContext& b) {
  return a.g == b.g && a.h == b.h && a.rep == b.rep;
}

CrossedMap::CrossedMap(ActionContext ctx_in, Matrix matrix_in)
    : ctx(std::move(ctx_in)), matrix(std::move(matrix_in)) {
  if (matrix.rows() != ctx.h.dim() || matrix.cols() != ctx.g.dim())
    throw DimensionError("crossed map matrix must be dim(h) x dim(g)");
}

Report is_crossed_hom(const CrossedMap& H) {
  Report out;
  const LYAlgebra& g = H.ctx.g;
  const LYAlgebra& h = H.ctx.h;
  const Representation& rep = H.ctx.rep;
  const std::size_t m = g.dim();

  std::vector<Vec> Hi(m);
  for (std::size_t i = 0; i < m; ++i) Hi[i] = H.matrix.column(i);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec r = H.matrix.apply(g.bracket2_basis(i, j));
      add_scaled(r, -1, rep.rho[i].apply(Hi[j]));
      add_scaled(r, 1, rep.rho[j].apply(Hi[i]));
      add_scaled(r, -1, h.bracket2(Hi[i], Hi[j]));
      if (!is_zero(r)) out.add("crossed-binary", pair_str(i, j), vec_str(r));
    }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix Dij = D_of(g, rep, i, j);
      for (std::size_t k = 0; k < m; ++k) {
        Vec r = H.matrix.apply(g.bracket3_basis(i, j, k));
        add_scaled(r, -1, Dij.apply(Hi[k]));
        add_scaled(r, -1, rep.mu[j][k].apply(Hi[i]));
        add_scaled(r, 1, rep.mu[i][k].apply(Hi[j]));
        add_scaled(r, -1, h.bracket3(Hi[i], Hi[j], Hi[k]));
        if (!is_zero(r))
          out.add("crossed-ternary", triple_str(i, j, k), vec_str(r));
      }
    }

  return out;
}

Matrix graph_map(const CrossedMap& H) {
  const std::size_t m = H.ctx.g.dim(), n = H.ctx.h.dim();
  Matrix phi(m + n, m);
  for (std::size_t i = 0; i < m; ++i) phi(i, i) = 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) phi(m + r, c) = H.matrix(r, c);
  return phi;
}

bool check_graph_equivalence(const CrossedMap& H) {
  bool crossed = is_crossed_hom(H).empty();
  LYAlgebra sd = semidirect(H.ctx.g, H.ctx.h, H.ctx.rep);
  bool hom = is_homomorphism(graph_map(H), H.ctx.g, sd);
  return crossed == hom;
}

Report is_relative_rb(const Matrix& T, const Rational& lambda,
                      const LYAlgebra& g, const LYAlgebra& h,
                      const Representation& rep) {
  if (T.rows() != g.dim() || T.cols() != h.dim())
    throw DimensionError("relative RB operator must be dim(g) x dim(h)");
  Report out;
  const std::size_t n = h.dim();

  std::vector<Vec> Tu(n);
  for (std::size_t a = 0; a < n; ++a) Tu[a] = T.column(a);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec inner = rep.rho_of(Tu[a]).apply(unit_vec(n, b));
      add_scaled(inner, -1, rep.rho_of(Tu[b]).apply(unit_vec(n, a)));
      add_scaled(inner, lambda, h.bracket2_basis(a, b));
      Vec r = g.bracket2(Tu[a], Tu[b]);
      add_scaled(r, -1, T.apply(inner));
      if (!is_zero(r)) out.add("rb-binary", pair_str(a, b), vec_str(r));
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix Dab = D_lin(g, rep, Tu[a], Tu[b]);
      for (std::size_t c = 0; c < n; ++c) {
        Vec inner = Dab.apply(unit_vec(n, c));
        add_scaled(inner, 1, rep.mu_of(Tu[b], Tu[c]).apply(unit_vec(n, a)));
        add_scaled(inner, -1, rep.mu_of(Tu[a], Tu[c]).apply(unit_vec(n, b)));
        add_scaled(inner, lambda, h.bracket3_basis(a, b, c));
        Vec r = g.bracket3(Tu[a], Tu[b], Tu[c]);
        add_scaled(r, -1, T.apply(inner));
        if (!is_zero(r)) out.add("rb-ternary", triple_str(a, b, c), vec_str(r));
      }
    }

  return out;
}

InverseCorrespondence inverse_correspondence(const CrossedMap& H) {
  if (H.matrix.rows() != H.matrix.cols())
    throw NotInvertibleError("crossed map matrix is not square");
  std::optional<Matrix> inv = inverse(H.matrix);
  if (!inv) throw NotInvertibleError("crossed map matrix is singular");
  Report check = is_relative_rb(*inv, 1, H.ctx.g, H.ctx.h, H.ctx.rep);
  return {std::move(*inv), std::move(check)};
}

Report is_crossed_morphism(const CrossedMorphism& mor, const CrossedMap& h_from,
                           const CrossedMap& h_to) {
  if (!same_context(h_from.ctx, h_to.ctx))
    throw ContextMismatchError("crossed maps live in different contexts");
  const LYAlgebra& g = h_from.ctx.g;
  const LYAlgebra& h = h_from.ctx.h;
  const Representation& rep = h_from.ctx.rep;
  const std::size_t m = g.dim();
  if (mor.psi_g.rows() != m || mor.psi_g.cols() != m ||
      mor.psi_h.rows() != h.dim() || mor.psi_h.cols() != h.dim())
    throw DimensionError("morphism matrix shape mismatch");

  Report out;
  if (!is_homomorphism(mor.psi_g, g, g))
    out.add("psi_g homomorphism", "-", "fails on some basis tuple");
  if (!is_homomorphism(mor.psi_h, h, h))
    out.add("psi_h homomorphism", "-", "fails on some basis tuple");

  Matrix lhs = mor.psi_h * h_from.matrix;
  Matrix rhs = h_to.matrix * mor.psi_g;
  if (!(lhs == rhs)) {
    lhs -= rhs;
    out.add("psi_h . H' = H . psi_g", "-", vec_str(lhs.column(0)) + "...");
  }

  std::vector<Vec> pg(m);
  for (std::size_t i = 0; i < m; ++i) pg[i] = mor.psi_g.column(i);

  for (std::size_t i = 0; i < m; ++i) {
    Matrix r = mor.psi_h * rep.rho[i];
    r -= rep.rho_of(pg[i]) * mor.psi_h;
    if (!r.is_zero())
      out.add("psi_h rho(x) = rho(psi_g x) psi_h", "(e" + std::to_string(i + 1) + ")",
              vec_str(r.column(0)) + "...");
    for (std::size_t j = 0; j < m; ++j) {
      Matrix s = mor.psi_h * rep.mu[i][j];
      s -= rep.mu_of(pg[i], pg[j]) * mor.psi_h;
      if (!s.is_zero())
        out.add("psi_h mu(x,y) = mu(psi_g x, psi_g y) psi_h", pair_str(i, j),
                vec_str(s.column(0)) + "...");
    }
  }

  if (out.empty()) {
    // Implied by the conditions above; a failure here is a library bug.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Matrix r = mor.psi_h * D_of(g, rep, i, j);
        r -= D_lin(g, rep, pg[i], pg[j]) * mor.psi_h;
        if (!r.is_zero())
          throw ContainmentError("derived D-compatibility failed at " +
                                 pair_str(i, j));
      }
  }

  return out;
}

}  // namespace lyk
