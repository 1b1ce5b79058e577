#include "lyk/deformation.hpp"

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

// Vector-valued truncated polynomial helpers for the equivalence checks.
using VecPoly = std::vector<Vec>;  // coefficient of t^k at index k

bool poly_is_zero(const VecPoly& p) {
  for (const Vec& v : p)
    if (!is_zero(v)) return false;
  return true;
}

std::string poly_str(const VecPoly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += " + ";
    out += vec_str(p[k]) + " t^" + std::to_string(k);
  }
  return out;
}

}  // namespace

MatrixPoly MatrixPoly::constant(Matrix m, std::size_t order) {
  MatrixPoly p;
  p.order = order;
  p.coeffs.assign(order + 1, Matrix(m.rows(), m.cols()));
  p.coeffs[0] = std::move(m);
  return p;
}

MatrixPoly MatrixPoly::from_coeffs(std::vector<Matrix> low, std::size_t order,
                                   std::size_t rows, std::size_t cols) {
  MatrixPoly p;
  p.order = order;
  p.coeffs = std::move(low);
  if (p.coeffs.size() > order + 1) p.coeffs.resize(order + 1);
  while (p.coeffs.size() <= order) p.coeffs.emplace_back(rows, cols);
  for (const Matrix& c : p.coeffs)
    if (c.rows() != rows || c.cols() != cols)
      throw DimensionError("polynomial coefficient shape mismatch");
  return p;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.order != b.order) throw DimensionError("polynomial order mismatch");
  MatrixPoly p;
  p.order = a.order;
  p.coeffs.assign(a.order + 1,
                  Matrix(a.coeffs[0].rows(), b.coeffs[0].cols()));
  for (std::size_t i = 0; i <= a.order; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return p;
}

DeformationSeries::DeformationSeries(ActionContext ctx_in,
                                     std::vector<Matrix> terms_in)
    : ctx(std::move(ctx_in)), terms(std::move(terms_in)) {
  if (terms.empty()) throw DimensionError("deformation series needs a term");
  for (const Matrix& t : terms)
    if (t.rows() != ctx.h.dim() || t.cols() != ctx.g.dim())
      throw DimensionError("series term must be dim(h) x dim(g)");
  Report r = is_crossed_hom(CrossedMap(ctx, terms[0]));
  if (!r.empty())
    throw NotCrossedError("series base term is not crossed:\n" + r.to_text());
}

Matrix wedge_L(const LYAlgebra& g, const Cochain& X) {
  const std::size_t m = g.dim();
  if (X.degree() != 0 || X.source_dim() != m)
    throw DimensionError("wedge_L expects a degree-0 cochain over g");
  Matrix L(m, m);
  const auto pairs = wedge_pairs(m);
  for (std::size_t w = 0; w < pairs.size(); ++w) {
    const Rational& co = X.payload()[w];
    if (sgn(co) == 0) continue;
    const auto [a, b] = pairs[w];
    for (std::size_t z = 0; z < m; ++z) {
      Vec col = g.bracket3_basis(a, b, z);
      for (std::size_t r = 0; r < m; ++r) L(r, z) += co * col[r];
    }
  }
  return L;
}

Matrix wedge_D(const LYAlgebra& g, const Representation& rep,
               const Cochain& X) {
  const std::size_t m = g.dim(), n = rep.target_dim;
  if (X.degree() != 0 || X.source_dim() != m)
    throw DimensionError("wedge_D expects a degree-0 cochain over g");
  Matrix D(n, n);
  const auto pairs = wedge_pairs(m);
  for (std::size_t w = 0; w < pairs.size(); ++w) {
    const Rational& co = X.payload()[w];
    if (sgn(co) == 0) continue;
    D += co * D_of(g, rep, pairs[w].first, pairs[w].second);
  }
  return D;
}

namespace {

// Coefficient equations of the crossed-homomorphism identities for the
// family sum_i terms[i] t^i, for 1 <= s <= max_s (terms beyond the list are
// zero). Used by both the linear and the formal deformation checkers.
Report check_coefficients(const ActionContext& ctx,
                          const std::vector<Matrix>& terms,
                          std::size_t max_s) {
  Report out;
  const LYAlgebra& g = ctx.g;
  const LYAlgebra& h = ctx.h;
  const Representation& rep = ctx.rep;
  const std::size_t m = g.dim(), n = h.dim();
  const std::size_t top = terms.size() - 1;

  auto term_col = [&](std::size_t s, std::size_t i) {
    return s <= top ? terms[s].column(i) : zero_vec(n);
  };

  for (std::size_t s = 1; s <= max_s; ++s) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec r = rep.rho[i].apply(term_col(s, j));
        add_scaled(r, -1, rep.rho[j].apply(term_col(s, i)));
        if (s <= top) add_scaled(r, -1, terms[s].apply(g.bracket2_basis(i, j)));
        for (std::size_t a = 0; a <= s && a <= top; ++a) {
          if (s - a > top) continue;
          add_scaled(r, 1, h.bracket2(terms[a].column(i), terms[s - a].column(j)));
        }
        if (!is_zero(r))
          out.add("t^" + std::to_string(s) + " binary", pair_str(i, j),
                  vec_str(r));
      }

    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Matrix Dij = D_of(g, rep, i, j);
        for (std::size_t k = 0; k < m; ++k) {
          Vec r = Dij.apply(term_col(s, k));
          add_scaled(r, 1, rep.mu[j][k].apply(term_col(s, i)));
          add_scaled(r, -1, rep.mu[i][k].apply(term_col(s, j)));
          if (s <= top)
            add_scaled(r, -1, terms[s].apply(g.bracket3_basis(i, j, k)));
          for (std::size_t a = 0; a <= s && a <= top; ++a)
            for (std::size_t b = 0; a + b <= s && b <= top; ++b) {
              if (s - a - b > top) continue;
              add_scaled(r, 1,
                         h.bracket3(terms[a].column(i), terms[b].column(j),
                                    terms[s - a - b].column(k)));
            }
          if (!is_zero(r))
            out.add("t^" + std::to_string(s) + " ternary", triple_str(i, j, k),
                    vec_str(r));
        }
      }
  }
  return out;
}

}  // namespace

Report is_linear_deformation(const CrossedMap& H, const Matrix& K) {
  {
    Report r = is_crossed_hom(H);
    if (!r.empty())
      throw NotCrossedError("base map is not crossed:\n" + r.to_text());
  }
  if (K.rows() != H.matrix.rows() || K.cols() != H.matrix.cols())
    throw DimensionError("deformation direction shape mismatch");
  // t^3 is the highest power the expanded identities can carry.
  return check_coefficients(H.ctx, {H.matrix, K}, 3);
}

Report is_formal_deformation(const DeformationSeries& s) {
  return check_coefficients(s.ctx, s.terms, s.order());
}

Cochain infinitesimal(const DeformationSeries& s) {
  if (s.order() < 1)
    throw InvalidDeformationError("infinitesimal needs order >= 1");
  Report r = is_formal_deformation(s);
  if (!r.empty())
    throw InvalidDeformationError("not a formal deformation:\n" + r.to_text());
  return Cochain::degree1(s.terms[1]);
}

Report is_nijenhuis(const Cochain& X, const CrossedMap& H) {
  {
    Report r = is_crossed_hom(H);
    if (!r.empty())
      throw NotCrossedError("base map is not crossed:\n" + r.to_text());
  }
  const LYAlgebra& g = H.ctx.g;
  const Representation& rep = H.ctx.rep;
  const std::size_t m = g.dim();
  Matrix L = wedge_L(g, X);
  Matrix Dx = wedge_D(g, rep, X);

  Report out;
  std::vector<Vec> Le(m);
  for (std::size_t j = 0; j < m; ++j) Le[j] = L.column(j);
  std::vector<Vec> e(m);
  for (std::size_t j = 0; j < m; ++j) e[j] = unit_vec(m, j);

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Vec r = g.bracket2(Le[j], Le[k]);
      if (!is_zero(r)) out.add("nijenhuis-1", pair_str(j, k), vec_str(r));
      {
        Matrix t = rep.rho_of(Le[j]) * Dx;
        if (!t.is_zero())
          out.add("nijenhuis-4", "(e" + std::to_string(j + 1) + ")",
                  vec_str(t.column(0)) + "...");
      }
      {
        Matrix t = rep.mu_of(Le[j], e[k]) * Dx;
        t += rep.mu_of(e[j], Le[k]) * Dx;
        t += rep.mu_of(Le[j], Le[k]);
        if (!t.is_zero())
          out.add("nijenhuis-5", pair_str(j, k), vec_str(t.column(0)) + "...");
      }
      {
        Matrix t = rep.mu_of(Le[j], Le[k]) * Dx;
        if (!t.is_zero())
          out.add("nijenhuis-6", pair_str(j, k), vec_str(t.column(0)) + "...");
      }
      for (std::size_t l = 0; l < m; ++l) {
        Vec r2 = g.bracket3(Le[j], Le[k], e[l]);
        add_scaled(r2, 1, g.bracket3(Le[j], e[k], Le[l]));
        add_scaled(r2, 1, g.bracket3(e[j], Le[k], Le[l]));
        if (!is_zero(r2)) out.add("nijenhuis-2", triple_str(j, k, l), vec_str(r2));
        Vec r3 = g.bracket3(Le[j], Le[k], Le[l]);
        if (!is_zero(r3)) out.add("nijenhuis-3", triple_str(j, k, l), vec_str(r3));
      }
    }

  {
    Matrix inner = Dx * H.matrix;
    inner -= H.matrix * L;
    Matrix t = Dx * inner;
    if (!t.is_zero()) out.add("nijenhuis-7", "-", vec_str(t.column(0)) + "...");
  }
  return out;
}

DeformationSeries trivial_deformation(const Cochain& X, const CrossedMap& H,
                                      std::size_t N) {
  if (N < 1) throw DimensionError("trivial_deformation needs order >= 1");
  {
    Report r = is_nijenhuis(X, H);
    if (!r.empty())
      throw NotNijenhuisError("not a Nijenhuis element:\n" + r.to_text());
  }
  const std::size_t m = H.ctx.g.dim(), n = H.ctx.h.dim();
  Matrix L = wedge_L(H.ctx.g, X);
  Matrix Dx = wedge_D(H.ctx.g, H.ctx.rep, X);

  // (Id + t Dx)^{-1} = sum (-1)^k Dx^k t^k, truncated.
  MatrixPoly inv = MatrixPoly::constant(Matrix::identity(n), N);
  Matrix pow = Matrix::identity(n);
  for (std::size_t k = 1; k <= N; ++k) {
    pow = pow * Dx;
    inv.coeffs[k] = (k % 2 ? Rational(-1) : Rational(1)) * pow;
  }
  MatrixPoly right =
      MatrixPoly::from_coeffs({H.matrix, H.matrix * L}, N, n, m);
  MatrixPoly result = inv * right;

  const std::size_t P = wedge_count(m);
  Cochain X0(0, m, n, X.payload());
  Matrix expected = delta0(Cochain(0, m, n, X.payload()), H).as_matrix();
  if (!(result.coeffs[1] == expected))
    throw ContainmentError("trivial deformation t^1 coefficient is not delta0");
  for (std::size_t k = 2; k <= N; ++k)
    if (!result.coeffs[k].is_zero())
      throw ContainmentError("trivial deformation has a t^" +
                             std::to_string(k) + " coefficient");
  (void)P;
  return DeformationSeries(H.ctx, {H.matrix, std::move(expected)});
}

Report are_equivalent_formal(const DeformationSeries& s1,
                             const DeformationSeries& s2, const Cochain& X,
                             const std::vector<Matrix>& phi,
                             const std::vector<Matrix>& vphi) {
  if (!same_context(s1.ctx, s2.ctx))
    throw ContextMismatchError("series live in different contexts");
  if (s1.order() != s2.order())
    throw DimensionError("series order mismatch");
  const LYAlgebra& g = s1.ctx.g;
  const LYAlgebra& h = s1.ctx.h;
  const Representation& rep = s1.ctx.rep;
  const std::size_t m = g.dim(), n = h.dim(), N = s1.order();

  if (phi.empty() || vphi.empty() || !(phi[0] == Matrix::identity(m)) ||
      !(vphi[0] == Matrix::identity(n)))
    throw DimensionError("phi[0] and vphi[0] must be identities");
  if (N >= 1) {
    if (phi.size() < 2 || !(phi[1] == wedge_L(g, X)))
      throw DimensionError("phi[1] must be the wedge operator of X on g");
    if (vphi.size() < 2 || !(vphi[1] == wedge_D(g, rep, X)))
      throw DimensionError("vphi[1] must be the derived operator of X on h");
  }

  MatrixPoly phi_t = MatrixPoly::from_coeffs(phi, N, m, m);
  MatrixPoly vphi_t = MatrixPoly::from_coeffs(vphi, N, n, n);

  Report out;

  auto col_poly = [&](const MatrixPoly& p, std::size_t i) {
    VecPoly v(p.order + 1);
    for (std::size_t k = 0; k <= p.order; ++k) v[k] = p.coeffs[k].column(i);
    return v;
  };
  auto bracket2_poly = [&](const LYAlgebra& alg, const VecPoly& x,
                           const VecPoly& y) {
    VecPoly out_p(N + 1, zero_vec(alg.dim()));
    for (std::size_t a = 0; a <= N; ++a)
      for (std::size_t b = 0; a + b <= N; ++b)
        add_scaled(out_p[a + b], 1, alg.bracket2(x[a], y[b]));
    return out_p;
  };
  auto bracket3_poly = [&](const LYAlgebra& alg, const VecPoly& x,
                           const VecPoly& y, const VecPoly& z) {
    VecPoly out_p(N + 1, zero_vec(alg.dim()));
    for (std::size_t a = 0; a <= N; ++a)
      for (std::size_t b = 0; a + b <= N; ++b)
        for (std::size_t c = 0; a + b + c <= N; ++c)
          add_scaled(out_p[a + b + c], 1, alg.bracket3(x[a], y[b], z[c]));
    return out_p;
  };
  auto apply_poly = [&](const MatrixPoly& p, const VecPoly& v) {
    VecPoly out_p(N + 1, zero_vec(p.coeffs[0].rows()));
    for (std::size_t a = 0; a <= N; ++a)
      for (std::size_t b = 0; a + b <= N; ++b)
        add_scaled(out_p[a + b], 1, p.coeffs[a].apply(v[b]));
    return out_p;
  };
  auto sub_poly = [&](VecPoly x, const VecPoly& y) {
    for (std::size_t k = 0; k <= N; ++k) add_scaled(x[k], -1, y[k]);
    return x;
  };

  // phi_t and vphi_t are homomorphisms of g[t] and h[t]
  auto check_hom = [&](const LYAlgebra& alg, const MatrixPoly& p,
                       const std::string& name) {
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        VecPoly lhs = bracket2_poly(alg, col_poly(p, i), col_poly(p, j));
        VecPoly arg(N + 1, zero_vec(d));
        arg[0] = alg.bracket2_basis(i, j);
        VecPoly rhs = apply_poly(p, arg);
        VecPoly diff = sub_poly(lhs, rhs);
        if (!poly_is_zero(diff))
          out.add(name + " binary homomorphism", pair_str(i, j), poly_str(diff));
        for (std::size_t k = 0; k < d; ++k) {
          VecPoly l3 = bracket3_poly(alg, col_poly(p, i), col_poly(p, j),
                                     col_poly(p, k));
          VecPoly r3(N + 1, zero_vec(d));
          r3[0] = alg.bracket3_basis(i, j, k);
          r3 = apply_poly(p, r3);
          VecPoly d3 = sub_poly(l3, r3);
          if (!poly_is_zero(d3))
            out.add(name + " ternary homomorphism", triple_str(i, j, k),
                    poly_str(d3));
        }
      }
  };
  check_hom(g, phi_t, "phi");
  check_hom(h, vphi_t, "vphi");

  // action compatibility: vphi rho(x) = rho(phi x) vphi and the mu analogue
  for (std::size_t i = 0; i < m; ++i) {
    MatrixPoly lhs = vphi_t * MatrixPoly::constant(rep.rho[i], N);
    MatrixPoly rho_phi;
    rho_phi.order = N;
    for (std::size_t k = 0; k <= N; ++k)
      rho_phi.coeffs.push_back(rep.rho_of(phi_t.coeffs[k].column(i)));
    MatrixPoly rhs = rho_phi * vphi_t;
    if (!(lhs == rhs))
      out.add("vphi rho(x) = rho(phi x) vphi",
              "(e" + std::to_string(i + 1) + ")", "-");
    for (std::size_t j = 0; j < m; ++j) {
      MatrixPoly lhs2 = vphi_t * MatrixPoly::constant(rep.mu[i][j], N);
      MatrixPoly mu_phi;
      mu_phi.order = N;
      mu_phi.coeffs.assign(N + 1, Matrix(n, n));
      for (std::size_t a = 0; a <= N; ++a)
        for (std::size_t b = 0; a + b <= N; ++b)
          mu_phi.coeffs[a + b] += rep.mu_of(phi_t.coeffs[a].column(i),
                                            phi_t.coeffs[b].column(j));
      MatrixPoly rhs2 = mu_phi * vphi_t;
      if (!(lhs2 == rhs2))
        out.add("vphi mu(x,y) = mu(phi x, phi y) vphi", pair_str(i, j), "-");
    }
  }

  // intertwining: vphi_t . (deformed series s2) = (reference series s1) . phi_t
  {
    MatrixPoly h2 = MatrixPoly::from_coeffs(s2.terms, N, n, m);
    MatrixPoly h1 = MatrixPoly::from_coeffs(s1.terms, N, n, m);
    MatrixPoly lhs = vphi_t * h2;
    MatrixPoly rhs = h1 * phi_t;
    if (!(lhs == rhs)) out.add("vphi . s2 = s1 . phi", "-", "-");
  }

  return out;
}

Cochain obstruction(const DeformationSeries& s) {
  {
    Report r = is_formal_deformation(s);
    if (!r.empty())
      throw InvalidDeformationError("not a formal deformation:\n" + r.to_text());
  }
  const LYAlgebra& g = s.ctx.g;
  const LYAlgebra& h = s.ctx.h;
  const std::size_t m = g.dim(), n = h.dim(), ord = s.order();

  Cochain out = Cochain::zero(2, m, n);
  const auto pairs = wedge_pairs(m);
  const std::size_t P = pairs.size();
  for (std::size_t w = 0; w < P; ++w) {
    const auto [a, b] = pairs[w];
    Vec f(n);
    for (std::size_t i = 1; i <= ord; ++i) {
      std::size_t j = ord + 1 - i;
      if (j < 1 || j > ord) continue;
      add_scaled(f, 1, h.bracket2(s.terms[i].column(a), s.terms[j].column(b)));
    }
    for (std::size_t r = 0; r < n; ++r) out.payload()[w * n + r] = f[r];
    for (std::size_t z = 0; z < m; ++z) {
      Vec gv(n);
      for (std::size_t i = 1; i <= ord; ++i)
        for (std::size_t j = 1; i + j <= ord + 1 && j <= ord; ++j) {
          std::size_t k = ord + 1 - i - j;
          if (k < 1 || k > ord) continue;
          add_scaled(gv, 1,
                     h.bracket3(s.terms[i].column(a), s.terms[j].column(b),
                                s.terms[k].column(z)));
        }
      const std::size_t base = P * n + (w * m + z) * n;
      for (std::size_t r = 0; r < n; ++r) out.payload()[base + r] = gv[r];
    }
  }
  return out;
}

std::optional<Matrix> extend(const DeformationSeries& s) {
  Cochain ob = obstruction(s);  // validates the series
  ComplexContext cc = ComplexContext::for_crossed(CrossedMap(s.ctx, s.terms[0]));
  Matrix m1 = operator_matrix(cc, 1);
  Vec rhs = ob.payload();
  for (auto& x : rhs) x = -x;
  std::optional<Vec> v = solve(m1, rhs);
  if (!v) return std::nullopt;
  return Cochain(1, s.ctx.g.dim(), s.ctx.h.dim(), std::move(*v)).as_matrix();
}

}  // namespace lyk
