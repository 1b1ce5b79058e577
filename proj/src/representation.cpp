#include "lyk/representation.hpp"

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

std::string quad_str(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
         std::to_string(k + 1) + ",e" + std::to_string(l + 1) + ")";
}

std::string mat_residual(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    Vec row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    out += vec_str(row);
  }
  out += "]";
  return out;
}

void check_rep_shapes(const LYAlgebra& alg, const Representation& rep) {
  const std::size_t m = alg.dim(), n = rep.target_dim;
  if (rep.source_dim != m || rep.rho.size() != m || rep.mu.size() != m)
    throw DimensionError("representation source dim mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (rep.rho[i].rows() != n || rep.rho[i].cols() != n ||
        rep.mu[i].size() != m)
      throw DimensionError("representation operator shape mismatch");
    for (std::size_t j = 0; j < m; ++j)
      if (rep.mu[i][j].rows() != n || rep.mu[i][j].cols() != n)
        throw DimensionError("representation operator shape mismatch");
  }
}

}  // namespace

Representation Representation::trivial(std::size_t source_dim,
                                       std::size_t target_dim) {
  Representation rep;
  rep.source_dim = source_dim;
  rep.target_dim = target_dim;
  rep.rho.assign(source_dim, Matrix(target_dim, target_dim));
  rep.mu.assign(source_dim,
                std::vector<Matrix>(source_dim, Matrix(target_dim, target_dim)));
  return rep;
}

Matrix Representation::rho_of(const Vec& x) const {
  if (x.size() != source_dim) throw DimensionError("rho argument dim mismatch");
  Matrix out(target_dim, target_dim);
  for (std::size_t i = 0; i < source_dim; ++i)
    if (sgn(x[i]) != 0) out += x[i] * rho[i];
  return out;
}

Matrix Representation::mu_of(const Vec& x, const Vec& y) const {
  if (x.size() != source_dim || y.size() != source_dim)
    throw DimensionError("mu argument dim mismatch");
  Matrix out(target_dim, target_dim);
  for (std::size_t i = 0; i < source_dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < source_dim; ++j)
      if (sgn(y[j]) != 0) out += (x[i] * y[j]) * mu[i][j];
  }
  return out;
}

Matrix D_of(const LYAlgebra& alg, const Representation& rep, std::size_t i,
            std::size_t j) {
  if (i >= rep.source_dim || j >= rep.source_dim)
    throw DimensionError("D_of index out of range");
  Matrix d = rep.mu[j][i];
  d -= rep.mu[i][j];
  d += rep.rho[i] * rep.rho[j];
  d -= rep.rho[j] * rep.rho[i];
  d -= rep.rho_of(alg.bracket2_basis(i, j));
  return d;
}

Matrix D_lin(const LYAlgebra& alg, const Representation& rep, const Vec& x,
             const Vec& y) {
  Matrix d = rep.mu_of(y, x);
  d -= rep.mu_of(x, y);
  d += rep.rho_of(x) * rep.rho_of(y);
  d -= rep.rho_of(y) * rep.rho_of(x);
  d -= rep.rho_of(alg.bracket2(x, y));
  return d;
}

Report check_representation(const LYAlgebra& alg, const Representation& rep) {
  check_rep_shapes(alg, rep);
  Report out;
  const std::size_t m = alg.dim();

  std::vector<std::vector<Matrix>> D(m, std::vector<Matrix>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) D[i][j] = D_of(alg, rep, i, j);

  auto mu_lin = [&](const Vec& x, std::size_t j) {
    Matrix s(rep.target_dim, rep.target_dim);
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(x[i]) != 0) s += x[i] * rep.mu[i][j];
    return s;
  };
  auto mu_lin2 = [&](std::size_t i, const Vec& y) {
    Matrix s(rep.target_dim, rep.target_dim);
    for (std::size_t j = 0; j < m; ++j)
      if (sgn(y[j]) != 0) s += y[j] * rep.mu[i][j];
    return s;
  };

  // REP1: mu([x,y],z) - mu(x,z) rho(y) + mu(y,z) rho(x) = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Matrix r = mu_lin(alg.bracket2_basis(i, j), k);
        r -= rep.mu[i][k] * rep.rho[j];
        r += rep.mu[j][k] * rep.rho[i];
        if (!r.is_zero())
          out.add("REP1", triple_str(i, j, k), mat_residual(r));
      }

  // REP2: mu(x,[y,z]) - rho(y) mu(x,z) + rho(z) mu(x,y) = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Matrix r = mu_lin2(i, alg.bracket2_basis(j, k));
        r -= rep.rho[j] * rep.mu[i][k];
        r += rep.rho[k] * rep.mu[i][j];
        if (!r.is_zero())
          out.add("REP2", triple_str(i, j, k), mat_residual(r));
      }

  // REP3: rho(<<x,y,z>>) = [D(x,y), rho(z)]
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Matrix r = rep.rho_of(alg.bracket3_basis(i, j, k));
        r -= D[i][j] * rep.rho[k];
        r += rep.rho[k] * D[i][j];
        if (!r.is_zero())
          out.add("REP3", triple_str(i, j, k), mat_residual(r));
      }

  // REP4: mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,<<y,z,w>>) + D(y,z) mu(x,w) = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Matrix r = rep.mu[k][l] * rep.mu[i][j];
          r -= rep.mu[j][l] * rep.mu[i][k];
          r -= mu_lin2(i, alg.bracket3_basis(j, k, l));
          r += D[j][k] * rep.mu[i][l];
          if (!r.is_zero())
            out.add("REP4", quad_str(i, j, k, l), mat_residual(r));
        }

  // REP5: mu(<<x,y,z>>,w) + mu(z,<<x,y,w>>) = [D(x,y), mu(z,w)]
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Matrix r = mu_lin(alg.bracket3_basis(i, j, k), l);
          r += mu_lin2(k, alg.bracket3_basis(i, j, l));
          r -= D[i][j] * rep.mu[k][l];
          r += rep.mu[k][l] * D[i][j];
          if (!r.is_zero())
            out.add("REP5", quad_str(i, j, k, l), mat_residual(r));
        }

  return out;
}

Report check_derived_identities(const LYAlgebra& alg,
                                const Representation& rep) {
  check_rep_shapes(alg, rep);
  Report out;
  const std::size_t m = alg.dim();

  std::vector<std::vector<Matrix>> D(m, std::vector<Matrix>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) D[i][j] = D_of(alg, rep, i, j);

  auto mu_lin = [&](const Vec& x, std::size_t j) {
    Matrix s(rep.target_dim, rep.target_dim);
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(x[i]) != 0) s += x[i] * rep.mu[i][j];
    return s;
  };

  // DREP1: D([x,y],z) + D([y,z],x) + D([z,x],y) = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        std::vector<Vec> e = {unit_vec(m, i), unit_vec(m, j), unit_vec(m, k)};
        Matrix r = D_lin(alg, rep, alg.bracket2_basis(i, j), e[2]);
        r += D_lin(alg, rep, alg.bracket2_basis(j, k), e[0]);
        r += D_lin(alg, rep, alg.bracket2_basis(k, i), e[1]);
        if (!r.is_zero())
          out.add("DREP1", triple_str(i, j, k), mat_residual(r));
      }

  // DREP2: D(<<x,y,z>>,w) + D(z,<<x,y,w>>) = [D(x,y), D(z,w)]
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Matrix r = D_lin(alg, rep, alg.bracket3_basis(i, j, k),
                           unit_vec(m, l));
          r += D_lin(alg, rep, unit_vec(m, k), alg.bracket3_basis(i, j, l));
          r -= D[i][j] * D[k][l];
          r += D[k][l] * D[i][j];
          if (!r.is_zero())
            out.add("DREP2", quad_str(i, j, k, l), mat_residual(r));
        }

  // DREP3: mu(<<x,y,z>>,w) = mu(x,w) mu(z,y) - mu(y,w) mu(z,x) - mu(z,w) D(x,y)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Matrix r = mu_lin(alg.bracket3_basis(i, j, k), l);
          r -= rep.mu[i][l] * rep.mu[k][j];
          r += rep.mu[j][l] * rep.mu[k][i];
          r += rep.mu[k][l] * D[i][j];
          if (!r.is_zero())
            out.add("DREP3", quad_str(i, j, k, l), mat_residual(r));
        }

  return out;
}

Representation adjoint_rep(const LYAlgebra& alg) {
  if (!check_axioms(alg).empty())
    throw InvalidAlgebraError("adjoint_rep: algebra fails the defining axioms");
  const std::size_t m = alg.dim();
  Representation rep = Representation::trivial(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t z = 0; z < m; ++z) {
      Vec col = alg.bracket2_basis(i, z);
      for (std::size_t r = 0; r < m; ++r) rep.rho[i](r, z) = col[r];
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t z = 0; z < m; ++z) {
        Vec col = alg.bracket3_basis(z, i, j);
        for (std::size_t r = 0; r < m; ++r) rep.mu[i][j](r, z) = col[r];
      }
  return rep;
}

Report check_action(const LYAlgebra& g, const LYAlgebra& h,
                    const Representation& rep) {
  check_rep_shapes(g, rep);
  if (rep.target_dim != h.dim())
    throw DimensionError("action target dim mismatch");
  Report out;
  const std::size_t m = g.dim(), n = h.dim();
  Subspace zh = center(h);

  // Spanning sets of the derived subspaces [h,h] and <<h,h,h>>.
  std::vector<Vec> binary_span, ternary_span;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = h.bracket2_basis(a, b);
      if (!is_zero(v)) binary_span.push_back(std::move(v));
      for (std::size_t c = 0; c < n; ++c) {
        Vec w = h.bracket3_basis(a, b, c);
        if (!is_zero(w)) ternary_span.push_back(std::move(w));
      }
    }

  auto check_operator = [&](const Matrix& op, const std::string& name,
                            const std::string& witness) {
    for (std::size_t c = 0; c < n; ++c) {
      Vec col = op.column(c);
      if (!zh.contains(col))
        out.add(name + " image in center", witness + " column e" +
                std::to_string(c + 1), vec_str(col));
    }
    for (const Vec& v : binary_span) {
      Vec r = op.apply(v);
      if (!is_zero(r))
        out.add(name + " annihilates [h,h]", witness + " on " + vec_str(v),
                vec_str(r));
    }
    for (const Vec& v : ternary_span) {
      Vec r = op.apply(v);
      if (!is_zero(r))
        out.add(name + " annihilates <<h,h,h>>", witness + " on " + vec_str(v),
                vec_str(r));
    }
  };

  for (std::size_t i = 0; i < m; ++i)
    check_operator(rep.rho[i], "rho", "e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      check_operator(rep.mu[i][j], "mu", pair_str(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      check_operator(D_of(g, rep, i, j), "D", pair_str(i, j));

  return out;
}

LYAlgebra semidirect(const LYAlgebra& g, const LYAlgebra& h,
                     const Representation& rep) {
  {
    Report rep_check = check_representation(g, rep);
    rep_check.merge(check_action(g, h, rep));
    if (!rep_check.empty())
      throw InvalidActionError("semidirect requires a valid action:\n" +
                               rep_check.to_text());
  }
  const std::size_t m = g.dim(), n = h.dim(), t = m + n;
  std::vector<Rational> binary(t * t * t), ternary(t * t * t * t);
  auto put2 = [&](std::size_t i, std::size_t j, const Vec& gpart,
                  const Vec& hpart) {
    for (std::size_t k = 0; k < m; ++k)
      binary[(i * t + j) * t + k] = gpart.empty() ? Rational(0) : gpart[k];
    for (std::size_t k = 0; k < n; ++k)
      binary[(i * t + j) * t + m + k] = hpart.empty() ? Rational(0) : hpart[k];
  };
  auto put3 = [&](std::size_t i, std::size_t j, std::size_t k,
                  const Vec& gpart, const Vec& hpart) {
    std::size_t base = (((i * t + j) * t) + k) * t;
    for (std::size_t l = 0; l < m; ++l)
      ternary[base + l] = gpart.empty() ? Rational(0) : gpart[l];
    for (std::size_t l = 0; l < n; ++l)
      ternary[base + m + l] = hpart.empty() ? Rational(0) : hpart[l];
  };
  const Vec none;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      put2(i, j, g.bracket2_basis(i, j), none);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = rep.rho[i].column(b);
      put2(i, m + b, none, v);
      for (auto& x : v) x = -x;
      put2(m + b, i, none, v);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      put2(m + a, m + b, none, h.bracket2_basis(a, b));

  std::vector<std::vector<Matrix>> D(m, std::vector<Matrix>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) D[i][j] = D_of(g, rep, i, j);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k)
        put3(i, j, k, g.bracket3_basis(i, j, k), none);
      for (std::size_t c = 0; c < n; ++c)
        put3(i, j, m + c, none, D[i][j].column(c));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        put3(m + a, j, k, none, rep.mu[j][k].column(a));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < m; ++k) {
        Vec v = rep.mu[i][k].column(b);
        for (auto& x : v) x = -x;
        put3(i, m + b, k, none, v);
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        put3(m + a, m + b, m + c, none, h.bracket3_basis(a, b, c));

  return LYAlgebra(t, std::move(binary), std::move(ternary));
}

ActionContext::ActionContext(LYAlgebra g_in, LYAlgebra h_in,
                             Representation rep_in)
    : g(std::move(g_in)), h(std::move(h_in)), rep(std::move(rep_in)) {
  Report r = check_axioms(g);
  if (!r.empty())
    throw InvalidAlgebraError("source algebra fails axioms:\n" + r.to_text());
  r = check_axioms(h);
  if (!r.empty())
    throw InvalidAlgebraError("target algebra fails axioms:\n" + r.to_text());
  r = check_representation(g, rep);
  if (!r.empty())
    throw InvalidActionError("not a representation:\n" + r.to_text());
  r = check_action(g, h, rep);
  if (!r.empty()) throw InvalidActionError("not an action:\n" + r.to_text());
}

}  // namespace lyk
