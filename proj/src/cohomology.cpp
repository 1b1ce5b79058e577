#include "lyk/cohomology.hpp"

#include <string>

namespace lyk {

namespace {

std::size_t pow_sz(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::size_t tuple_index(const std::vector<std::size_t>& digits,
                        std::size_t base) {
  std::size_t idx = 0;
  for (std::size_t d : digits) idx = idx * base + d;
  return idx;
}

}  // namespace

std::size_t wedge_count(std::size_t m) { return m * (m - 1) / 2; }

std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(wedge_count(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

std::size_t wedge_index(std::size_t m, std::size_t i, std::size_t j) {
  if (i >= j || j >= m) throw DimensionError("wedge_index requires i < j < m");
  // pairs (i,*) start after all pairs with smaller first entry
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

Vec wedge_of(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionError("wedge of unequal vectors");
  const std::size_t m = x.size();
  Vec out(wedge_count(m));
  std::size_t w = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++w) out[w] = x[i] * y[j] - x[j] * y[i];
  return out;
}

// ---- Cochain -------------------------------------------------------------

std::size_t Cochain::payload_size(std::size_t degree, std::size_t source_dim,
                                  std::size_t target_dim) {
  const std::size_t P = wedge_count(source_dim);
  if (degree == 0) return P;
  if (degree == 1) return source_dim * target_dim;
  const std::size_t t = pow_sz(P, degree - 1);
  return t * target_dim + t * source_dim * target_dim;
}

Cochain::Cochain(std::size_t degree, std::size_t source_dim,
                 std::size_t target_dim, Vec payload)
    : degree_(degree), m_(source_dim), n_(target_dim),
      payload_(std::move(payload)) {
  if (payload_.size() != payload_size(degree_, m_, n_))
    throw DimensionError("cochain payload size mismatch for degree " +
                         std::to_string(degree_));
}

Cochain Cochain::zero(std::size_t degree, std::size_t source_dim,
                      std::size_t target_dim) {
  return Cochain(degree, source_dim, target_dim,
                 Vec(payload_size(degree, source_dim, target_dim)));
}

Cochain Cochain::degree1(const Matrix& map) {
  Vec payload(map.rows() * map.cols());
  for (std::size_t z = 0; z < map.cols(); ++z)
    for (std::size_t r = 0; r < map.rows(); ++r)
      payload[z * map.rows() + r] = map(r, z);
  return Cochain(1, map.cols(), map.rows(), std::move(payload));
}

Matrix Cochain::as_matrix() const {
  if (degree_ != 1)
    throw DimensionError("as_matrix is defined for degree-1 cochains");
  Matrix out(n_, m_);
  for (std::size_t z = 0; z < m_; ++z)
    for (std::size_t r = 0; r < n_; ++r) out(r, z) = payload_[z * n_ + r];
  return out;
}

std::size_t Cochain::f_inputs() const {
  return degree_ >= 2 ? pow_sz(wedge_count(m_), degree_ - 1) : 0;
}

std::size_t Cochain::g_inputs() const {
  if (degree_ == 0) return 0;
  return pow_sz(wedge_count(m_), degree_ - 1) * m_;
}

Vec Cochain::f_at(std::size_t input_idx) const {
  if (input_idx >= f_inputs()) throw DimensionError("f input out of range");
  Vec v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = payload_[input_idx * n_ + r];
  return v;
}

Vec Cochain::g_at(std::size_t input_idx) const {
  if (input_idx >= g_inputs()) throw DimensionError("g input out of range");
  const std::size_t off = f_inputs() * n_;
  Vec v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = payload_[off + input_idx * n_ + r];
  return v;
}

// ---- contexts ------------------------------------------------------------

ComplexContext ComplexContext::plain(LYAlgebra alg, Representation rep) {
  Report r = check_representation(alg, rep);
  if (!r.empty())
    throw InvalidActionError("coefficients are not a representation:\n" +
                             r.to_text());
  return ComplexContext{std::move(alg), std::move(rep), std::nullopt};
}

ComplexContext ComplexContext::for_crossed(const CrossedMap& H) {
  Representation rep = induced_rep(H);  // throws NotCrossedError
  return ComplexContext{H.ctx.g, std::move(rep), H};
}

Representation induced_rep(const CrossedMap& H) {
  Report r = is_crossed_hom(H);
  if (!r.empty())
    throw NotCrossedError("induced_rep requires a crossed homomorphism:\n" +
                          r.to_text());
  const LYAlgebra& g = H.ctx.g;
  const LYAlgebra& h = H.ctx.h;
  const Representation& rep = H.ctx.rep;
  const std::size_t m = g.dim(), n = h.dim();

  std::vector<Vec> Hi(m);
  for (std::size_t i = 0; i < m; ++i) Hi[i] = H.matrix.column(i);

  Representation out = Representation::trivial(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      Vec col = h.bracket2(Hi[i], unit_vec(n, a));
      add_scaled(col, 1, rep.rho[i].column(a));
      for (std::size_t r = 0; r < n; ++r) out.rho[i](r, a) = col[r];
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        Vec col = h.bracket3(unit_vec(n, a), Hi[i], Hi[j]);
        add_scaled(col, 1, rep.mu[i][j].column(a));
        for (std::size_t r = 0; r < n; ++r) out.mu[i][j](r, a) = col[r];
      }
  }
  return out;
}

Cochain delta0(const Cochain& X, const CrossedMap& H) {
  const LYAlgebra& h = H.ctx.h;
  const Representation& rep = H.ctx.rep;
  const std::size_t m = H.ctx.g.dim(), n = h.dim();
  if (X.degree() != 0 || X.source_dim() != m)
    throw DimensionError("delta0 expects a degree-0 cochain over the source");
  {
    Report r = is_crossed_hom(H);
    if (!r.empty())
      throw NotCrossedError("delta0 requires a crossed homomorphism:\n" +
                            r.to_text());
  }

  Cochain out = Cochain::zero(1, m, n);
  const auto pairs = wedge_pairs(m);
  for (std::size_t w = 0; w < pairs.size(); ++w) {
    const Rational& coeff = X.payload()[w];
    if (sgn(coeff) == 0) continue;
    const auto [a, b] = pairs[w];
    Vec Ha = H.matrix.column(a), Hb = H.matrix.column(b);
    for (std::size_t z = 0; z < m; ++z) {
      Vec val = rep.mu[b][z].apply(Ha);
      add_scaled(val, -1, rep.mu[a][z].apply(Hb));
      add_scaled(val, 1, h.bracket3(Ha, Hb, H.matrix.column(z)));
      for (std::size_t r = 0; r < n; ++r)
        out.payload()[z * n + r] += coeff * val[r];
    }
  }
  return out;
}

// ---- coboundary term enumeration ------------------------------------------

void for_each_coboundary_term(const ComplexContext& ctx, std::size_t p,
                              const TermSink& sink) {
  if (p < 1) throw UnsupportedDegreeError("term enumeration needs degree >= 1");
  const LYAlgebra& g = ctx.alg;
  const Representation& rep = ctx.rep;
  const std::size_t m = g.dim();
  const std::size_t P = wedge_count(m);
  const std::size_t q = p;  // number of wedge slots in the output f-block

  const auto pairs = wedge_pairs(m);

  std::vector<std::vector<Matrix>> D(m, std::vector<Matrix>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) D[i][j] = D_of(g, rep, i, j);

  // circ[u][v] = coordinates of (e_a ^ e_b) o (e_c ^ e_d) over wedge pairs,
  // where o is <<x,y,x'>> ^ y' + x' ^ <<x,y,y'>>.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> circ(
      P, std::vector<std::vector<std::pair<std::size_t, Rational>>>(P));
  for (std::size_t u = 0; u < P; ++u)
    for (std::size_t v = 0; v < P; ++v) {
      const auto [a, b] = pairs[u];
      const auto [c, d] = pairs[v];
      auto& terms = circ[u][v];
      auto add_wedge = [&](std::size_t s, std::size_t t, const Rational& co) {
        if (sgn(co) == 0 || s == t) return;
        if (s < t) terms.emplace_back(wedge_index(m, s, t), co);
        else terms.emplace_back(wedge_index(m, t, s), -co);
      };
      for (std::size_t s = 0; s < m; ++s) {
        add_wedge(s, d, g.d(a, b, c, s));  // <<e_a,e_b,e_c>> ^ e_d
        add_wedge(c, s, g.d(a, b, d, s));  // e_c ^ <<e_a,e_b,e_d>>
      }
    }

  const Rational sign_n = (q - 1) % 2 == 0 ? 1 : -1;  // (-1)^n, n = p-1

  std::vector<std::size_t> W(q);
  const std::size_t out_f_count = pow_sz(P, q);
  for (std::size_t wi = 0; wi < out_f_count; ++wi) {
    {  // decode digits, most significant first
      std::size_t rest = wi;
      for (std::size_t k = q; k-- > 0;) {
        W[k] = rest % P;
        rest /= P;
      }
    }
    const auto [a, b] = pairs[W[q - 1]];

    // index of the input tuple with digit k removed
    auto omit = [&](std::size_t k) {
      std::vector<std::size_t> t;
      t.reserve(q - 1);
      for (std::size_t i = 0; i < q; ++i)
        if (i != k) t.push_back(W[i]);
      return tuple_index(t, P);
    };
    // digit k removed and digit l replaced by wedge index w
    auto omit_replace = [&](std::size_t k, std::size_t l, std::size_t w) {
      std::vector<std::size_t> t;
      t.reserve(q - 1);
      for (std::size_t i = 0; i < q; ++i) {
        if (i == k) continue;
        t.push_back(i == l ? w : W[i]);
      }
      return tuple_index(t, P);
    };

    const std::size_t head = omit(q - 1);  // digits W[0..q-2]

    // delta_I into the output f-block at tuple W
    sink(false, wi, true, head * m + b, sign_n, &rep.rho[a]);
    sink(false, wi, true, head * m + a, -sign_n, &rep.rho[b]);
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& cv = g.c(a, b, k);
      if (sgn(cv) != 0) sink(false, wi, true, head * m + k, -sign_n * cv, nullptr);
    }
    for (std::size_t k = 0; k + 1 < q; ++k) {
      const auto [ak, bk] = pairs[W[k]];
      sink(false, wi, false, omit(k), k % 2 == 0 ? 1 : -1, &D[ak][bk]);
    }
    for (std::size_t k = 0; k < q; ++k)
      for (std::size_t l = k + 1; l < q; ++l) {
        const Rational base = k % 2 == 0 ? -1 : 1;  // (-1)^{k+1}, 1-based k
        for (const auto& [w, co] : circ[W[k]][W[l]])
          sink(false, wi, false, omit_replace(k, l, w), base * co, nullptr);
      }

    // delta_II into the output g-block at (W, z)
    for (std::size_t z = 0; z < m; ++z) {
      const std::size_t gout = wi * m + z;
      sink(true, gout, true, head * m + a, sign_n, &rep.mu[b][z]);
      sink(true, gout, true, head * m + b, -sign_n, &rep.mu[a][z]);
      for (std::size_t k = 0; k < q; ++k) {
        const auto [ak, bk] = pairs[W[k]];
        const std::size_t rest = omit(k);
        sink(true, gout, true, rest * m + z, k % 2 == 0 ? 1 : -1, &D[ak][bk]);
        for (std::size_t s = 0; s < m; ++s) {
          const Rational& dv = g.d(ak, bk, z, s);
          if (sgn(dv) != 0)
            sink(true, gout, true, rest * m + s,
                 (k % 2 == 0 ? -1 : 1) * dv, nullptr);
        }
      }
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = k + 1; l < q; ++l) {
          const Rational base = k % 2 == 0 ? -1 : 1;
          for (const auto& [w, co] : circ[W[k]][W[l]])
            sink(true, gout, true, omit_replace(k, l, w) * m + z, base * co,
                 nullptr);
        }
    }
  }
}

Cochain coboundary(const ComplexContext& ctx, const Cochain& c) {
  const std::size_t p = c.degree();
  if (p < 1) throw UnsupportedDegreeError("coboundary acts on degree >= 1");
  if (c.source_dim() != ctx.alg.dim() || c.target_dim() != ctx.rep.target_dim)
    throw DimensionError("cochain shape does not match the context");
  const std::size_t n = c.target_dim();
  Cochain out = Cochain::zero(p + 1, c.source_dim(), n);
  const std::size_t out_g_off = out.f_inputs() * n;

  for_each_coboundary_term(
      ctx, p,
      [&](bool out_g, std::size_t out_idx, bool in_g, std::size_t in_idx,
          const Rational& coeff, const Matrix* op) {
        Vec v = in_g ? c.g_at(in_idx) : c.f_at(in_idx);
        if (is_zero(v)) return;
        if (op) v = op->apply(v);
        const std::size_t base = (out_g ? out_g_off : 0) + out_idx * n;
        for (std::size_t r = 0; r < n; ++r) out.payload()[base + r] += coeff * v[r];
      });
  return out;
}

Matrix operator_matrix(const ComplexContext& ctx, std::size_t p) {
  const std::size_t m = ctx.alg.dim(), n = ctx.rep.target_dim;
  if (p == 0) {
    if (!ctx.crossed)
      throw MissingCrossedMapError(
          "degree-0 cochains exist only in a crossed-homomorphism complex");
    const std::size_t P = wedge_count(m);
    Matrix out(Cochain::payload_size(1, m, n), P);
    for (std::size_t w = 0; w < P; ++w) {
      Vec x(P);
      x[w] = 1;
      Cochain col = delta0(Cochain(0, m, n, std::move(x)), *ctx.crossed);
      for (std::size_t r = 0; r < out.rows(); ++r) out(r, w) = col.payload()[r];
    }
    return out;
  }
  if (p > 3)
    throw UnsupportedDegreeError("operator matrices are assembled for p <= 3");

  Matrix out(Cochain::payload_size(p + 1, m, n),
             Cochain::payload_size(p, m, n));
  const std::size_t in_g_off = p >= 2 ? pow_sz(wedge_count(m), p - 1) * n : 0;
  const std::size_t out_g_off = pow_sz(wedge_count(m), p) * n;

  for_each_coboundary_term(
      ctx, p,
      [&](bool out_g, std::size_t out_idx, bool in_g, std::size_t in_idx,
          const Rational& coeff, const Matrix* op) {
        const std::size_t rbase = (out_g ? out_g_off : 0) + out_idx * n;
        const std::size_t cbase = (in_g ? in_g_off : 0) + in_idx * n;
        if (op) {
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
              const Rational& v = (*op)(r, c);
              if (sgn(v) != 0) out(rbase + r, cbase + c) += coeff * v;
            }
        } else {
          for (std::size_t r = 0; r < n; ++r) out(rbase + r, cbase + r) += coeff;
        }
      });
  return out;
}

bool is_cocycle(const ComplexContext& ctx, const Cochain& c) {
  return is_zero(operator_matrix(ctx, c.degree()).apply(c.payload()));
}

bool is_coboundary(const ComplexContext& ctx, const Cochain& c) {
  if (c.degree() == 0) return is_zero(c.payload());
  return solve(operator_matrix(ctx, c.degree() - 1), c.payload()).has_value();
}

std::size_t cohomology_dim(const ComplexContext& ctx, std::size_t p) {
  if (p > 2)
    throw UnsupportedDegreeError("cohomology dimensions computed for p <= 2");
  if (p == 0) {
    Matrix m0 = operator_matrix(ctx, 0);  // throws without a crossed map
    return m0.cols() - rank(m0);
  }
  std::vector<Vec> cocycles = kernel_basis(operator_matrix(ctx, p));
  const bool has_lower = p >= 2 || ctx.crossed.has_value();
  if (!has_lower) return cocycles.size();
  Matrix lower = operator_matrix(ctx, p - 1);
  std::vector<Vec> boundaries;
  boundaries.reserve(lower.cols());
  for (std::size_t c = 0; c < lower.cols(); ++c)
    boundaries.push_back(lower.column(c));
  return quotient_dim(cocycles, boundaries);
}

Cochain pushforward(const CrossedMorphism& mor, const Cochain& c) {
  const std::size_t p = c.degree();
  if (p < 1)
    throw UnsupportedDegreeError("pushforward acts on cochains of degree >= 1");
  const std::size_t m = c.source_dim(), n = c.target_dim();
  if (mor.psi_g.rows() != m || mor.psi_h.rows() != n)
    throw DimensionError("morphism shape does not match the cochain");
  std::optional<Matrix> inv = inverse(mor.psi_g);
  if (!inv) throw NotInvertibleError("pushforward requires invertible psi_g");

  const std::size_t P = wedge_count(m);
  // Coordinates of psi_g^{-1}(e_i ^ e_j) over the wedge basis.
  std::vector<Vec> winv(P);
  const auto pairs = wedge_pairs(m);
  for (std::size_t w = 0; w < P; ++w)
    winv[w] = wedge_of(inv->column(pairs[w].first), inv->column(pairs[w].second));

  const std::size_t slots = p - 1;
  const std::size_t tuples = pow_sz(P, slots);

  Cochain out = Cochain::zero(p, m, n);
  const std::size_t g_off = out.f_inputs() * n;

  std::vector<std::size_t> digits(slots), vdig(slots);
  for (std::size_t t = 0; t < tuples; ++t) {
    {
      std::size_t rest = t;
      for (std::size_t k = slots; k-- > 0;) {
        digits[k] = rest % P;
        rest /= P;
      }
    }
    // enumerate all input tuples with the product of expansion coefficients
    std::function<void(std::size_t, const Rational&,
                       const std::function<void(std::size_t, const Rational&)>&)>
        expand = [&](std::size_t k, const Rational& coeff,
                     const std::function<void(std::size_t, const Rational&)>& use) {
          if (k == slots) {
            use(tuple_index(vdig, P), coeff);
            return;
          }
          const Vec& row = winv[digits[k]];
          for (std::size_t v = 0; v < P; ++v) {
            if (sgn(row[v]) == 0) continue;
            vdig[k] = v;
            expand(k + 1, coeff * row[v], use);
          }
        };

    if (p >= 2) {
      Vec acc(n);
      expand(0, 1, [&](std::size_t in_tuple, const Rational& coeff) {
        add_scaled(acc, coeff, c.f_at(in_tuple));
      });
      acc = mor.psi_h.apply(acc);
      for (std::size_t r = 0; r < n; ++r) out.payload()[t * n + r] = acc[r];
    }
    for (std::size_t z = 0; z < m; ++z) {
      Vec acc(n);
      expand(0, 1, [&](std::size_t in_tuple, const Rational& coeff) {
        const Vec zi = inv->column(z);
        for (std::size_t zz = 0; zz < m; ++zz) {
          if (sgn(zi[zz]) == 0) continue;
          add_scaled(acc, coeff * zi[zz], c.g_at(in_tuple * m + zz));
        }
      });
      acc = mor.psi_h.apply(acc);
      const std::size_t base = g_off + (t * m + z) * n;
      for (std::size_t r = 0; r < n; ++r) out.payload()[base + r] = acc[r];
    }
  }
  return out;
}

}  // namespace lyk
