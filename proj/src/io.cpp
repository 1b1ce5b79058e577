#include "lyk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lyk/cohomology.hpp"
#include "lyk/deformation.hpp"

namespace lyk {

namespace {

using nlohmann::json;

const std::set<std::string> kOps = {
    "validate-algebra",   "validate-rep",        "validate-action",
    "check-crossed",      "graph-check",         "rb-check",
    "semidirect",         "induced-rep",         "cohomology",
    "dsquared-check",     "nijenhuis-check",     "linear-deform-check",
    "formal-deform-check", "equivalence-check",  "obstruction",
    "extend"};

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, std::string("missing field '") + key + "'");
  return j[key];
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::size_t as_uint(const json& j, const std::string& path) {
  if (!(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

Rational rational_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "rationals must be strings like \"2\" or \"-1/3\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

// 1-based basis index from the file, converted to 0-based.
std::size_t index_at(const json& j, std::size_t dim, const std::string& path) {
  std::size_t v = as_uint(j, path);
  if (v < 1 || v > dim) fail(path, "basis index out of range 1.." + std::to_string(dim));
  return v - 1;
}

// Same, for object keys ("4" -> 3).
std::size_t index_key(const std::string& key, std::size_t dim,
                      const std::string& path) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    fail(path, "expected a basis index key");
  }
  if (pos != key.size()) fail(path, "expected a basis index key");
  if (v < 1 || v > dim) fail(path, "basis index out of range 1.." + std::to_string(dim));
  return v - 1;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                    const std::string& path) {
  if (!j.is_array() || j.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols)
      fail(rpath, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = rational_at(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LYAlgebra parse_algebra(const json& j, const std::string& path) {
  std::size_t m = as_uint(member(j, "dim", path), path + ".dim");
  std::vector<Rational> c(m * m * m), d(m * m * m * m);
  std::vector<char> cset(c.size(), 0), dset(d.size(), 0);

  auto put = [&](std::vector<Rational>& t, std::vector<char>& seen,
                 std::size_t idx, const Rational& v, const std::string& where) {
    if (seen[idx] && t[idx] != v)
      fail(where, "conflicting declarations for a mirrored structure constant");
    t[idx] = v;
    seen[idx] = 1;
  };

  if (j.contains("binary")) {
    const json& arr = j["binary"];
    if (!arr.is_array()) fail(path + ".binary", "expected an array");
    for (std::size_t e = 0; e < arr.size(); ++e) {
      std::string ep = path + ".binary[" + std::to_string(e) + "]";
      std::size_t i = index_at(member(arr[e], "i", ep), m, ep + ".i");
      std::size_t jj = index_at(member(arr[e], "j", ep), m, ep + ".j");
      const json& out = member(arr[e], "out", ep);
      if (!out.is_object()) fail(ep + ".out", "expected an object");
      for (const auto& [key, val] : out.items()) {
        std::string vp = ep + ".out." + key;
        std::size_t k = index_key(key, m, vp);
        Rational v = rational_at(val, vp);
        if (i == jj && sgn(v) != 0)
          fail(vp, "[e,e] must vanish (antisymmetry)");
        put(c, cset, (i * m + jj) * m + k, v, vp);
        put(c, cset, (jj * m + i) * m + k, -v, vp);
      }
    }
  }

  if (j.contains("ternary")) {
    const json& arr = j["ternary"];
    if (!arr.is_array()) fail(path + ".ternary", "expected an array");
    for (std::size_t e = 0; e < arr.size(); ++e) {
      std::string ep = path + ".ternary[" + std::to_string(e) + "]";
      std::size_t i = index_at(member(arr[e], "i", ep), m, ep + ".i");
      std::size_t jj = index_at(member(arr[e], "j", ep), m, ep + ".j");
      std::size_t k = index_at(member(arr[e], "k", ep), m, ep + ".k");
      const json& out = member(arr[e], "out", ep);
      if (!out.is_object()) fail(ep + ".out", "expected an object");
      for (const auto& [key, val] : out.items()) {
        std::string vp = ep + ".out." + key;
        std::size_t l = index_key(key, m, vp);
        Rational v = rational_at(val, vp);
        if (i == jj && sgn(v) != 0)
          fail(vp, "<<e,e,.>> must vanish (antisymmetry)");
        put(d, dset, ((i * m + jj) * m + k) * m + l, v, vp);
        put(d, dset, ((jj * m + i) * m + k) * m + l, -v, vp);
      }
    }
  }

  return LYAlgebra(m, std::move(c), std::move(d));
}

json algebra_json(const LYAlgebra& a) {
  std::size_t m = a.dim();
  json out;
  out["dim"] = m;
  json binary = json::array();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(a.c(i, j, k)) != 0)
          coeffs[std::to_string(k + 1)] = to_string(a.c(i, j, k));
      if (!coeffs.empty())
        binary.push_back({{"i", i + 1}, {"j", j + 1}, {"out", coeffs}});
    }
  if (!binary.empty()) out["binary"] = binary;
  json ternary = json::array();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        json coeffs = json::object();
        for (std::size_t l = 0; l < m; ++l)
          if (sgn(a.d(i, j, k, l)) != 0)
            coeffs[std::to_string(l + 1)] = to_string(a.d(i, j, k, l));
        if (!coeffs.empty())
          ternary.push_back(
              {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"out", coeffs}});
      }
  if (!ternary.empty()) out["ternary"] = ternary;
  return out;
}

ProblemFile parse_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  ProblemFile pf;

  if (doc.contains("algebras")) {
    const json& algs = doc["algebras"];
    if (!algs.is_object()) throw ParseError("algebras: expected an object");
    for (const auto& [name, body] : algs.items())
      pf.algebras.emplace(name, parse_algebra(body, "algebras." + name));
  }

  auto algebra_dim = [&](const json& j, const char* key,
                         const std::string& path) {
    std::string name = as_string(member(j, key, path), path + "." + key);
    auto it = pf.algebras.find(name);
    if (it == pf.algebras.end())
      throw ReferenceError(path + "." + key + ": unknown algebra '" + name + "'");
    return std::pair<std::string, std::size_t>(name, it->second.dim());
  };

  if (doc.contains("actions")) {
    const json& acts = doc["actions"];
    if (!acts.is_object()) throw ParseError("actions: expected an object");
    for (const auto& [name, body] : acts.items()) {
      std::string path = "actions." + name;
      auto [src, m] = algebra_dim(body, "source", path);
      auto [tgt, n] = algebra_dim(body, "target", path);
      const json& rho = member(body, "rho", path);
      if (!rho.is_array() || rho.size() != m)
        fail(path + ".rho", "expected " + std::to_string(m) + " matrices");
      const json& mu = member(body, "mu", path);
      if (!mu.is_array() || mu.size() != m)
        fail(path + ".mu", "expected " + std::to_string(m) + " rows of matrices");
      Representation rep;
      rep.source_dim = m;
      rep.target_dim = n;
      for (std::size_t i = 0; i < m; ++i)
        rep.rho.push_back(
            parse_matrix(rho[i], n, n, path + ".rho[" + std::to_string(i) + "]"));
      for (std::size_t i = 0; i < m; ++i) {
        std::string rp = path + ".mu[" + std::to_string(i) + "]";
        if (!mu[i].is_array() || mu[i].size() != m)
          fail(rp, "expected " + std::to_string(m) + " matrices");
        rep.mu.emplace_back();
        for (std::size_t j = 0; j < m; ++j)
          rep.mu.back().push_back(
              parse_matrix(mu[i][j], n, n, rp + "[" + std::to_string(j) + "]"));
      }
      pf.actions.emplace(name, NamedAction{src, tgt, std::move(rep)});
    }
  }

  if (doc.contains("maps")) {
    const json& maps = doc["maps"];
    if (!maps.is_object()) throw ParseError("maps: expected an object");
    for (const auto& [name, body] : maps.items()) {
      std::string path = "maps." + name;
      auto [dom, m] = algebra_dim(body, "domain", path);
      auto [cod, n] = algebra_dim(body, "codomain", path);
      pf.maps.emplace(name,
                      NamedMap{dom, cod,
                               parse_matrix(member(body, "entries", path), n, m,
                                            path + ".entries")});
    }
  }

  if (doc.contains("tasks")) {
    const json& tasks = doc["tasks"];
    if (!tasks.is_object()) throw ParseError("tasks: expected an object");
    for (const auto& [name, body] : tasks.items()) {
      std::string path = "tasks." + name;
      if (!body.is_object()) fail(path, "expected an object");
      TaskSpec spec;
      spec.op = body.contains("op") ? as_string(body["op"], path + ".op") : name;
      if (!kOps.count(spec.op)) fail(path, "unknown operation '" + spec.op + "'");
      spec.params = body;
      spec.params.erase("op");
      pf.tasks.emplace(name, std::move(spec));
    }
  }

  for (const auto& [key, _] : doc.items())
    if (key != "algebras" && key != "actions" && key != "maps" && key != "tasks")
      throw ParseError("unknown top-level key '" + key + "'");

  return pf;
}

// ---- task plumbing -------------------------------------------------------

const LYAlgebra& find_algebra(const ProblemFile& pf, const std::string& name) {
  auto it = pf.algebras.find(name);
  if (it == pf.algebras.end()) throw ReferenceError("unknown algebra '" + name + "'");
  return it->second;
}

const NamedAction& find_action(const ProblemFile& pf, const std::string& name) {
  auto it = pf.actions.find(name);
  if (it == pf.actions.end()) throw ReferenceError("unknown action '" + name + "'");
  return it->second;
}

const NamedMap& find_map(const ProblemFile& pf, const std::string& name) {
  auto it = pf.maps.find(name);
  if (it == pf.maps.end()) throw ReferenceError("unknown map '" + name + "'");
  return it->second;
}

// Name parameter with a "sole candidate" default.
template <class Pool>
std::string pick_name(const json& params, const char* key, const Pool& pool,
                      const char* kind) {
  if (params.contains(key)) return as_string(params[key], std::string("parameter ") + key);
  if (pool.size() == 1) return pool.begin()->first;
  throw ReferenceError(std::string("parameter '") + key + "' is required (file declares " +
                       std::to_string(pool.size()) + " " + kind + ")");
}

std::string need_name(const json& params, const char* key) {
  if (!params.contains(key))
    throw ReferenceError(std::string("parameter '") + key + "' is required");
  return as_string(params[key], std::string("parameter ") + key);
}

std::size_t need_uint(const json& params, const char* key) {
  if (!params.contains(key))
    throw ParseError(std::string("parameter '") + key + "' is required");
  return as_uint(params[key], std::string("parameter ") + key);
}

ActionContext make_context(const ProblemFile& pf, const NamedAction& a) {
  return ActionContext(find_algebra(pf, a.source), find_algebra(pf, a.target),
                       a.rep);
}

Cochain wedge_param(const json& params, const char* key, std::size_t m,
                    std::size_t n) {
  if (!params.contains(key))
    throw ParseError(std::string("parameter '") + key + "' is required");
  const json& arr = params[key];
  std::size_t P = wedge_count(m);
  if (!arr.is_array() || arr.size() != P)
    throw ParseError(std::string("parameter '") + key + "' must list " +
                     std::to_string(P) + " wedge coordinates");
  Vec payload(P);
  for (std::size_t i = 0; i < P; ++i)
    payload[i] = rational_at(arr[i], std::string("parameter ") + key);
  return Cochain(0, m, n, std::move(payload));
}

std::vector<Matrix> map_list(const ProblemFile& pf, const json& params,
                             const char* key) {
  if (!params.contains(key) || !params[key].is_array())
    throw ParseError(std::string("parameter '") + key + "' must be an array of map names");
  std::vector<Matrix> out;
  for (const json& e : params[key])
    out.push_back(find_map(pf, as_string(e, std::string("parameter ") + key)).matrix);
  return out;
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    os << "  " << vec_str(row) << "\n";
  }
  return os.str();
}

TaskResult from_report(const Report& r) {
  return {r.to_text(), r.empty() ? 0 : 1};
}

TaskResult dispatch(const ProblemFile& pf, const TaskSpec& spec) {
  const json& p = spec.params;
  const std::string& op = spec.op;

  if (op == "validate-algebra") {
    const LYAlgebra& a =
        find_algebra(pf, pick_name(p, "algebra", pf.algebras, "algebras"));
    return from_report(check_axioms(a));
  }

  // Everything else is rooted at an action.
  const NamedAction& na =
      find_action(pf, pick_name(p, "action", pf.actions, "actions"));
  const LYAlgebra& g = find_algebra(pf, na.source);
  const LYAlgebra& h = find_algebra(pf, na.target);

  if (op == "validate-rep") return from_report(check_representation(g, na.rep));

  if (op == "validate-action") {
    Report r = check_axioms(g);
    r.merge(check_axioms(h));
    r.merge(check_representation(g, na.rep));
    r.merge(check_action(g, h, na.rep));
    return from_report(r);
  }

  if (op == "semidirect") {
    LYAlgebra sd = semidirect(g, h, na.rep);
    std::ostringstream os;
    os << "semidirect product, dim = " << sd.dim() << "\n";
    for (std::size_t i = 0; i < sd.dim(); ++i)
      for (std::size_t j = i + 1; j < sd.dim(); ++j) {
        Vec v = sd.bracket2_basis(i, j);
        if (!is_zero(v))
          os << "[e" << i + 1 << ",e" << j + 1 << "] = " << vec_str(v) << "\n";
      }
    for (std::size_t i = 0; i < sd.dim(); ++i)
      for (std::size_t j = i + 1; j < sd.dim(); ++j)
        for (std::size_t k = 0; k < sd.dim(); ++k) {
          Vec v = sd.bracket3_basis(i, j, k);
          if (!is_zero(v))
            os << "<<e" << i + 1 << ",e" << j + 1 << ",e" << k + 1
               << ">> = " << vec_str(v) << "\n";
        }
    Report r = check_axioms(sd);
    os << r.to_text();
    return {os.str(), r.empty() ? 0 : 1};
  }

  ActionContext ctx = make_context(pf, na);

  if (op == "rb-check") {
    const NamedMap& t = find_map(pf, need_name(p, "map"));
    Rational weight = p.contains("weight")
                          ? rational_at(p["weight"], "parameter weight")
                          : Rational(1);
    return from_report(is_relative_rb(t.matrix, weight, g, h, na.rep));
  }

  if (op == "formal-deform-check" || op == "obstruction" || op == "extend") {
    DeformationSeries s(ctx, map_list(pf, p, "terms"));
    if (op == "formal-deform-check") return from_report(is_formal_deformation(s));
    if (op == "obstruction") {
      Cochain ob = obstruction(s);
      ComplexContext cc =
          ComplexContext::for_crossed(CrossedMap(ctx, s.terms[0]));
      std::ostringstream os;
      os << "obstruction payload = " << vec_str(ob.payload()) << "\n";
      os << "cocycle: " << (is_cocycle(cc, ob) ? "yes" : "no") << "\n";
      os << "coboundary: " << (is_coboundary(cc, ob) ? "yes" : "no") << "\n";
      return {os.str(), 0};
    }
    std::optional<Matrix> k = extend(s);
    if (!k)
      return {"violated: obstruction class is nontrivial; no extension exists\n",
              1};
    return {"ok: extension found\nnext term =\n" + matrix_str(*k), 0};
  }

  if (op == "equivalence-check") {
    DeformationSeries s1(ctx, map_list(pf, p, "series1"));
    DeformationSeries s2(ctx, map_list(pf, p, "series2"));
    Cochain x = wedge_param(p, "wedge", g.dim(), h.dim());
    return from_report(are_equivalent_formal(s1, s2, x,
                                             map_list(pf, p, "phi"),
                                             map_list(pf, p, "vphi")));
  }

  // The rest revolve around one crossed-map candidate.
  bool has_crossed = p.contains("crossed") || pf.maps.size() == 1;
  auto crossed_map = [&]() {
    return CrossedMap(
        ctx, find_map(pf, pick_name(p, "crossed", pf.maps, "maps")).matrix);
  };

  if (op == "check-crossed") return from_report(is_crossed_hom(crossed_map()));

  if (op == "graph-check") {
    bool ok = check_graph_equivalence(crossed_map());
    if (ok) return {"ok: crossed equations agree with the graph criterion\n", 0};
    return {"violated: crossed equations disagree with the graph criterion\n", 1};
  }

  if (op == "induced-rep") {
    CrossedMap cm = crossed_map();
    Report cr = is_crossed_hom(cm);
    if (!cr.empty()) return {cr.to_text(), 1};
    Representation ind = induced_rep(cm);
    Report r = check_representation(g, ind);
    std::string text = "induced representation of dim " +
                       std::to_string(g.dim()) + " algebra on Q^" +
                       std::to_string(h.dim()) + "\n" + r.to_text();
    return {text, r.empty() ? 0 : 1};
  }

  if (op == "cohomology" || op == "dsquared-check") {
    ComplexContext cc = has_crossed
                            ? ComplexContext::for_crossed(crossed_map())
                            : ComplexContext::plain(g, na.rep);
    std::size_t degree = need_uint(p, "degree");
    if (op == "cohomology") {
      std::size_t dim = cohomology_dim(cc, degree);
      return {"dim H^" + std::to_string(degree) + " = " + std::to_string(dim) +
                  "\n",
              0};
    }
    Matrix prod = operator_matrix(cc, degree + 1) * operator_matrix(cc, degree);
    if (prod.is_zero())
      return {"ok: delta^2 = 0 at degree " + std::to_string(degree) + "\n", 0};
    return {"violated: delta^2 != 0 at degree " + std::to_string(degree) + "\n",
            1};
  }

  if (op == "nijenhuis-check") {
    CrossedMap cm = crossed_map();
    Cochain x = wedge_param(p, "wedge", g.dim(), h.dim());
    return from_report(is_nijenhuis(x, cm));
  }

  if (op == "linear-deform-check") {
    CrossedMap cm = crossed_map();
    const NamedMap& k = find_map(pf, need_name(p, "map"));
    return from_report(is_linear_deformation(cm, k.matrix));
  }

  throw UnknownTaskError("unknown task '" + op + "'");
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_document(doc);
}

ProblemFile parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string serialize_problem(const ProblemFile& pf) {
  json doc = json::object();
  json algs = json::object();
  for (const auto& [name, a] : pf.algebras) algs[name] = algebra_json(a);
  doc["algebras"] = algs;

  json acts = json::object();
  for (const auto& [name, a] : pf.actions) {
    json body;
    body["source"] = a.source;
    body["target"] = a.target;
    json rho = json::array();
    for (const Matrix& r : a.rep.rho) rho.push_back(matrix_json(r));
    body["rho"] = rho;
    json mu = json::array();
    for (const auto& row : a.rep.mu) {
      json jrow = json::array();
      for (const Matrix& mm : row) jrow.push_back(matrix_json(mm));
      mu.push_back(jrow);
    }
    body["mu"] = mu;
    acts[name] = body;
  }
  doc["actions"] = acts;

  json maps = json::object();
  for (const auto& [name, m] : pf.maps)
    maps[name] = {{"domain", m.domain},
                  {"codomain", m.codomain},
                  {"entries", matrix_json(m.matrix)}};
  doc["maps"] = maps;

  json tasks = json::object();
  for (const auto& [name, t] : pf.tasks) {
    json body = t.params;
    body["op"] = t.op;
    tasks[name] = body;
  }
  doc["tasks"] = tasks;

  return doc.dump(2) + "\n";
}

TaskResult run_task(const ProblemFile& pf, const std::string& task_name,
                    const nlohmann::json& overrides) {
  TaskSpec spec;
  auto it = pf.tasks.find(task_name);
  if (it != pf.tasks.end()) {
    spec = it->second;
  } else {
    if (!kOps.count(task_name))
      throw UnknownTaskError("unknown task '" + task_name + "'");
    spec.op = task_name;
    spec.params = json::object();
  }
  for (const auto& [key, value] : overrides.items()) spec.params[key] = value;

  try {
    return dispatch(pf, spec);
  } catch (const AntisymmetryError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const NotLieAlgebraError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const InvalidAlgebraError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const InvalidActionError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const NotCrossedError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const NotInvertibleError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const InvalidDeformationError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  } catch (const NotNijenhuisError& e) {
    return {std::string("violated: ") + e.what() + "\n", 1};
  }
}

ProblemFile bundled_suite() {
  ProblemFile pf;
  LYAlgebra k4 = k4_example();
  pf.algebras.emplace("k4", k4);
  pf.actions.emplace("adjoint", NamedAction{"k4", "k4", adjoint_rep(k4)});

  Matrix h0(4, 4);
  h0(2, 0) = 1;
  h0(3, 1) = 1;
  Matrix k1(4, 4);
  k1(3, 0) = 1;
  pf.maps.emplace("H0", NamedMap{"k4", "k4", h0});
  pf.maps.emplace("K1", NamedMap{"k4", "k4", k1});
  pf.maps.emplace("id4", NamedMap{"k4", "k4", Matrix::identity(4)});
  pf.maps.emplace("zero4", NamedMap{"k4", "k4", Matrix(4, 4)});

  using nlohmann::json;
  json wedge34 = json::array({"0", "0", "0", "0", "0", "1"});
  auto add = [&](const char* op, json params) {
    pf.tasks.emplace(op, TaskSpec{op, std::move(params)});
  };
  add("validate-algebra", {{"algebra", "k4"}});
  add("validate-rep", {{"action", "adjoint"}});
  add("validate-action", {{"action", "adjoint"}});
  add("check-crossed", {{"action", "adjoint"}, {"crossed", "H0"}});
  add("graph-check", {{"action", "adjoint"}, {"crossed", "H0"}});
  add("rb-check", {{"action", "adjoint"}, {"map", "zero4"}, {"weight", "1"}});
  add("semidirect", {{"action", "adjoint"}});
  add("induced-rep", {{"action", "adjoint"}, {"crossed", "H0"}});
  add("cohomology", {{"action", "adjoint"}, {"crossed", "H0"}, {"degree", 1}});
  add("dsquared-check",
      {{"action", "adjoint"}, {"crossed", "H0"}, {"degree", 1}});
  add("nijenhuis-check",
      {{"action", "adjoint"}, {"crossed", "H0"}, {"wedge", wedge34}});
  add("linear-deform-check",
      {{"action", "adjoint"}, {"crossed", "H0"}, {"map", "K1"}});
  add("formal-deform-check",
      {{"action", "adjoint"}, {"terms", json::array({"H0", "K1"})}});
  add("equivalence-check", {{"action", "adjoint"},
                            {"series1", json::array({"H0", "zero4"})},
                            {"series2", json::array({"H0", "zero4"})},
                            {"wedge", wedge34},
                            {"phi", json::array({"id4", "zero4"})},
                            {"vphi", json::array({"id4", "zero4"})}});
  add("obstruction",
      {{"action", "adjoint"}, {"terms", json::array({"H0", "K1"})}});
  add("extend", {{"action", "adjoint"}, {"terms", json::array({"H0", "K1"})}});
  return pf;
}

}  // namespace lyk
