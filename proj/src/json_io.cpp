// SPDX-License-Identifier: Apache-2.0
#include "confalg/json_io.hpp"

#include <sstream>

namespace confalg::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& expected) {
  throw ParseError("at " + path + ": expected " + expected);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "a value (missing field)");
  return *it;
}

unsigned unsigned_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "a non-negative integer");
  return j.get<unsigned>();
}

std::string string_from(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "a string");
  return j.get<std::string>();
}

const Json& array_from(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "an array");
  return j;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t unit_index(const Json& j, const std::string& path, std::size_t n) {
  const unsigned v = unsigned_from(j, path);
  if (v < 1 || v > n) fail(path, "a 1-based index in 1.." + std::to_string(n));
  return v - 1;
}

Algebra algebra_from(const Json& j, const std::string& path) {
  const std::string name = j.contains("algebra") ? string_from(j["algebra"], path + ".algebra") : "gc";
  if (name == "vir") return Algebra::vir();
  if (name == "hv") return Algebra::hv();
  if (name != "gc") fail(path + ".algebra", "one of \"gc\", \"vir\", \"hv\"");
  const unsigned n = unsigned_from(field(j, "N", path), path + ".N");
  if (n == 0) fail(path + ".N", "N ≥ 1");
  return Algebra::gc(n);
}

ConformalModule recipe_from(const Json& j, const std::string& path, const Algebra& alg) {
  const std::string kind = string_from(field(j, "kind", path), path + ".kind");
  auto need = [&](AlgebraKind k, const char* name) {
    if (alg.kind != k) fail(path + ".kind", std::string("a recipe valid for the ") + alg.name() + " algebra (" + kind +
                                                " needs " + name + ")");
  };
  auto sc = [&](const char* key) { return scalar_from(field(j, key, path), path + "." + key); };
  if (kind == "vir_module") {
    need(AlgebraKind::Vir, "vir");
    return ConformalModule::vir_module(sc("delta"), sc("alpha"));
  }
  if (kind == "hv_module") {
    need(AlgebraKind::HV, "hv");
    return ConformalModule::hv_module(sc("delta"), sc("alpha"), sc("beta"));
  }
  if (kind == "gc_standard") {
    need(AlgebraKind::Gc, "gc");
    return ConformalModule::gc_standard(alg.N, sc("alpha"));
  }
  if (kind == "gc_dual") {
    need(AlgebraKind::Gc, "gc");
    return ConformalModule::gc_dual(alg.N, sc("alpha"));
  }
  if (kind == "direct_sum") {
    const Json& parts = array_from(field(j, "parts", path), path + ".parts");
    if (parts.empty()) fail(path + ".parts", "a non-empty array");
    std::vector<ConformalModule> ms;
    for (std::size_t i = 0; i < parts.size(); ++i) ms.push_back(recipe_from(parts[i], idx(path + ".parts", i), alg));
    return ConformalModule::direct_sum(ms);
  }
  if (kind == "basis_change") {
    const ConformalModule inner = recipe_from(field(j, "inner", path), path + ".inner", alg);
    return ConformalModule::basis_change(inner, qmatrix_from(field(j, "U", path), path + ".U"));
  }
  if (kind == "dual") {
    return ConformalModule::dual(recipe_from(field(j, "inner", path), path + ".inner", alg));
  }
  if (kind == "explicit") {
    const std::size_t rank = unsigned_from(field(j, "rank", path), path + ".rank");
    std::optional<unsigned> n_max;
    if (j.contains("n_max")) n_max = unsigned_from(j["n_max"], path + ".n_max");
    const Json& table = array_from(field(j, "table", path), path + ".table");
    ActionTable t;
    for (std::size_t e = 0; e < table.size(); ++e) {
      const std::string ep = idx(path + ".table", e);
      const unsigned n = unsigned_from(field(table[e], "n", ep), ep + ".n");
      std::size_t ui = 0, uj = 0;
      if (table[e].contains("unit")) {
        const Json& u = table[e]["unit"];
        if (!u.is_array() || u.size() != 2) fail(ep + ".unit", "a pair [i, j]");
        ui = unit_index(u[0], ep + ".unit[0]", alg.N);
        uj = unit_index(u[1], ep + ".unit[1]", alg.N);
      } else if (alg.kind == AlgebraKind::Gc) {
        fail(ep + ".unit", "a pair [i, j]");
      }
      PolyMatrix f = polymatrix_from(field(table[e], "F", ep), ep + ".F");
      if (f.rows() != rank || f.cols() != rank) fail(ep + ".F", "a " + std::to_string(rank) + "×" + std::to_string(rank) + " matrix");
      if (!t.emplace(Generator{n, ui, uj}, std::move(f)).second) fail(ep, "a generator not listed before");
    }
    try {
      return ConformalModule::explicit_table(alg, rank, n_max, std::move(t));
    } catch (const InvalidArgument& e) {
      fail(path, std::string("a valid explicit table (") + e.what() + ")");
    }
  }
  fail(path + ".kind", "one of vir_module, hv_module, gc_standard, gc_dual, direct_sum, basis_change, explicit, dual");
}

std::string unit_label(std::size_t N, unsigned n, std::size_t i, std::size_t j) {
  std::string s = "J^" + std::to_string(n);
  if (N > 1) s += "_{E" + std::to_string(i + 1) + (N > 9 ? "," : "") + std::to_string(j + 1) + "}";
  return s;
}

}  // namespace

Scalar scalar_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(path, "a rational string \"p/q\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError&) {
    fail(path, "a rational string \"p/q\", got \"" + j.get<std::string>() + "\"");
  }
}

MPoly mpoly_from(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return MPoly(scalar_from(j, path));
  if (!j.is_array()) fail(path, "a polynomial: list of [e∂, eλ, eμ, \"p/q\"]");
  MPoly p;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = idx(path, t);
    const Json& rec = j[t];
    if (!rec.is_array() || rec.size() != 4) fail(tp, "a term [e∂, eλ, eμ, \"p/q\"]");
    const Exponents e{unsigned_from(rec[0], idx(tp, 0)), unsigned_from(rec[1], idx(tp, 1)),
                      unsigned_from(rec[2], idx(tp, 2))};
    p += MPoly::monomial(e, scalar_from(rec[3], idx(tp, 3)));
  }
  return p;
}

namespace {

template <class T, class F>
Matrix<T> grid_from(const Json& j, const std::string& path, F&& read) {
  if (!j.is_array() || j.empty()) fail(path, "a non-empty matrix (array of rows)");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(idx(path, 0), "a non-empty row");
  const std::size_t cols = j[0].size();
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(idx(path, r), "a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read(j[r][c], idx(idx(path, r), c));
  }
  return m;
}

}  // namespace

QMatrix qmatrix_from(const Json& j, const std::string& path) { return grid_from<Scalar>(j, path, scalar_from); }

PolyMatrix polymatrix_from(const Json& j, const std::string& path) {
  return grid_from<MPoly>(j, path, mpoly_from);
}

GcElement element_from(const Json& j, const std::string& path) {
  const unsigned n = unsigned_from(field(j, "N", path), path + ".N");
  if (n == 0) fail(path + ".N", "N ≥ 1");
  GcValue v(n);
  const Json& terms = array_from(field(j, "terms", path), path + ".terms");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = idx(path + ".terms", t);
    const unsigned deg = unsigned_from(field(terms[t], "n", tp), tp + ".n");
    const Json& entries = array_from(field(terms[t], "entries", tp), tp + ".entries");
    PolyMatrix m(n, n);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string ep = idx(tp + ".entries", e);
      if (!entries[e].is_array() || entries[e].size() != 3) fail(ep, "an entry [i, j, polynomial]");
      const std::size_t i = unit_index(entries[e][0], idx(ep, 0), n);
      const std::size_t jj = unit_index(entries[e][1], idx(ep, 1), n);
      const MPoly p = mpoly_from(entries[e][2], idx(ep, 2));
      if (!p.only_uses({Var::D})) fail(idx(ep, 2), "a polynomial in ∂ only");
      m(i, jj) += p;
    }
    v.add(deg, m);
  }
  return GcElement(v);
}

ConformalModule module_from(const Json& j, const std::string& path) {
  const Algebra alg = algebra_from(j, path);
  ConformalModule m = recipe_from(field(j, "recipe", path), path + ".recipe", alg);
  if (j.contains("basis_change")) {
    m = ConformalModule::basis_change(m, qmatrix_from(j["basis_change"], path + ".basis_change"));
  }
  return m;
}

CanonicalPair pair_from(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError(what + ": expected \"a,b\", got \"" + text + "\"");
  try {
    return {Scalar::parse(text.substr(0, comma)), Scalar::parse(text.substr(comma + 1))};
  } catch (const ParseError&) {
    throw ParseError(what + ": expected two rationals \"a,b\", got \"" + text + "\"");
  }
}

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const MPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e[0], e[1], e[2], c.str()}));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const GcValue& g) {
  Json terms = Json::array();
  for (const auto& [n, m] : g.terms()) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) entries.push_back(Json::array({i + 1, j + 1, to_json(m(i, j))}));
    terms.push_back(Json{{"n", n}, {"entries", entries}});
  }
  return Json{{"N", g.N()}, {"terms", terms}};
}

Json to_json(const RegularityReport& r) {
  Json out{{"regular", r.regular}};
  Json w = Json::array();
  for (const auto& x : r.weights) w.push_back(Json::array({x.delta.str(), x.alpha.str()}));
  out["weights"] = w;
  if (r.offending) {
    out["offending"] = Json{{"row", r.offending->row + 1},
                            {"col", r.offending->col + 1},
                            {"entry", r.offending->entry.str()},
                            {"reason", r.offending->reason}};
  }
  out["action"] = to_json(r.action);
  return out;
}

Json to_json(const WeightProduct& w) {
  Json f = Json::array();
  for (const auto& x : w.factors) {
    f.push_back(Json{{"element", x.element + 1}, {"basis_index", x.basis_index + 1}, {"delta", x.delta.str()}});
  }
  return Json{{"p", w.value.str()}, {"factors", f}};
}

Json to_json(const DecompositionReport& r) {
  Json s = Json::array();
  for (const auto& x : r.summands) {
    s.push_back(Json{{"kind", kind_name(x.kind)}, {"alpha", x.alpha.str()}, {"mult", x.mult}});
  }
  Json phis = Json::array();
  for (const auto& p : r.phi) {
    Json vals = Json::array();
    for (std::size_t i = 0; i < p.N; ++i)
      for (std::size_t j = 0; j < p.N; ++j) vals.push_back(Json{{"unit", {i + 1, j + 1}}, {"value", to_json(p.at(i, j))}});
    phis.push_back(Json{{"block", p.block}, {"kind", p.anti ? "anti-homomorphism" : "homomorphism"}, {"values", vals}});
  }
  return Json{{"summands", s},
              {"basis_change", to_json(r.basis_change)},
              {"verified_n_max", r.verified_n_max},
              {"phi", phis},
              {"transcript", r.transcript}};
}

Json to_json(const ModuleCheck& c) {
  Json f = Json::array();
  for (const auto& w : c.failures) {
    f.push_back(Json{{"axiom", w.axiom},
                     {"m", w.m},
                     {"n", w.n},
                     {"A", {w.a.i + 1, w.a.j + 1}},
                     {"B", {w.b.i + 1, w.b.j + 1}},
                     {"residual", to_json(w.residual)}});
  }
  return Json{{"ok", c.ok}, {"pairs_checked", c.pairs_checked}, {"pairs_skipped", c.pairs_skipped}, {"failures", f}};
}

Json to_json(const GridReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(Json{{"element", to_json(c.element)}, {"reason", c.reason}});
  return Json{{"N", r.N},
              {"poly_deg_bound", r.poly_deg_bound},
              {"candidates", r.candidates},
              {"virasoro", r.virasoro},
              {"standard", r.standard},
              {"nonstandard", r.nonstandard},
              {"counterexamples", ce}};
}

Json module_tables(const ConformalModule& m, unsigned n_max) {
  const Algebra& alg = m.algebra();
  unsigned top = n_max;
  if (m.cutoff()) top = std::min(top, *m.cutoff());
  Json table = Json::array();
  for (const auto& g : m.generators(alg.kind == AlgebraKind::Gc ? top : 1)) {
    const PolyMatrix f = m.act_unit(g);
    if (f.is_zero()) continue;
    table.push_back(Json{{"n", g.n}, {"unit", {g.i + 1, g.j + 1}}, {"F", to_json(f)}});
  }
  Json recipe{{"kind", "explicit"}, {"rank", m.rank()}};
  if (alg.kind == AlgebraKind::Gc) recipe["n_max"] = top;
  recipe["table"] = table;
  Json out{{"algebra", alg.name()}};
  if (alg.kind == AlgebraKind::Gc) out["N"] = alg.N;
  out["recipe"] = recipe;
  return out;
}

std::string pretty(const GcValue& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, m] : g.terms()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const MPoly& p = m(i, j);
        if (!(p == MPoly(1))) os << "(" << p.str() << ")";
        os << unit_label(g.N(), n, i, j);
      }
  }
  return first ? "0" : os.str();
}

}  // namespace confalg::json_io
