// SPDX-License-Identifier: Apache-2.0
#include "confalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "confalg/json_io.hpp"

namespace confalg::cli {

namespace {

using json_io::Json;

struct Outcome {
  Json result;
  int code = kSuccess;
};

/// Inputs read so far, hashed into the report digest.
class Inputs {
 public:
  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    blob_ += "file:" + std::to_string(text.size()) + ":" + text;
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(path + ": invalid JSON (" + e.what() + ")");
    }
  }
  void option(const std::string& name, const std::string& value) {
    blob_ += "opt:" + name + "=" + value + ";";
  }
  std::string digest(const std::string& verb) const {
    const std::string data = "verb:" + verb + ";" + blob_;
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return hex.str();
  }

 private:
  std::string blob_;
};

// Re-throws parse errors with the file name in front.
template <class F>
auto in_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

GcElement load_element(Inputs& in, const std::string& path) {
  const Json j = in.load(path);
  return in_file(path, [&] { return json_io::element_from(j, "$"); });
}

ConformalModule load_module(Inputs& in, const std::string& path) {
  const Json j = in.load(path);
  return in_file(path, [&] { return json_io::module_from(j, "$"); });
}

Json certificate_json(const VirasoroCertificate& c) {
  Json out{{"is_virasoro", c.is_virasoro}};
  out["degree"] = c.degree ? Json(*c.degree) : Json(nullptr);
  out["is_standard"] = c.is_standard ? Json(*c.is_standard) : Json(nullptr);
  out["residual"] = json_io::to_json(c.residual);
  out["residual_pretty"] = json_io::pretty(c.residual);
  return out;
}

std::vector<QMatrix> matrices(const Json& j, const char* key, const std::string& path) {
  std::vector<QMatrix> out;
  if (!j.contains(key)) return out;
  const Json& a = j[key];
  if (!a.is_array()) throw ParseError("at " + path + "." + key + ": expected an array of matrices");
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(json_io::qmatrix_from(a[i], path + "." + key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<Scalar> scalars(const Json& j, const char* key, const std::string& path) {
  std::vector<Scalar> out;
  if (!j.contains(key)) return out;
  const Json& a = j[key];
  if (!a.is_array()) throw ParseError("at " + path + "." + key + ": expected an array of rationals");
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(json_io::scalar_from(a[i], path + "." + key + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const Json& req(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("at $.") + key + ": expected a value (missing field)");
  return j[key];
}

GcElement construct(const Json& j) {
  const std::string kind = req(j, "constructor").is_string() ? req(j, "constructor").get<std::string>() : "";
  auto sc = [&](const char* key) { return json_io::scalar_from(req(j, key), std::string("$.") + key); };
  auto mat = [&](const char* key) { return json_io::qmatrix_from(req(j, key), std::string("$.") + key); };
  if (kind == "gc1_virasoro") return make_gc1_virasoro(sc("a"), sc("b"));
  if (kind == "canonical") {
    const Json& n = req(j, "N");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw ParseError("at $.N: expected an integer ≥ 1");
    return canonical_virasoro(n.get<std::size_t>(), sc("a"), sc("b"));
  }
  if (kind == "standard_deg1") {
    const Json& f = req(j, "form");
    if (!f.is_number_integer() || (f.get<int>() != 1 && f.get<int>() != 2)) {
      throw ParseError("at $.form: expected 1 or 2");
    }
    std::optional<Scalar> b;
    if (j.contains("b")) b = sc("b");
    return make_standard_deg1(f.get<int>(), sc("a"), b, mat("A"), mat("B"));
  }
  if (kind == "standard_higher") {
    std::vector<HigherTerm> terms;
    if (j.contains("terms")) {
      const Json& t = j["terms"];
      if (!t.is_array()) throw ParseError("at $.terms: expected an array");
      for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string p = "$.terms[" + std::to_string(i) + "]";
        const Json& x = t[i];
        if (!x.is_object() || !x.contains("index") || !x["index"].is_number_integer() || x["index"].get<long long>() < 2) {
          throw ParseError("at " + p + ".index: expected an integer ≥ 2");
        }
        if (!x.contains("a") || !x.contains("B")) throw ParseError("at " + p + ": expected fields a and B");
        terms.push_back({x["index"].get<unsigned>(), json_io::scalar_from(x["a"], p + ".a"),
                         json_io::qmatrix_from(x["B"], p + ".B")});
      }
    }
    return make_standard_higher(mat("A"), terms);
  }
  if (kind == "nonstandard") {
    const Json& k = req(j, "kind");
    if (!k.is_string()) throw ParseError("at $.kind: expected one of T1, T2, T3, T4");
    NonstandardKind nk;
    try {
      nk = parse_nonstandard_kind(k.get<std::string>());
    } catch (const Error&) {
      throw ParseError("at $.kind: expected one of T1, T2, T3, T4");
    }
    NonstandardParams p;
    p.A = matrices(j, "A", "$");
    p.B = matrices(j, "B", "$");
    p.a = scalars(j, "a", "$");
    if (j.contains("C")) p.C = mat("C");
    p.D = matrices(j, "D", "$");
    p.b = scalars(j, "b", "$");
    return make_nonstandard(nk, p);
  }
  throw ParseError("at $.constructor: expected one of gc1_virasoro, canonical, standard_deg1, standard_higher, nonstandard");
}

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Scalar::parse(item));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the general conformal algebra gc_N", "confalg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::vector<std::string> files;
  unsigned nmax = 4;
  std::string l1_text, l2_text, coeffs_text = "-1,0,1";
  std::size_t grid_n = 1;
  unsigned grid_deg = 1;
  std::vector<std::string> gamma;

  auto add = [&](const char* name, const char* help, std::size_t min_files, std::size_t max_files) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("files", files, "input JSON files")->expected(static_cast<int>(min_files), static_cast<int>(max_files));
    if (min_files > 0) c->get_option("files")->required();
    return c;
  };
  add("bracket", "λ-bracket of two gc_N elements", 2, 2);
  add("check-virasoro", "test [g_λ g] = (∂+2λ)g", 1, 1);
  add("is-standard", "standardness of a Virasoro element", 1, 1);
  add("make", "build an element from a constructor description", 1, 1);
  CLI::App* grid = add("classify-deg1", "exhaustive degree-one grid classification", 0, 0);
  grid->add_option("--N", grid_n, "matrix size")->check(CLI::PositiveNumber);
  grid->add_option("--coeffs", coeffs_text, "comma-separated rational coefficient set");
  grid->add_option("--deg", grid_deg, "∂-degree bound of structure polynomials");
  CLI::App* axioms = add("module-axioms", "check (M1)/(M2) on a module", 1, 1);
  CLI::App* dual = add("dual", "conformal dual of a module", 1, 1);
  add("restrict", "Vir-module obtained through a Virasoro element", 2, 2);
  add("regularity", "regularity of a Virasoro action: [element] module", 1, 2);
  CLI::App* wp = add("weight-product", "conformal weight product over a finite set of elements", 1, 1);
  wp->add_option("--gamma", gamma, "element files forming Γ (repeatable)");
  add("vir-semisimple", "semisimplicity of a Vir-module", 1, 1);
  CLI::App* dec = add("decompose", "decompose a gc_N module along two canonical Virasoro elements", 1, 1);
  dec->add_option("--L1", l1_text, "a,b of the first canonical element")->required();
  dec->add_option("--L2", l2_text, "a,b of the second canonical element")->required();
  for (CLI::App* c : {axioms, dual, dec}) c->add_option("--nmax", nmax, "degree cutoff");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kSuccess : kInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Inputs in;
  Json report{{"operation", verb}};
  Outcome res;
  try {
    if (verb == "bracket") {
      const GcElement a = load_element(in, files[0]);
      const GcElement b = load_element(in, files[1]);
      const GcValue v = lambda_bracket(a, b);
      res.result = Json{{"value", json_io::to_json(v)}, {"pretty", json_io::pretty(v)}};
    } else if (verb == "check-virasoro") {
      const VirasoroCertificate c = is_virasoro(load_element(in, files[0]));
      res.result = certificate_json(c);
      res.code = c.is_virasoro ? kSuccess : kMathFailure;
    } else if (verb == "is-standard") {
      const bool standard = is_standard(load_element(in, files[0]));
      res.result = Json{{"is_standard", standard}};
    } else if (verb == "make") {
      const Json j = in.load(files[0]);
      const GcElement g = in_file(files[0], [&] { return construct(j); });
      res.result = Json{{"element", json_io::to_json(g)}, {"pretty", json_io::pretty(g)}};
      res.result["certificate"] = certificate_json(is_virasoro(g));
    } else if (verb == "classify-deg1") {
      in.option("N", std::to_string(grid_n));
      in.option("coeffs", coeffs_text);
      in.option("deg", std::to_string(grid_deg));
      std::vector<Scalar> coeffs;
      try {
        coeffs = parse_list(coeffs_text);
      } catch (const ParseError&) {
        throw ParseError("--coeffs: expected comma-separated rationals, got \"" + coeffs_text + "\"");
      }
      std::sort(coeffs.begin(), coeffs.end());
      coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
      const GridReport r = classify_deg1_grid(grid_n, coeffs, grid_deg);
      res.result = json_io::to_json(r);
      res.code = r.counterexamples.empty() ? kSuccess : kMathFailure;
    } else if (verb == "module-axioms") {
      in.option("nmax", std::to_string(nmax));
      const ModuleCheck c = check_module_axioms(load_module(in, files[0]), nmax);
      res.result = json_io::to_json(c);
      res.code = c.ok ? kSuccess : kMathFailure;
    } else if (verb == "dual") {
      in.option("nmax", std::to_string(nmax));
      res.result = json_io::module_tables(dual_module(load_module(in, files[0])), nmax);
    } else if (verb == "restrict") {
      const GcElement g = load_element(in, files[0]);
      const ConformalModule m = load_module(in, files[1]);
      res.result = json_io::module_tables(restrict_to_virasoro(g, m), 1);
    } else if (verb == "regularity") {
      RegularityReport r;
      if (files.size() == 2) {
        const GcElement g = load_element(in, files[0]);
        r = check_regular(g, load_module(in, files[1]));
      } else {
        r = check_regular(load_module(in, files[0]));
      }
      res.result = json_io::to_json(r);
      res.code = r.regular ? kSuccess : kMathFailure;
    } else if (verb == "weight-product") {
      const ConformalModule m = load_module(in, files[0]);
      std::vector<RegularityReport> reports;
      if (gamma.empty()) {
        reports.push_back(check_regular(m));
      } else {
        for (const auto& g : gamma) reports.push_back(check_regular(load_element(in, g), m));
      }
      res.result = json_io::to_json(weight_product(reports));
    } else if (verb == "vir-semisimple") {
      const VirSemisimpleResult r = vir_semisimple(load_module(in, files[0]));
      Json s = Json::array();
      for (const auto& w : r.summands) s.push_back(Json{{"delta", w.delta.str()}, {"alpha", w.alpha.str()}});
      res.result = Json{{"semisimple", r.semisimple}, {"regularity", json_io::to_json(r.report)}};
      res.result["p"] = r.p ? Json(r.p->str()) : Json(nullptr);
      res.result["summands"] = s;
      res.code = r.semisimple ? kSuccess : kMathFailure;
    } else if (verb == "decompose") {
      in.option("L1", l1_text);
      in.option("L2", l2_text);
      in.option("nmax", std::to_string(nmax));
      const CanonicalPair l1 = json_io::pair_from(l1_text, "--L1");
      const CanonicalPair l2 = json_io::pair_from(l2_text, "--L2");
      const ConformalModule m = load_module(in, files[0]);
      const DecompositionReport r =
          m.algebra().N == 1 ? decompose_gc1(m, l1, l2, nmax) : decompose_gcN(m, l1, l2, nmax);
      res.result = json_io::to_json(r);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    res.result = Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    res.code = kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    res.result = Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    res.code = kInputError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    res.result = Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    res.code = kInputError;
  } catch (const Error& e) {
    res.result = Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    res.code = kMathFailure;
  }
  report["inputs-digest"] = in.digest(verb);
  report["result"] = res.result;
  out << report.dump(2) << "\n";
  return res.code;
}

}  // namespace confalg::cli
