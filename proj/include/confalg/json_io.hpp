// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_JSON_IO_HPP_
#define CONFALG_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "confalg/decompose.hpp"
#include "confalg/module.hpp"
#include "confalg/regularity.hpp"
#include "confalg/virasoro.hpp"

namespace confalg::json_io {

using Json = nlohmann::ordered_json;

// Readers take the JSON path of the value for diagnostics and throw
// ParseError("at <path>: expected <type>").

Scalar scalar_from(const Json& j, const std::string& path);
MPoly mpoly_from(const Json& j, const std::string& path);
QMatrix qmatrix_from(const Json& j, const std::string& path);
PolyMatrix polymatrix_from(const Json& j, const std::string& path);
GcElement element_from(const Json& j, const std::string& path);
ConformalModule module_from(const Json& j, const std::string& path);
/// "a,b" with rational components.
CanonicalPair pair_from(const std::string& text, const std::string& what);

Json to_json(const Scalar& s);
/// [[e_∂, e_λ, e_μ, "p/q"], ...] in lexicographic exponent order.
Json to_json(const MPoly& p);
Json to_json(const QMatrix& m);
Json to_json(const PolyMatrix& m);
/// {"N": n, "terms": [{"n": k, "entries": [[i, j, MPoly], ...]}]}, 1-based.
Json to_json(const GcValue& g);
Json to_json(const RegularityReport& r);
Json to_json(const WeightProduct& w);
Json to_json(const DecompositionReport& r);
Json to_json(const ModuleCheck& c);
Json to_json(const GridReport& r);
/// Explicit-table form with every generator of degree ≤ n_max (gc) or every
/// generator (Vir, HV).
Json module_tables(const ConformalModule& m, unsigned n_max);

/// Σ (f)J^n_{E_ij}, or Σ (f)J^n for N = 1; "0" for the zero value.
std::string pretty(const GcValue& g);

}  // namespace confalg::json_io

#endif  // CONFALG_JSON_IO_HPP_
