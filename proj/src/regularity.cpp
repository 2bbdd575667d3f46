// SPDX-License-Identifier: Apache-2.0
#include "confalg/regularity.hpp"

#include "confalg/virasoro.hpp"

namespace confalg {

namespace {

// ∂ + Δλ + α with nothing else.
std::optional<Weight> read_weight(const MPoly& p) {
  Weight w;
  bool has_d = false;
  for (const auto& [e, c] : p.terms()) {
    if (e == Exponents{1, 0, 0} && c.is_one()) {
      has_d = true;
    } else if (e == Exponents{0, 1, 0}) {
      w.delta = c;
    } else if (e == Exponents{0, 0, 0}) {
      w.alpha = c;
    } else {
      return std::nullopt;
    }
  }
  if (!has_d) return std::nullopt;
  return w;
}

}  // namespace

RegularityReport regularity_of_action(const PolyMatrix& action) {
  RegularityReport r;
  r.action = action;
  for (std::size_t i = 0; i < action.rows(); ++i)
    for (std::size_t j = 0; j < action.cols(); ++j) {
      if (i != j && !action(i, j).is_zero()) {
        r.offending = OffendingEntry{i, j, action(i, j), "off-diagonal entry is nonzero"};
        return r;
      }
    }
  for (std::size_t i = 0; i < action.rows(); ++i) {
    auto w = read_weight(action(i, i));
    if (!w) {
      r.offending = OffendingEntry{i, i, action(i, i), "diagonal entry is not of the form ∂+Δλ+α"};
      r.weights.clear();
      return r;
    }
    r.weights.push_back(*w);
  }
  r.regular = true;
  return r;
}

RegularityReport check_regular(const GcElement& L, const ConformalModule& M) {
  if (L.N() != M.algebra().N) throw DimensionMismatch("element and module have different N");
  if (!is_virasoro(L).is_virasoro) throw NotVirasoro("check_regular: element is not a Virasoro element");
  return regularity_of_action(M.act_element(L));
}

RegularityReport check_regular(const ConformalModule& M) {
  if (M.algebra().kind == AlgebraKind::Gc) {
    throw InvalidArgument("a gc module needs an explicit Virasoro element");
  }
  return regularity_of_action(M.act_unit(1, 0, 0));
}

WeightProduct weight_product(const std::vector<RegularityReport>& reports) {
  WeightProduct p;
  p.value = Scalar(1);
  for (std::size_t e = 0; e < reports.size(); ++e) {
    if (!reports[e].regular) {
      throw NotRegular("weight_product: report " + std::to_string(e) + " is not regular");
    }
    for (std::size_t i = 0; i < reports[e].weights.size(); ++i) {
      const Scalar& d = reports[e].weights[i].delta;
      p.factors.push_back({e, i, d});
      p.value *= d;
    }
  }
  return p;
}

VirSemisimpleResult vir_semisimple(const ConformalModule& M) {
  if (M.algebra().kind != AlgebraKind::Vir) throw InvalidArgument("vir_semisimple expects a Vir module");
  VirSemisimpleResult out;
  out.report = check_regular(M);
  if (!out.report.regular) return out;
  out.p = weight_product({out.report}).value;
  out.semisimple = !out.p->is_zero();
  if (out.semisimple) out.summands = out.report.weights;
  return out;
}

std::vector<HvData> hv_reduce(const CanonicalAction& first, const CanonicalAction& second) {
  if (first.a == second.a && first.b == second.b) {
    throw InvalidArgument("hv_reduce needs two different canonical Virasoro elements");
  }
  if (first.weights.size() != second.weights.size()) {
    throw InvalidArgument("hv_reduce: weight lists have different lengths");
  }
  // β(a₂-a₁) = Δ⁽¹⁾-Δ⁽²⁾ and β(b₁-b₂) = α⁽¹⁾-α⁽²⁾.
  const Scalar da = second.a - first.a;
  const Scalar db = first.b - second.b;
  std::vector<HvData> out;
  for (std::size_t i = 0; i < first.weights.size(); ++i) {
    const Weight& w1 = first.weights[i];
    const Weight& w2 = second.weights[i];
    const Scalar rd = w1.delta - w2.delta;
    const Scalar ra = w1.alpha - w2.alpha;
    const Scalar beta = da.is_zero() ? ra / db : rd / da;
    if (!(beta * da == rd) || !(beta * db == ra)) {
      throw InconsistentData("hv_reduce: no β satisfies both equations at basis vector " +
                             std::to_string(i + 1) + " (ΔΔ=" + rd.str() + ", Δα=" + ra.str() + ")");
    }
    HvData h{beta, w1.delta + first.a * beta, w1.alpha - first.b * beta};
    if (!(h.delta == w2.delta + second.a * beta) || !(h.alpha == w2.alpha - second.b * beta)) {
      throw InconsistentData("hv_reduce: recovered J^1 data disagree at basis vector " + std::to_string(i + 1));
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace confalg
