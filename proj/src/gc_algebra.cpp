// SPDX-License-Identifier: Apache-2.0
#include "confalg/gc_algebra.hpp"

#include <string>

namespace confalg {

std::optional<unsigned> GcValue::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

PolyMatrix GcValue::coefficient(unsigned n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? PolyMatrix(n_, n_) : it->second;
}

void GcValue::add(unsigned n, const PolyMatrix& p) {
  if (p.rows() != n_ || p.cols() != n_) throw DimensionMismatch("coefficient matrix is not N×N");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GcValue GcValue::operator-() const {
  GcValue r(n_);
  for (const auto& [n, p] : terms_) r.terms_.emplace(n, -p);
  return r;
}

GcValue& GcValue::operator+=(const GcValue& o) {
  if (o.n_ != n_) throw DimensionMismatch("gc values of different N");
  for (const auto& [n, p] : o.terms_) add(n, p);
  return *this;
}

GcValue& GcValue::operator-=(const GcValue& o) { return *this += -o; }

GcValue GcValue::times(const MPoly& p) const {
  GcValue r(n_);
  for (const auto& [n, m] : terms_) r.add(n, m.scaled(p));
  return r;
}

GcValue GcValue::substitute(Var v, const MPoly& replacement) const {
  GcValue r(n_);
  for (const auto& [n, m] : terms_) r.add(n, confalg::substitute(m, v, replacement));
  return r;
}

GcElement::GcElement(const GcValue& v) : GcValue(v) {
  for (const auto& [n, m] : terms()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).only_uses({Var::D})) {
          throw InvalidArgument("gc_N element coefficient uses a variable other than ∂");
        }
  }
}

GcElement GcElement::term(unsigned n, const QMatrix& a, const MPoly& f) {
  return term(n, to_poly(a).scaled(f));
}

GcElement GcElement::term(unsigned n, const PolyMatrix& p) {
  if (!p.is_square()) throw DimensionMismatch("coefficient matrix must be square");
  GcValue v(p.rows());
  v.add(n, p);
  return GcElement(v);
}

const StructureRule& gc_rule() {
  static const StructureRule rule = [](unsigned m, unsigned n, const MPoly& nu) {
    std::vector<BracketTerm> out;
    const MPoly shift = D() + nu;
    const MPoly neg = -nu;
    for (unsigned s = 0; s <= m; ++s) {
      out.push_back({m + n - s, shift.pow(s) * binomial(m, s), true});
    }
    for (unsigned s = 0; s <= n; ++s) {
      out.push_back({m + n - s, -(neg.pow(s) * binomial(n, s)), false});
    }
    return out;
  };
  return rule;
}

GcValue bracket(const GcValue& a, const GcValue& b, const MPoly& nu, const StructureRule& rule) {
  if (a.N() != b.N()) throw DimensionMismatch("bracket of elements of gc_N with different N");
  GcValue out(a.N());
  const MPoly left_sub = -nu;
  const MPoly right_sub = D() + nu;
  for (const auto& [m, f] : a.terms()) {
    const PolyMatrix fl = substitute(f, Var::D, left_sub);
    for (const auto& [n, g] : b.terms()) {
      const PolyMatrix gr = substitute(g, Var::D, right_sub);
      const PolyMatrix ab = fl * gr;
      const PolyMatrix ba = gr * fl;
      for (const auto& t : rule(m, n, nu)) {
        const PolyMatrix& prod = t.ab_order ? ab : ba;
        if (prod.is_zero() || t.coeff.is_zero()) continue;
        out.add(t.degree, prod.scaled(t.coeff));
      }
    }
  }
  return out;
}

GcLambdaValue lambda_bracket(const GcElement& a, const GcElement& b) {
  return bracket(a, b, Lam());
}

GcElement d_times(const GcElement& g) { return GcElement(g.times(D())); }

std::optional<Witness> first_difference(const GcValue& lhs, const GcValue& rhs) {
  const GcValue diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const auto& [n, m] = *diff.terms().begin();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return Witness{n, i, j, m(i, j)};
  return std::nullopt;
}

AxiomCheck check_skew_symmetry(const GcElement& a, const GcElement& b, const StructureRule& rule) {
  if (a.N() != b.N()) throw DimensionMismatch("skew-symmetry check with different N");
  const GcValue lhs = bracket(a, b, Lam(), rule);
  const GcValue rhs = -bracket(b, a, Lam(), rule).substitute(Var::L, -Lam() - D());
  auto w = first_difference(lhs, rhs);
  return {!w.has_value(), w};
}

AxiomCheck check_jacobi(const GcElement& a, const GcElement& b, const GcElement& c,
                        const StructureRule& rule) {
  if (a.N() != b.N() || b.N() != c.N()) throw DimensionMismatch("Jacobi check with different N");
  const MPoly lam = Lam();
  const MPoly mu = Mu();
  const GcValue lhs = bracket(a, bracket(b, c, mu, rule), lam, rule);
  const GcValue rhs1 = bracket(bracket(a, b, lam, rule), c, lam + mu, rule);
  const GcValue rhs2 = bracket(b, bracket(a, c, lam, rule), mu, rule);
  auto w = first_difference(lhs, rhs1 + rhs2);
  return {!w.has_value(), w};
}

GcElement canonical_embed(const GcElement& g1, std::size_t n) {
  if (g1.N() != 1) throw DimensionMismatch("canonical embedding expects an element of gc_1");
  GcValue out(n);
  const PolyMatrix id = to_poly(QMatrix::identity(n));
  for (const auto& [deg, m] : g1.terms()) out.add(deg, id.scaled(m(0, 0)));
  return GcElement(out);
}

std::pair<MPoly, MPoly> combinatorial_sides(int which, unsigned n) {
  const MPoly x = D();
  const MPoly y = Lam();
  MPoly lhs, rhs;
  switch (which) {
    case 1:
      for (unsigned i = 0; i <= n; ++i) lhs += (-y).pow(i) * (x + y).pow(n - i) * binomial(n, i);
      rhs = x.pow(n);
      break;
    case 2:
      for (unsigned i = 2; i <= n + 1; ++i)
        lhs += (-y).pow(i) * (x + y).pow(n + 1 - i) * binomial(n + 1, i);
      rhs = y * (x + y).pow(n) * Scalar(static_cast<long>(n + 1)) - (x + y).pow(n + 1) + x.pow(n + 1);
      break;
    case 3:
      for (unsigned i = 2; i <= n + 1; ++i)
        lhs += (-y).pow(i) * x.pow(n + 1 - i) * binomial(n + 1, i);
      rhs = y * x.pow(n) * Scalar(static_cast<long>(n + 1)) + (x - y).pow(n + 1) - x.pow(n + 1);
      break;
    default:
      throw InvalidArgument("combinatorial identity index must be 1, 2 or 3, got " +
                            std::to_string(which));
  }
  return {lhs, rhs};
}

bool combinatorial_identity(int which, unsigned n) {
  auto [lhs, rhs] = combinatorial_sides(which, n);
  return lhs == rhs;
}

}  // namespace confalg
