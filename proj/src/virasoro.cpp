// SPDX-License-Identifier: Apache-2.0
#include "confalg/virasoro.hpp"

#include <string>

#include "confalg/linalg.hpp"

namespace confalg {

namespace {

const Scalar& leading(const MPoly& p) { return p.terms().rbegin()->second; }

bool is_idempotent(const QMatrix& a) { return !a.is_zero() && a * a == a; }

void require_idempotent(const QMatrix& a, const std::string& name) {
  if (a.is_zero()) throw NotIdempotent(name + " must be nonzero");
  if (!(a * a == a)) throw NotIdempotent(name + "² ≠ " + name);
}

void require_square(const QMatrix& a, std::size_t n, const std::string& name) {
  if (a.rows() != n || a.cols() != n) throw DimensionMismatch(name + " must be " + std::to_string(n) + "×" + std::to_string(n));
}

// X = c·Y for some scalar c (both assumed nonzero).
bool proportional(const QMatrix& x, const QMatrix& y) {
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (!y(i, j).is_zero()) {
        const Scalar c = x(i, j) / y(i, j);
        return x == y.scaled(c);
      }
  return x.is_zero();
}

// Writes P = f(∂)·A0 with f the first nonzero entry; nullopt if P is not of
// that shape. P must be nonzero.
std::optional<std::pair<MPoly, QMatrix>> factor_standard(const PolyMatrix& p) {
  const MPoly* ref = nullptr;
  for (std::size_t i = 0; i < p.rows() && ref == nullptr; ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) {
        ref = &p(i, j);
        break;
      }
  if (ref == nullptr) return std::nullopt;
  const Scalar& lr = leading(*ref);
  QMatrix a0(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const MPoly& e = p(i, j);
      if (e.is_zero()) continue;
      if (!(e * lr == *ref * leading(e))) return std::nullopt;
      a0(i, j) = leading(e) / lr;
    }
  return std::make_pair(*ref, a0);
}

QVector vec(const QMatrix& m) {
  QVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Is there B with A B A = target (sandwich) or A B = target?
bool solvable_for_b(const QMatrix& a, const QMatrix& target, bool sandwich) {
  const std::size_t n = a.rows();
  QMatrix sys(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          Scalar coeff = sandwich ? a(p, r) * a(s, q) : (s == q ? a(p, r) : Scalar(0));
          sys(p * n + q, r * n + s) = coeff;
        }
  return exact_solve(sys, vec(target)).consistent();
}

}  // namespace

VirasoroCertificate is_virasoro(const GcElement& g) {
  VirasoroCertificate cert{g, false, GcLambdaValue(g.N()), g.degree(), std::nullopt};
  cert.residual = lambda_bracket(g, g) - g.times(D() + Lam() * Scalar(2));
  cert.is_virasoro = !g.is_zero() && cert.residual.is_zero();
  if (cert.is_virasoro) cert.is_standard = has_standard_shape(g);
  return cert;
}

bool has_standard_shape(const GcElement& g) {
  for (const auto& [n, p] : g.structure_matrices()) {
    if (!factor_standard(p)) return false;
  }
  return true;
}

bool is_standard(const GcElement& g) {
  if (!is_virasoro(g).is_virasoro) throw NotVirasoro("is_standard: element is not a Virasoro element");
  return has_standard_shape(g);
}

GcElement make_gc1_virasoro(const Scalar& a, const Scalar& b) {
  return canonical_virasoro(1, a, b);
}

GcElement canonical_virasoro(std::size_t n, const Scalar& a, const Scalar& b) {
  const QMatrix id = QMatrix::identity(n);
  return GcElement::term(0, id, D() * a + MPoly(b)) + GcElement::term(1, id);
}

GcElement make_standard_deg1(int form, const Scalar& a, const std::optional<Scalar>& b,
                             const QMatrix& A, const QMatrix& B) {
  if (!A.is_square()) throw DimensionMismatch("A must be square");
  require_square(B, A.rows(), "B");
  require_idempotent(A, "A");
  if (form == 1) {
    const Scalar bb = b.value_or(Scalar(0));
    return GcElement::term(0, A * B * A, D() * a + MPoly(bb)) + GcElement::term(1, A);
  }
  if (form == 2) {
    if (b.has_value()) throw InvalidArgument("form 2 takes no b parameter");
    return GcElement::term(0, A * B, MPoly(a)) + GcElement::term(1, A);
  }
  throw InvalidArgument("degree-one form must be 1 or 2, got " + std::to_string(form));
}

GcElement make_standard_higher(const QMatrix& A, const std::vector<HigherTerm>& terms) {
  if (!A.is_square()) throw DimensionMismatch("A must be square");
  require_idempotent(A, "A");
  GcElement g = GcElement::term(1, A);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [index, a, B] = terms[t];
    const std::string name = "B_" + std::to_string(index);
    require_square(B, A.rows(), name);
    if (index < 2) throw InvalidArgument("higher-degree term index must be ≥ 2, got " + std::to_string(index));
    if (!(A * B * A).is_zero()) throw ConstraintViolated("A·" + name + "·A ≠ 0");
    g += GcElement::term(index, A * B, MPoly(a));
  }
  return g;
}

NonstandardKind parse_nonstandard_kind(const std::string& name) {
  if (name == "T1") return NonstandardKind::T1;
  if (name == "T2") return NonstandardKind::T2;
  if (name == "T3") return NonstandardKind::T3;
  if (name == "T4") return NonstandardKind::T4;
  throw InvalidArgument("unknown non-standard family \"" + name + "\" (expected T1..T4)");
}

GcElement make_nonstandard(NonstandardKind kind, const NonstandardParams& p) {
  const std::size_t k = p.A.size();
  if (k < 2) throw ConstraintViolated("k ≥ 2 required");
  if (p.B.size() != k || p.a.size() != k) throw InvalidArgument("A, B and a must have the same length");
  const std::size_t n = p.A[0].rows();
  if (n < 2) throw ConstraintViolated("N ≥ 2 required");
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };

  std::vector<QMatrix> aba(k);
  for (std::size_t i = 0; i < k; ++i) {
    require_square(p.A[i], n, "A_" + idx(i));
    require_square(p.B[i], n, "B_" + idx(i));
    if (!is_idempotent(p.A[i])) throw ConstraintViolated("A_" + idx(i) + "² = A_" + idx(i) + " ≠ 0 fails");
    aba[i] = p.A[i] * p.B[i] * p.A[i];
    if (aba[i].is_zero()) throw ConstraintViolated("A_" + idx(i) + "B_" + idx(i) + "A_" + idx(i) + " = 0");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (!(p.A[i] * p.A[j]).is_zero()) throw ConstraintViolated("A_" + idx(i) + "A_" + idx(j) + " ≠ 0");
      if (i < j && proportional(aba[i], aba[j])) {
        throw ConstraintViolated("A_" + idx(i) + "B_" + idx(i) + "A_" + idx(i) + " and A_" + idx(j) +
                                 "B_" + idx(j) + "A_" + idx(j) + " are proportional");
      }
      if (i < j && p.a[i] == p.a[j]) throw ConstraintViolated("a_" + idx(i) + " = a_" + idx(j));
    }

  QMatrix sum_a(n, n);
  for (const auto& a : p.A) sum_a += a;
  const bool t1_like = kind == NonstandardKind::T1 || kind == NonstandardKind::T3;
  GcElement g = GcElement::term(1, sum_a);
  for (std::size_t i = 0; i < k; ++i) {
    const MPoly f = (i == 0 && t1_like) ? MPoly(1) : D() + MPoly(p.a[i]);
    g += GcElement::term(0, aba[i], f);
  }
  if (kind == NonstandardKind::T1 || kind == NonstandardKind::T2) return g;

  if (n < 3) throw ConstraintViolated("N ≥ 3 required for T3/T4");
  if (!p.C) throw InvalidArgument("T3/T4 need C");
  const QMatrix& C = *p.C;
  require_square(C, n, "C");
  if (p.D.empty()) throw ConstraintViolated("ℓ ≥ 2 required (at least D_2)");
  if (p.D.size() != p.b.size()) throw InvalidArgument("D and b must have the same length");
  if (!is_idempotent(C)) throw ConstraintViolated("C² = C ≠ 0 fails");
  for (std::size_t i = 0; i < k; ++i) {
    if (!(p.A[i] * C).is_zero()) throw ConstraintViolated("A_" + idx(i) + "C ≠ 0");
    if (!(C * p.A[i]).is_zero()) throw ConstraintViolated("CA_" + idx(i) + " ≠ 0");
  }
  g += GcElement::term(1, C);
  for (std::size_t t = 0; t < p.D.size(); ++t) {
    const std::string dj = "D_" + std::to_string(t + 2);
    require_square(p.D[t], n, dj);
    const QMatrix cd = C * p.D[t];
    for (std::size_t i = 0; i < k; ++i) {
      if (!(cd * p.A[i]).is_zero()) throw ConstraintViolated("C" + dj + "A_" + idx(i) + " ≠ 0");
    }
    if (!(cd * C).is_zero()) throw ConstraintViolated("C" + dj + "C ≠ 0");
    g += GcElement::term(static_cast<unsigned>(t + 2), cd, MPoly(p.b[t]));
  }
  return g;
}

Deg1FormMatch match_deg1_forms(const GcElement& g) {
  Deg1FormMatch m;
  if (g.degree() != 1u) return m;
  const PolyMatrix p1 = g.coefficient(1);
  if (!is_constant(p1)) return m;
  const QMatrix a = to_constant(p1);
  if (!is_idempotent(a)) return m;
  const PolyMatrix p0 = g.coefficient(0);
  if (p0.is_zero()) return {true, true};
  auto factored = factor_standard(p0);
  if (!factored) return m;
  const auto& [f, a0] = *factored;
  if (f.degree(Var::D) <= 1) m.form1 = solvable_for_b(a, a0, true);
  if (f.is_constant()) m.form2 = solvable_for_b(a, a0, false);
  return m;
}

bool matches_gc1_form(const GcElement& g) {
  if (g.N() != 1 || g.degree() != 1u) return false;
  return g.coefficient(1)(0, 0) == MPoly(1) && g.coefficient(0)(0, 0).degree(Var::D) <= 1;
}

GridReport classify_deg1_grid(std::size_t n, const std::vector<Scalar>& coeff_set,
                              unsigned poly_deg_bound) {
  GridReport report;
  report.N = n;
  report.poly_deg_bound = poly_deg_bound;
  const std::size_t per_poly = poly_deg_bound + 1;
  const std::size_t slots = 2 * n * n * per_poly;
  const std::size_t radix = coeff_set.size();
  if (radix == 0) return report;

  std::vector<std::size_t> digits(slots, 0);
  while (true) {
    GcValue v(n);
    for (unsigned s = 0; s < 2; ++s) {
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (unsigned e = 0; e < per_poly; ++e) {
            const std::size_t slot = ((s * n + i) * n + j) * per_poly + e;
            m(i, j) += MPoly::monomial({e, 0, 0}, coeff_set[digits[slot]]);
          }
      v.add(s, m);
    }
    const GcElement g(v);
    ++report.candidates;

    const VirasoroCertificate cert = is_virasoro(g);
    if (cert.is_virasoro) {
      ++report.virasoro;
      const bool standard = *cert.is_standard;
      standard ? ++report.standard : ++report.nonstandard;
      if (n == 1) {
        if (!matches_gc1_form(g)) report.counterexamples.push_back({g, "not of the form (a∂+b)J^0 + J^1"});
      } else if (standard) {
        const Deg1FormMatch fm = match_deg1_forms(g);
        if (!fm.form1 && !fm.form2) {
          report.counterexamples.push_back({g, "standard but matches neither degree-one form"});
        }
      }
    }

    std::size_t pos = 0;
    while (pos < slots && ++digits[pos] == radix) digits[pos++] = 0;
    if (pos == slots) break;
  }
  return report;
}

}  // namespace confalg
