// SPDX-License-Identifier: Apache-2.0
#include "confalg/decompose.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "confalg/linalg.hpp"
#include "confalg/virasoro.hpp"

namespace confalg {

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

Scalar eval(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string pair_str(const CanonicalPair& p) { return "(" + p.first.str() + "," + p.second.str() + ")"; }

std::string unit_str(unsigned n, std::size_t i, std::size_t j) {
  return "J^" + std::to_string(n) + "_{E" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

PolyMatrix restrict_rows_cols(const PolyMatrix& f, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = f(rows[r], cols[c]);
  return out;
}

struct Block {
  SummandKind kind;
  Scalar reported_alpha;
  Scalar action_shift;
  std::vector<std::size_t> members;
};

DecompositionReport run_pipeline(const ConformalModule& M, const CanonicalPair& l1, const CanonicalPair& l2,
                                 unsigned n_max, bool gc1) {
  if (M.algebra().kind != AlgebraKind::Gc) throw InvalidArgument("decomposition expects a gc module");
  const std::size_t N = M.algebra().N;
  if (gc1 && N != 1) throw InvalidArgument("decompose_gc1 expects a module over gc_1");
  if (!gc1 && N < 2) throw InvalidArgument("decompose_gcN expects a module over gc_N with N ≥ 2");
  if (l1 == l2) throw InvalidArgument("the two canonical Virasoro elements must differ");

  DecompositionReport rep;
  auto& log = rep.transcript;
  unsigned n_top = n_max;
  if (M.cutoff() && *M.cutoff() < n_top) {
    n_top = *M.cutoff();
    log.push_back("cutoff lowered to the table's n_max=" + std::to_string(n_top));
  }
  rep.verified_n_max = n_top;
  log.push_back(M.cutoff() ? "guarantee: explicit table verified for n ≤ " + std::to_string(n_top)
                           : "guarantee: recipe module, tables exact for all n; verified for n ≤ " +
                                 std::to_string(n_top));

  std::vector<CanonicalAction> acts;
  for (const auto& l : {l1, l2}) {
    const GcElement g = canonical_virasoro(N, l.first, l.second);
    RegularityReport r = check_regular(g, M);
    if (!r.regular) {
      const auto& o = *r.offending;
      throw NotRegular("L" + pair_str(l) + " is not regular: entry (" + std::to_string(o.row + 1) + "," +
                       std::to_string(o.col + 1) + ") = " + o.entry.str() + ", " + o.reason +
                       "; basis search is not attempted");
    }
    log.push_back("L" + pair_str(l) + " acts regularly");
    acts.push_back({l.first, l.second, r.weights});
  }
  const std::vector<HvData> hv = hv_reduce(acts[0], acts[1]);
  log.push_back("hv_reduce: β, Δ, α recovered for " + std::to_string(hv.size()) + " basis vectors");

  const auto sols = solve_partition_relations();
  std::vector<Block> blocks;
  for (std::size_t v = 0; v < hv.size(); ++v) {
    const auto key = std::make_pair(hv[v].delta, hv[v].beta);
    if (std::find(sols.begin(), sols.end(), key) == sols.end()) {
      throw PartitionViolation("basis vector " + std::to_string(v + 1) + " has (Δ,β)=(" + hv[v].delta.str() +
                               "," + hv[v].beta.str() + "), neither (1,1) nor (0,-1)");
    }
    const SummandKind kind = hv[v].beta.sign() > 0 ? SummandKind::Standard : SummandKind::Dual;
    const Scalar shift = hv[v].alpha;
    const Scalar reported = kind == SummandKind::Standard ? shift : -shift;
    auto it = std::find_if(blocks.begin(), blocks.end(),
                           [&](const Block& b) { return b.kind == kind && b.reported_alpha == reported; });
    if (it == blocks.end()) {
      blocks.push_back({kind, reported, shift, {v}});
    } else {
      it->members.push_back(v);
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.kind != b.kind) return a.kind == SummandKind::Standard;
    return a.reported_alpha < b.reported_alpha;
  });
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const Block& b = blocks[s];
    if (b.members.size() % N != 0) {
      throw NotRepresentation("block " + std::to_string(s) + " has size " + std::to_string(b.members.size()) +
                              ", not a multiple of N=" + std::to_string(N));
    }
    log.push_back("block " + std::to_string(s) + ": " + (b.kind == SummandKind::Standard ? "K1" : "K2") +
                  ", action shift " + b.action_shift.str() + ", size " + std::to_string(b.members.size()));
  }

  // Φ from the J^0 action.
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    PhiMap phi;
    phi.block = s;
    phi.anti = blocks[s].kind == SummandKind::Dual;
    phi.N = N;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const PolyMatrix f = restrict_rows_cols(M.act_unit(0, i, j), blocks[s].members, blocks[s].members);
        if (!is_constant(f)) {
          throw ClaimFailed("block " + std::to_string(s) + ": " + unit_str(0, i, j) + " acts non-constantly");
        }
        QMatrix c = to_constant(f);
        phi.values.push_back(phi.anti ? -c : c);
      }
    rep.phi.push_back(std::move(phi));
  }

  // Action shape and cross-block vanishing.
  for (unsigned n = 0; n <= n_top; ++n) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const PolyMatrix f = M.act_unit(n, i, j);
        for (std::size_t s = 0; s < blocks.size(); ++s) {
          for (std::size_t t = 0; t < blocks.size(); ++t) {
            const PolyMatrix sub = restrict_rows_cols(f, blocks[s].members, blocks[t].members);
            PolyMatrix expected(sub.rows(), sub.cols());
            if (s == t) {
              const Scalar& a = blocks[s].action_shift;
              const MPoly shape = blocks[s].kind == SummandKind::Standard ? (D() + Lam() + MPoly(a)).pow(n)
                                                                          : -(-D() - MPoly(a)).pow(n);
              expected = to_poly(rep.phi[s].at(i, j)).scaled(shape);
            }
            if (!(sub == expected)) {
              const PolyMatrix diff = sub - expected;
              std::string where;
              for (std::size_t r = 0; r < diff.rows() && where.empty(); ++r)
                for (std::size_t c = 0; c < diff.cols() && where.empty(); ++c)
                  if (!diff(r, c).is_zero()) {
                    where = "entry (" + std::to_string(blocks[s].members[r] + 1) + "," +
                            std::to_string(blocks[t].members[c] + 1) + ") off by " + diff(r, c).str();
                  }
              throw ClaimFailed(std::string(s == t ? "action shape" : "cross-block vanishing") + " fails for " +
                                unit_str(n, i, j) + " between blocks " + std::to_string(s) + " and " +
                                std::to_string(t) + ": " + where);
            }
          }
        }
      }
  }
  log.push_back("action shapes and cross-block vanishing verified for n ≤ " + std::to_string(n_top));

  for (const auto& phi : rep.phi) {
    if (auto err = check_phi_relations(phi)) {
      throw ClaimFailed("block " + std::to_string(phi.block) + ": " + *err);
    }
    log.push_back("block " + std::to_string(phi.block) + ": Φ is an algebra " +
                  (phi.anti ? "anti-homomorphism" : "homomorphism"));
  }

  const std::size_t k = M.rank();
  QMatrix p(k, k);
  std::size_t offset = 0;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const QMatrix ps = skolem_noether_similarity(rep.phi[s]);
    for (std::size_t r = 0; r < ps.rows(); ++r)
      for (std::size_t c = 0; c < ps.cols(); ++c) p(blocks[s].members[r], offset + c) = ps(r, c);
    offset += ps.cols();
    const std::size_t m = blocks[s].members.size() / N;
    rep.summands.push_back({blocks[s].kind, blocks[s].reported_alpha, m});
    log.push_back("block " + std::to_string(s) + ": similarity residuals zero, multiplicity " + std::to_string(m));
    if (blocks[s].kind == SummandKind::Dual) {
      log.push_back("block " + std::to_string(s) + ": dual summand gc_dual(" + blocks[s].reported_alpha.str() +
                    ") = (M_{-α})^* with action shift α=" + blocks[s].action_shift.str());
    }
  }
  rep.basis_change = p;

  const ConformalModule changed = ConformalModule::basis_change(M, p);
  if (!same_tables(changed, recipe_module(N, rep.summands), n_top)) {
    throw ClaimFailed("conjugated tables differ from the reported direct sum");
  }
  log.push_back("conjugated tables equal the reported direct sum for n ≤ " + std::to_string(n_top));
  return rep;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw InvalidArgument("rational_roots of the zero polynomial");
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  if (c.size() - low > 1) {
    mpz_class lcm_den = 1;
    for (std::size_t k = low; k < c.size(); ++k) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c[k].raw().get_den_mpz_t());
    const mpz_class c0 = mpq_class(c[low].raw() * lcm_den).get_num();
    const mpz_class cn = mpq_class(c.back().raw() * lcm_den).get_num();
    const std::vector<Scalar> tail(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
    for (const auto& pn : positive_divisors(c0))
      for (const auto& qd : positive_divisors(cn))
        for (int sgn : {1, -1}) {
          const Scalar x(mpq_class(sgn * pn, qd));
          if (eval(tail, x).is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<Scalar, Scalar>> solve_partition_relations() {
  // β = 2Δ-1 into 2β² - 3Δβ + 3Δ - 2, as a polynomial in Δ.
  const MPoly x = D();
  const MPoly beta = x * Scalar(2) - MPoly(1);
  const MPoly q = beta * beta * Scalar(2) - x * beta * Scalar(3) + x * Scalar(3) - MPoly(2);
  std::vector<Scalar> coeffs(q.degree(Var::D) + 1);
  for (const auto& [e, c] : q.terms()) coeffs[e[0]] = c;
  std::vector<std::pair<Scalar, Scalar>> out;
  for (const auto& d : rational_roots(coeffs)) out.emplace_back(d, d * Scalar(2) - Scalar(1));
  return out;
}

std::string kind_name(SummandKind k) { return k == SummandKind::Standard ? "standard" : "dual"; }

std::optional<std::string> check_phi_relations(const PhiMap& phi) {
  const std::size_t N = phi.N;
  if (phi.values.size() != N * N) return "Φ needs N² values";
  const std::size_t d = phi.size();
  QMatrix sum(d, d);
  for (std::size_t i = 0; i < N; ++i) sum += phi.at(i, i);
  if (!(sum == QMatrix::identity(d))) return std::string("Φ(I) is not the identity");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) {
          const QMatrix prod = phi.anti ? phi.at(k, l) * phi.at(i, j) : phi.at(i, j) * phi.at(k, l);
          const QMatrix expected = j == k ? phi.at(i, l) : QMatrix(d, d);
          if (!(prod == expected)) {
            return "product rule fails for E" + std::to_string(i + 1) + std::to_string(j + 1) + "·E" +
                   std::to_string(k + 1) + std::to_string(l + 1);
          }
        }
  return std::nullopt;
}

QMatrix skolem_noether_similarity(const PhiMap& phi) {
  const std::size_t N = phi.N;
  const std::size_t d = phi.size();
  if (phi.values.size() != N * N || d % N != 0) {
    throw NotRepresentation("block " + std::to_string(phi.block) + ": size not divisible by N");
  }
  const std::size_t m = d / N;
  // ψ(E_ij) = Φ(E_ij), or Φ(E_ji) for an anti-homomorphism.
  auto psi = [&](std::size_t i, std::size_t j) -> const QMatrix& { return phi.anti ? phi.at(j, i) : phi.at(i, j); };
  const QMatrix& e11 = psi(0, 0);
  const auto cols = independent_columns(e11);
  if (cols.size() != m) {
    throw NotRepresentation("block " + std::to_string(phi.block) + ": Φ(E11) has rank " +
                            std::to_string(cols.size()) + ", expected " + std::to_string(m));
  }
  QMatrix p(d, d);
  for (std::size_t t = 0; t < m; ++t) {
    const QMatrix w = e11.block(0, cols[t], d, 1);
    for (std::size_t i = 0; i < N; ++i) p.set_block(0, t * N + i, psi(i, 0) * w);
  }
  if (determinant(p).is_zero()) {
    throw NotRepresentation("block " + std::to_string(phi.block) + ": assembled similarity is singular");
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (!(psi(i, j) * p == p * kron_identity(m, QMatrix::unit(N, i, j)))) {
        throw NotRepresentation("block " + std::to_string(phi.block) + ": similarity residual nonzero at E" +
                                std::to_string(i + 1) + std::to_string(j + 1));
      }
    }
  return p;
}

ConformalModule recipe_module(std::size_t N, const std::vector<Summand>& summands) {
  std::vector<ConformalModule> parts;
  for (const auto& s : summands)
    for (std::size_t c = 0; c < s.mult; ++c)
      parts.push_back(s.kind == SummandKind::Standard ? ConformalModule::gc_standard(N, s.alpha)
                                                      : ConformalModule::gc_dual(N, s.alpha));
  return ConformalModule::direct_sum(parts);
}

DecompositionReport decompose_gc1(const ConformalModule& M, const CanonicalPair& l1, const CanonicalPair& l2,
                                  unsigned n_max) {
  return run_pipeline(M, l1, l2, n_max, true);
}

DecompositionReport decompose_gcN(const ConformalModule& M, const CanonicalPair& l1, const CanonicalPair& l2,
                                  unsigned n_max) {
  return run_pipeline(M, l1, l2, n_max, false);
}

}  // namespace confalg
