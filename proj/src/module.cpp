// SPDX-License-Identifier: Apache-2.0
#include "confalg/module.hpp"

#include <algorithm>
#include <mutex>

#include "confalg/linalg.hpp"
#include "confalg/virasoro.hpp"

namespace confalg {

bool Algebra::has_generator(unsigned n, std::size_t i, std::size_t j) const {
  if (i >= N || j >= N) return false;
  switch (kind) {
    case AlgebraKind::Vir: return n == 1;
    case AlgebraKind::HV: return n <= 1;
    case AlgebraKind::Gc: return true;
  }
  return false;
}

std::string Algebra::name() const {
  switch (kind) {
    case AlgebraKind::Vir: return "vir";
    case AlgebraKind::HV: return "hv";
    case AlgebraKind::Gc: return "gc";
  }
  return "?";
}

struct ConformalModule::Node {
  Algebra algebra;
  std::size_t rank = 0;
  std::optional<unsigned> cutoff;
  Recipe recipe;
  mutable std::mutex mu;
  mutable ActionTable cache;
};

const Algebra& ConformalModule::algebra() const { return node_->algebra; }
std::size_t ConformalModule::rank() const { return node_->rank; }
const ConformalModule::Recipe& ConformalModule::recipe() const { return node_->recipe; }
std::optional<unsigned> ConformalModule::cutoff() const { return node_->cutoff; }

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::optional<unsigned> min_cutoff(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

ConformalModule ConformalModule::vir_module(const Scalar& delta, const Scalar& alpha) {
  auto node = std::make_shared<Node>();
  node->algebra = Algebra::vir();
  node->rank = 1;
  node->recipe = VirRecipe{delta, alpha};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::hv_module(const Scalar& delta, const Scalar& alpha, const Scalar& beta) {
  auto node = std::make_shared<Node>();
  node->algebra = Algebra::hv();
  node->rank = 1;
  node->recipe = HvRecipe{delta, alpha, beta};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::gc_standard(std::size_t n, const Scalar& alpha) {
  auto node = std::make_shared<Node>();
  node->algebra = Algebra::gc(n);
  node->rank = n;
  node->recipe = StandardRecipe{alpha};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::gc_dual(std::size_t n, const Scalar& alpha) {
  auto node = std::make_shared<Node>();
  node->algebra = Algebra::gc(n);
  node->rank = n;
  node->recipe = DualStandardRecipe{alpha};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::direct_sum(const std::vector<ConformalModule>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of no modules");
  auto node = std::make_shared<Node>();
  node->algebra = parts.front().algebra();
  node->cutoff = parts.front().cutoff();
  for (const auto& p : parts) {
    if (!(p.algebra() == node->algebra)) throw DimensionMismatch("direct sum over different algebras");
    node->rank += p.rank();
    node->cutoff = min_cutoff(node->cutoff, p.cutoff());
  }
  node->recipe = DirectSumRecipe{parts};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::basis_change(const ConformalModule& inner, const QMatrix& u) {
  if (u.rows() != inner.rank() || u.cols() != inner.rank()) {
    throw DimensionMismatch("basis change must be rank×rank");
  }
  QMatrix u_inv = constant_inverse(u);
  auto node = std::make_shared<Node>();
  node->algebra = inner.algebra();
  node->rank = inner.rank();
  node->cutoff = inner.cutoff();
  node->recipe = BasisChangeRecipe{{inner}, u, std::move(u_inv)};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::explicit_table(const Algebra& algebra, std::size_t rank,
                                                std::optional<unsigned> n_max, ActionTable table) {
  if (rank == 0) throw InvalidArgument("module rank must be ≥ 1");
  if (algebra.kind == AlgebraKind::Gc && !n_max) throw InvalidArgument("explicit gc tables need n_max");
  if (algebra.kind != AlgebraKind::Gc) n_max.reset();
  for (const auto& [g, f] : table) {
    if (!algebra.has_generator(g.n, g.i, g.j)) throw InvalidArgument("table entry is not a generator of " + algebra.name());
    if (n_max && g.n > *n_max) throw InvalidArgument("table entry above n_max");
    if (f.rows() != rank || f.cols() != rank) throw DimensionMismatch("table entry is not rank×rank");
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        if (!f(i, j).only_uses({Var::D, Var::L})) throw InvalidArgument("action entries may use ∂ and λ only");
  }
  auto node = std::make_shared<Node>();
  node->algebra = algebra;
  node->rank = rank;
  node->cutoff = n_max;
  node->recipe = ExplicitRecipe{n_max, std::move(table)};
  return ConformalModule(std::move(node));
}

ConformalModule ConformalModule::dual(const ConformalModule& inner) {
  auto node = std::make_shared<Node>();
  node->algebra = inner.algebra();
  node->rank = inner.rank();
  node->cutoff = inner.cutoff();
  node->recipe = DualRecipe{{inner}};
  return ConformalModule(std::move(node));
}

PolyMatrix ConformalModule::act_unit(unsigned n, std::size_t i, std::size_t j) const {
  if (!algebra().has_generator(n, i, j)) {
    throw InvalidArgument("J^" + std::to_string(n) + "_{E" + std::to_string(i + 1) + std::to_string(j + 1) +
                          "} is not a generator of " + algebra().name());
  }
  if (cutoff() && n > *cutoff()) {
    throw CutoffExceeded("degree " + std::to_string(n) + " exceeds table cutoff " + std::to_string(*cutoff()));
  }
  const Generator g{n, i, j};
  {
    std::lock_guard<std::mutex> lock(node_->mu);
    auto it = node_->cache.find(g);
    if (it != node_->cache.end()) return it->second;
  }
  PolyMatrix f = compute(g);
  std::lock_guard<std::mutex> lock(node_->mu);
  return node_->cache.try_emplace(g, std::move(f)).first->second;
}

PolyMatrix ConformalModule::compute(const Generator& g) const {
  const std::size_t N = algebra().N;
  return std::visit(
      Overloaded{
          [&](const VirRecipe& r) {
            PolyMatrix f(1, 1);
            f(0, 0) = D() + Lam() * r.delta + MPoly(r.alpha);
            return f;
          },
          [&](const HvRecipe& r) {
            PolyMatrix f(1, 1);
            f(0, 0) = g.n == 1 ? D() + Lam() * r.delta + MPoly(r.alpha) : MPoly(r.beta);
            return f;
          },
          [&](const StandardRecipe& r) {
            const MPoly s = (D() + Lam() + MPoly(r.alpha)).pow(g.n);
            return to_poly(QMatrix::unit(N, g.i, g.j)).scaled(s);
          },
          [&](const DualStandardRecipe& r) {
            const MPoly s = -(-D() + MPoly(r.alpha)).pow(g.n);
            return to_poly(QMatrix::unit(N, g.j, g.i)).scaled(s);
          },
          [&](const DirectSumRecipe& r) {
            std::vector<PolyMatrix> blocks;
            for (const auto& p : r.parts) blocks.push_back(p.act_unit(g));
            return block_diagonal(blocks);
          },
          [&](const BasisChangeRecipe& r) {
            return to_poly(r.u_inv) * r.inner.front().act_unit(g) * to_poly(r.u);
          },
          [&](const ExplicitRecipe& r) {
            auto it = r.table.find(g);
            return it == r.table.end() ? PolyMatrix(rank(), rank()) : it->second;
          },
          [&](const DualRecipe& r) {
            const PolyMatrix f = r.inner.front().act_unit(g);
            return -substitute(f, Var::D, -D() - Lam()).transpose();
          },
      },
      recipe());
}

PolyMatrix ConformalModule::act(unsigned n, const QMatrix& a) const {
  const std::size_t N = algebra().N;
  if (a.rows() != N || a.cols() != N) throw DimensionMismatch("act: A must be N×N");
  PolyMatrix f(rank(), rank());
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!a(i, j).is_zero()) f += act_unit(n, i, j).scaled(a(i, j));
  return f;
}

PolyMatrix ConformalModule::act_value(const GcValue& g, const MPoly& nu) const {
  if (g.N() != algebra().N) throw DimensionMismatch("element and module have different N");
  PolyMatrix out(rank(), rank());
  const MPoly neg = -nu;
  for (const auto& [n, coeffs] : g.terms()) {
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
      for (std::size_t j = 0; j < coeffs.cols(); ++j) {
        if (coeffs(i, j).is_zero()) continue;
        PolyMatrix f = act_unit(n, i, j);
        if (!(nu == Lam())) f = substitute(f, Var::L, nu);
        out += f.scaled(coeffs(i, j).substitute(Var::D, neg));
      }
  }
  return out;
}

std::vector<Generator> ConformalModule::generators(unsigned n_max) const {
  std::vector<Generator> out;
  const std::size_t N = algebra().N;
  for (unsigned n = 0; n <= n_max; ++n)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (algebra().has_generator(n, i, j)) out.push_back({n, i, j});
  return out;
}

ModuleCheck check_module_axioms(const ConformalModule& m, unsigned n_max) {
  ModuleCheck out;
  const std::size_t N = m.algebra().N;
  const MPoly lam = Lam();
  const MPoly mu = Mu();
  const auto gens = m.generators(n_max);

  auto in_range = [&](unsigned deg) { return !m.cutoff() || deg <= *m.cutoff(); };

  for (const auto& a : gens) {
    if (!in_range(a.n)) continue;
    // (M1): (∂a) _λ v = -λ (a _λ v).
    const GcElement ga = GcElement::term(a.n, QMatrix::unit(N, a.i, a.j));
    const PolyMatrix lhs = m.act_element(d_times(ga));
    const PolyMatrix rhs = m.act_unit(a).scaled(-lam);
    if (!(lhs == rhs)) {
      out.ok = false;
      out.failures.push_back({a.n, a.n, a, a, lhs - rhs, "M1"});
    }
  }

  // Per-generator substitutions of F_g(∂, λ), shared by all pairs.
  struct Shifted {
    PolyMatrix f;           // F(∂, λ)
    PolyMatrix at_mu;       // F(∂, μ)
    PolyMatrix at_mu_shift; // F(∂+λ, μ)
    PolyMatrix shift_mu;    // F(∂+μ, λ)
  };
  std::map<Generator, Shifted> cache;
  for (const auto& g : gens) {
    if (!in_range(g.n)) continue;
    Shifted s;
    s.f = m.act_unit(g);
    s.at_mu = substitute(s.f, Var::L, mu);
    s.at_mu_shift = substitute(s.at_mu, Var::D, D() + lam);
    s.shift_mu = substitute(s.f, Var::D, D() + mu);
    cache.emplace(g, std::move(s));
  }
  std::map<Generator, PolyMatrix> at_sum;  // F(∂, λ+μ)
  auto acting_at_sum = [&](const Generator& g) -> const PolyMatrix& {
    auto it = at_sum.find(g);
    if (it == at_sum.end()) it = at_sum.emplace(g, substitute(m.act_unit(g), Var::L, lam + mu)).first;
    return it->second;
  };
  const MPoly minus_sum = -(lam + mu);

  for (const auto& a : gens) {
    for (const auto& b : gens) {
      if (!in_range(a.n + b.n)) {
        ++out.pairs_skipped;
        continue;
      }
      const Shifted& sa = cache.at(a);
      const Shifted& sb = cache.at(b);
      const PolyMatrix left = sa.f * sb.at_mu_shift - sb.at_mu * sa.shift_mu;
      const GcElement ja = GcElement::term(a.n, QMatrix::unit(N, a.i, a.j));
      const GcElement jb = GcElement::term(b.n, QMatrix::unit(N, b.i, b.j));
      const GcValue br = bracket(ja, jb, lam);
      PolyMatrix right(m.rank(), m.rank());
      for (const auto& [n, coeffs] : br.terms())
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j)
            if (!coeffs(i, j).is_zero())
              right += acting_at_sum({n, i, j}).scaled(coeffs(i, j).substitute(Var::D, minus_sum));
      ++out.pairs_checked;
      if (!(left == right)) {
        out.ok = false;
        out.failures.push_back({a.n, b.n, a, b, left - right, "M2"});
      }
    }
  }
  return out;
}

ConformalModule dual_module(const ConformalModule& m) { return ConformalModule::dual(m); }

ConformalModule restrict_to_virasoro(const GcElement& g, const ConformalModule& m) {
  if (g.N() != m.algebra().N) throw DimensionMismatch("element and module have different N");
  if (!is_virasoro(g).is_virasoro) throw NotVirasoro("restrict_to_virasoro: element is not a Virasoro element");
  ActionTable table;
  table.emplace(Generator{1, 0, 0}, m.act_element(g));
  return ConformalModule::explicit_table(Algebra::vir(), m.rank(), std::nullopt, std::move(table));
}

bool same_tables(const ConformalModule& a, const ConformalModule& b, unsigned n_max) {
  if (!(a.algebra() == b.algebra()) || a.rank() != b.rank()) return false;
  for (const auto& g : a.generators(n_max)) {
    if (!(a.act_unit(g) == b.act_unit(g))) return false;
  }
  return true;
}

}  // namespace confalg
