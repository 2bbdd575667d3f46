// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <thread>

#include "confalg/virasoro.hpp"
#include "oracles.hpp"

using namespace confalg;

TEST_CASE("recipe actions match their defining formulas") {
  const Scalar alpha(2, 3);
  for (std::size_t N : {1u, 2u, 3u}) {
    const ConformalModule s = ConformalModule::gc_standard(N, alpha);
    const ConformalModule d = ConformalModule::gc_dual(N, alpha);
    for (unsigned n = 0; n <= 4; ++n)
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          CHECK(s.act_unit(n, i, j) == oracle::standard_action(N, alpha, n, i, j));
          CHECK(d.act_unit(n, i, j) == oracle::dual_action(N, alpha, n, i, j));
        }
  }
  const ConformalModule v = ConformalModule::vir_module(Scalar(3), Scalar(-1));
  CHECK(v.act_unit(1, 0, 0)(0, 0) == D() + Lam() * Scalar(3) - MPoly(1));
  CHECK_THROWS_AS(v.act_unit(0, 0, 0), InvalidArgument);
  const ConformalModule h = ConformalModule::hv_module(Scalar(1), Scalar(2), Scalar(-1, 2));
  CHECK(h.act_unit(0, 0, 0)(0, 0) == MPoly(Scalar(-1, 2)));
  CHECK_THROWS_AS(h.act_unit(2, 0, 0), InvalidArgument);
}

TEST_CASE("act is linear in A") {
  oracle::Random rnd(9);
  const ConformalModule m =
      ConformalModule::basis_change(ConformalModule::direct_sum({ConformalModule::gc_standard(2, Scalar(1)),
                                                                 ConformalModule::gc_dual(2, Scalar(-1, 2))}),
                                    rnd.invertible(4));
  for (int t = 0; t < 5; ++t) {
    const QMatrix a = rnd.matrix(2), b = rnd.matrix(2);
    const Scalar c = rnd.rational();
    for (unsigned n = 0; n <= 3; ++n) CHECK(m.act(n, a + b.scaled(c)) == m.act(n, a) + m.act(n, b).scaled(MPoly(c)));
  }
}

TEST_CASE("module axioms hold for recipe modules") {
  oracle::Random rnd(13);
  std::vector<ConformalModule> mods{ConformalModule::vir_module(Scalar(1, 2), Scalar(3)),
                                    ConformalModule::hv_module(Scalar(1), Scalar(2), Scalar(5)),
                                    ConformalModule::gc_standard(2, Scalar(1, 3)),
                                    ConformalModule::gc_dual(2, Scalar(-2))};
  mods.push_back(ConformalModule::direct_sum({mods[2], mods[3]}));
  mods.push_back(ConformalModule::basis_change(mods[4], rnd.invertible(4)));
  mods.push_back(ConformalModule::dual(mods[5]));
  for (const auto& m : mods) {
    const ModuleCheck c = check_module_axioms(m, 3);
    CHECK(c.ok);
    CHECK(c.failures.empty());
    CHECK(c.pairs_skipped == 0);
  }
}

TEST_CASE("module axioms fail on a perturbed explicit table") {
  const ConformalModule s = ConformalModule::gc_standard(2, Scalar(0));
  ActionTable t;
  for (const auto& g : s.generators(3)) t[g] = s.act_unit(g);
  const ConformalModule good = ConformalModule::explicit_table(Algebra::gc(2), 2, 3, t);
  const ModuleCheck ok = check_module_axioms(good, 3);
  CHECK(ok.ok);
  CHECK(ok.pairs_skipped > 0);
  t[Generator{1, 0, 1}](0, 1) += Lam();
  const ModuleCheck bad = check_module_axioms(ConformalModule::explicit_table(Algebra::gc(2), 2, 3, t), 3);
  CHECK_FALSE(bad.ok);
  REQUIRE_FALSE(bad.failures.empty());
  bool names_perturbed = false;
  for (const auto& w : bad.failures) {
    CHECK_FALSE(w.residual.is_zero());
    if ((w.a == Generator{1, 0, 1}) || (w.b == Generator{1, 0, 1})) names_perturbed = true;
  }
  CHECK(names_perturbed);
}

TEST_CASE("explicit tables: cutoff and validation") {
  ActionTable t;
  PolyMatrix f(1, 1);
  f(0, 0) = D();
  t[Generator{1, 0, 0}] = f;
  const ConformalModule m = ConformalModule::explicit_table(Algebra::gc(1), 1, 2, t);
  CHECK(m.act_unit(0, 0, 0).is_zero());
  CHECK_THROWS_AS(m.act_unit(3, 0, 0), CutoffExceeded);
  CHECK_THROWS_AS(ConformalModule::dual(m).act_unit(3, 0, 0), CutoffExceeded);
  CHECK_THROWS_AS(ConformalModule::explicit_table(Algebra::gc(1), 1, std::nullopt, t), InvalidArgument);
  CHECK_THROWS_AS(ConformalModule::explicit_table(Algebra::gc(1), 2, 2, t), DimensionMismatch);
  PolyMatrix bad(1, 1);
  bad(0, 0) = Mu();
  CHECK_THROWS_AS(ConformalModule::explicit_table(Algebra::gc(1), 1, 2, {{Generator{0, 0, 0}, bad}}), InvalidArgument);
  const ConformalModule zero = ConformalModule::explicit_table(Algebra::vir(), 2, std::nullopt, {});
  CHECK(zero.act_unit(1, 0, 0).is_zero());
  CHECK(check_module_axioms(zero, 4).ok);
}

TEST_CASE("conformal duals") {
  oracle::Random rnd(17);
  for (int t = 0; t < 10; ++t) {
    const Scalar delta = rnd.rational(), alpha = rnd.rational();
    CHECK(same_tables(dual_module(ConformalModule::vir_module(delta, alpha)),
                      ConformalModule::vir_module(Scalar(1) - delta, -alpha), 1));
  }
  for (std::size_t N : {1u, 2u, 3u}) {
    const Scalar a = rnd.rational();
    CHECK(same_tables(dual_module(ConformalModule::gc_standard(N, a)), ConformalModule::gc_dual(N, a), 4));
    CHECK(same_tables(dual_module(ConformalModule::gc_dual(N, a)), ConformalModule::gc_standard(N, a), 4));
    CHECK(check_module_axioms(dual_module(ConformalModule::gc_standard(N, a)), 2).ok);
  }
  const ConformalModule h = ConformalModule::hv_module(Scalar(2), Scalar(1), Scalar(3));
  CHECK(same_tables(dual_module(dual_module(h)), h, 1));
  CHECK(check_module_axioms(dual_module(h), 1).ok);
}

TEST_CASE("direct sums and basis changes") {
  const ConformalModule s = ConformalModule::direct_sum(
      {ConformalModule::gc_standard(2, Scalar(0)), ConformalModule::gc_dual(2, Scalar(0))});
  CHECK(s.rank() == 4);
  const PolyMatrix f = s.act_unit(2, 0, 1);
  CHECK(f.block(0, 2, 2, 2).is_zero());
  CHECK(f.block(2, 0, 2, 2).is_zero());
  CHECK(same_tables(ConformalModule::basis_change(s, QMatrix::identity(4)), s, 3));
  oracle::Random rnd(29);
  const QMatrix u = rnd.invertible(4);
  const ConformalModule twisted = ConformalModule::basis_change(s, u);
  CHECK(check_module_axioms(twisted, 2).ok);
  CHECK(same_tables(ConformalModule::basis_change(twisted, constant_inverse(u)), s, 4));
  QMatrix sing(4, 4);
  CHECK_THROWS_AS(ConformalModule::basis_change(s, sing), SingularMatrix);
  CHECK_THROWS_AS(ConformalModule::basis_change(s, QMatrix::identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(ConformalModule::direct_sum({ConformalModule::gc_standard(2, Scalar(0)),
                                               ConformalModule::gc_standard(3, Scalar(0))}),
                  DimensionMismatch);
}

TEST_CASE("restriction along a Virasoro element") {
  const Scalar a(2, 5), b(-3);
  const ConformalModule v = restrict_to_virasoro(canonical_virasoro(3, a, b), ConformalModule::gc_standard(3, Scalar(0)));
  CHECK(v.algebra() == Algebra::vir());
  const PolyMatrix f = v.act_unit(1, 0, 0);
  CHECK(f == to_poly(QMatrix::identity(3)).scaled(D() + Lam() * (Scalar(1) - a) + MPoly(b)));
  CHECK(check_module_axioms(v, 1).ok);

  // J^1_A + a₂ J^2_{AB₂} on the standard module: (∂+λ)A + a₂(∂+λ)² A B₂.
  const QMatrix A = QMatrix::unit(2, 0, 0), B = QMatrix::unit(2, 0, 1);
  const GcElement g = make_standard_higher(A, {{2, Scalar(4), B}});
  const PolyMatrix h = restrict_to_virasoro(g, ConformalModule::gc_standard(2, Scalar(0))).act_unit(1, 0, 0);
  CHECK(h == to_poly(A).scaled(D() + Lam()) + to_poly(A * B).scaled((D() + Lam()).pow(2) * Scalar(4)));
  CHECK(check_module_axioms(restrict_to_virasoro(g, ConformalModule::gc_dual(2, Scalar(1))), 1).ok);

  CHECK_THROWS_AS(restrict_to_virasoro(GcElement::term(0, QMatrix::identity(2)), ConformalModule::gc_standard(2, Scalar(0))),
                  NotVirasoro);
  CHECK_THROWS_AS(restrict_to_virasoro(canonical_virasoro(2, a, b), ConformalModule::gc_standard(3, Scalar(0))),
                  DimensionMismatch);
}

TEST_CASE("memoized tables are safe to read concurrently") {
  const ConformalModule m = ConformalModule::basis_change(
      ConformalModule::direct_sum({ConformalModule::gc_standard(3, Scalar(1)), ConformalModule::gc_dual(3, Scalar(2))}),
      oracle::Random(3).invertible(6));
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& g : m.generators(3)) {
        const PolyMatrix f = m.act_unit(g);
        if (f.rows() != 6) ok[t] = 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
  const ConformalModule copy = m;
  CHECK(same_tables(copy, m, 3));
}
