// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "confalg/regularity.hpp"
#include "confalg/virasoro.hpp"
#include "oracles.hpp"

using namespace confalg;

TEST_CASE("regularity of rank-one and standard modules") {
  const RegularityReport r = check_regular(ConformalModule::vir_module(Scalar(3, 2), Scalar(-1)));
  CHECK(r.regular);
  REQUIRE(r.weights.size() == 1);
  CHECK(r.weights[0] == Weight{Scalar(3, 2), Scalar(-1)});

  const Scalar a(1, 3), b(2), alpha(-5, 4);
  const RegularityReport s = check_regular(canonical_virasoro(3, a, b), ConformalModule::gc_standard(3, alpha));
  CHECK(s.regular);
  CHECK(s.weights == std::vector<Weight>(3, Weight{Scalar(1) - a, alpha + b}));

  // On the dual: weight a, shift -α-b.
  const RegularityReport d = check_regular(canonical_virasoro(2, a, b), ConformalModule::gc_dual(2, alpha));
  CHECK(d.regular);
  CHECK(d.weights == std::vector<Weight>(2, Weight{a, -alpha - b}));

  CHECK_THROWS_AS(check_regular(GcElement::term(0, QMatrix::identity(2)), ConformalModule::gc_standard(2, alpha)),
                  NotVirasoro);
  CHECK_THROWS_AS(check_regular(ConformalModule::gc_standard(2, alpha)), InvalidArgument);
}

TEST_CASE("scrambled bases are irregular and unscrambling restores weights") {
  const ConformalModule m = ConformalModule::direct_sum(
      {ConformalModule::vir_module(Scalar(1), Scalar(0)), ConformalModule::vir_module(Scalar(0), Scalar(0))});
  QMatrix u(2, 2);
  u(0, 0) = Scalar(1);
  u(0, 1) = Scalar(1);
  u(1, 1) = Scalar(1);
  const RegularityReport r = check_regular(ConformalModule::basis_change(m, u));
  CHECK_FALSE(r.regular);
  REQUIRE(r.offending.has_value());
  CHECK(r.offending->row != r.offending->col);
  const RegularityReport back =
      check_regular(ConformalModule::basis_change(ConformalModule::basis_change(m, u), constant_inverse(u)));
  CHECK(back.regular);
  CHECK(back.weights == check_regular(m).weights);
}

TEST_CASE("irregular diagonal shapes") {
  PolyMatrix f(1, 1);
  f(0, 0) = D() * Scalar(2) + Lam();
  CHECK_FALSE(regularity_of_action(f).regular);
  f(0, 0) = D() + Lam() * Lam();
  CHECK_FALSE(regularity_of_action(f).regular);
  f(0, 0) = MPoly();
  CHECK_FALSE(regularity_of_action(f).regular);
  f(0, 0) = D() + D() * Lam();
  CHECK_FALSE(regularity_of_action(f).regular);
  f(0, 0) = D();
  CHECK(regularity_of_action(f).regular);
}

TEST_CASE("weight products") {
  const RegularityReport r1 = check_regular(ConformalModule::vir_module(Scalar(5), Scalar(1)));
  CHECK(weight_product({r1}).value == Scalar(5));
  const RegularityReport r0 = check_regular(ConformalModule::direct_sum(
      {ConformalModule::vir_module(Scalar(1), Scalar(0)), ConformalModule::vir_module(Scalar(0), Scalar(7))}));
  CHECK(weight_product({r0}).value.is_zero());

  const Scalar a(3, 7);
  const ConformalModule s = ConformalModule::gc_standard(2, Scalar(0));
  const WeightProduct w =
      weight_product({check_regular(canonical_virasoro(2, Scalar(0), Scalar(0)), s), check_regular(canonical_virasoro(2, a, Scalar(0)), s)});
  CHECK(w.value == (Scalar(1) - a) * (Scalar(1) - a));
  CHECK(w.factors.size() == 4);

  RegularityReport bad;
  CHECK_THROWS_AS(weight_product({r1, bad}), NotRegular);
}

TEST_CASE("weight product is multiplicative under direct sums") {
  oracle::Random rnd(31);
  for (int t = 0; t < 10; ++t) {
    const ConformalModule m1 = ConformalModule::gc_standard(2, rnd.rational());
    const ConformalModule m2 = ConformalModule::gc_dual(2, rnd.rational());
    const std::vector<GcElement> gamma{canonical_virasoro(2, rnd.rational(), rnd.rational()),
                                       canonical_virasoro(2, rnd.rational(), rnd.rational())};
    auto p = [&](const ConformalModule& m) {
      std::vector<RegularityReport> rs;
      for (const auto& g : gamma) rs.push_back(check_regular(g, m));
      return weight_product(rs).value;
    };
    CHECK(p(ConformalModule::direct_sum({m1, m2})) == p(m1) * p(m2));
  }
}

TEST_CASE("Vir semisimplicity") {
  const VirSemisimpleResult r = vir_semisimple(ConformalModule::direct_sum(
      {ConformalModule::vir_module(Scalar(1), Scalar(0)), ConformalModule::vir_module(Scalar(2), Scalar(1))}));
  CHECK(r.semisimple);
  CHECK(r.summands == std::vector<Weight>{{Scalar(1), Scalar(0)}, {Scalar(2), Scalar(1)}});
  for (const auto& s : r.summands) CHECK_FALSE(s.delta.is_zero());

  const VirSemisimpleResult z = vir_semisimple(ConformalModule::vir_module(Scalar(0), Scalar(0)));
  CHECK_FALSE(z.semisimple);
  CHECK(z.p == Scalar(0));

  const VirSemisimpleResult triv = vir_semisimple(ConformalModule::explicit_table(Algebra::vir(), 1, std::nullopt, {}));
  CHECK_FALSE(triv.semisimple);
  CHECK_FALSE(triv.report.regular);
  CHECK_THROWS_AS(vir_semisimple(ConformalModule::gc_standard(1, Scalar(0))), InvalidArgument);
}

TEST_CASE("HV reduction") {
  const Scalar a0(7, 3);
  // J^1 and ∂J^0 + J^1 on the standard gc_1 module.
  std::vector<HvData> h = hv_reduce({Scalar(0), Scalar(0), {{Scalar(1), a0}}}, {Scalar(1), Scalar(0), {{Scalar(0), a0}}});
  REQUIRE(h.size() == 1);
  CHECK(h[0] == HvData{Scalar(1), Scalar(1), a0});

  // a₁ = a₂, b₁ ≠ b₂: β from the constant term alone.
  const Scalar beta(-2, 5);
  h = hv_reduce({Scalar(1), Scalar(3), {{Scalar(4), Scalar(1)}}},
                {Scalar(1), Scalar(-1), {{Scalar(4), Scalar(1) - Scalar(4) * beta}}});
  CHECK(h[0].beta == beta);

  CHECK_THROWS_AS(hv_reduce({Scalar(0), Scalar(0), {{Scalar(1), Scalar(0)}}}, {Scalar(1), Scalar(1), {{Scalar(0), Scalar(5)}}}),
                  InconsistentData);
  CHECK_THROWS_AS(hv_reduce({Scalar(0), Scalar(0), {}}, {Scalar(0), Scalar(0), {}}), InvalidArgument);
}

TEST_CASE("HV reduction round-trips through hv_module") {
  oracle::Random rnd(37);
  for (int t = 0; t < 20; ++t) {
    const HvData truth{rnd.rational(), rnd.rational(), rnd.rational()};
    const ConformalModule m = ConformalModule::hv_module(truth.delta, truth.alpha, truth.beta);
    Scalar a1 = rnd.rational(), b1 = rnd.rational(), a2 = rnd.rational(), b2 = rnd.rational();
    if (a1 == a2 && b1 == b2) b2 += Scalar(1);
    auto act = [&](const Scalar& a, const Scalar& b) {
      return check_regular(make_gc1_virasoro(a, b), m);
    };
    const RegularityReport r1 = act(a1, b1), r2 = act(a2, b2);
    REQUIRE(r1.regular);
    REQUIRE(r2.regular);
    const std::vector<HvData> h = hv_reduce({a1, b1, r1.weights}, {a2, b2, r2.weights});
    CHECK(h[0] == truth);
    const ConformalModule back = ConformalModule::hv_module(h[0].delta, h[0].alpha, h[0].beta);
    CHECK(check_regular(make_gc1_virasoro(a1, b1), back).weights == r1.weights);
    CHECK(check_regular(make_gc1_virasoro(a2, b2), back).weights == r2.weights);
  }
}
