// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "confalg/virasoro.hpp"
#include "oracles.hpp"

using namespace confalg;

namespace {

QMatrix mat(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
  QMatrix m(n, n);
  for (auto [i, j, v] : entries) m(i - 1, j - 1) = Scalar(v);
  return m;
}

// The two idempotents A_1 = E11+E21, A_2 = -E21+E22 embedded in gc_n.
QMatrix a1(std::size_t n) { return mat(n, {{1, 1, 1}, {2, 1, 1}}); }
QMatrix a2(std::size_t n) { return mat(n, {{2, 1, -1}, {2, 2, 1}}); }

NonstandardParams gc4_params() {
  NonstandardParams p;
  p.A = {a1(4), a2(4)};
  p.B = p.A;
  p.a = {Scalar(0), Scalar(1)};
  p.C = mat(4, {{3, 3, 1}});
  p.D = {mat(4, {{3, 4, 1}})};
  p.b = {Scalar(1)};
  return p;
}

}  // namespace

TEST_CASE("gc_1 Virasoro elements") {
  const VirasoroCertificate c = is_virasoro(make_gc1_virasoro(Scalar(2), Scalar(-1, 3)));
  CHECK(c.is_virasoro);
  CHECK(c.residual.is_zero());
  CHECK(c.degree == 1u);
  CHECK(c.is_standard == true);
  CHECK(make_gc1_virasoro(Scalar(0), Scalar(0)) == GcElement::term(1, QMatrix::identity(1)));
  CHECK(is_virasoro(make_gc1_virasoro(Scalar(1), Scalar(0))).is_virasoro);
  CHECK(is_virasoro(make_gc1_virasoro(Scalar(-2), Scalar(5, 7))).is_virasoro);
  CHECK(matches_gc1_form(make_gc1_virasoro(Scalar(-2), Scalar(5, 7))));
  CHECK_FALSE(matches_gc1_form(GcElement::term(1, QMatrix::identity(1), D())));
}

TEST_CASE("degree zero and zero elements are not Virasoro") {
  for (std::size_t N : {1u, 2u, 3u}) {
    const VirasoroCertificate c = is_virasoro(GcElement::term(0, QMatrix::identity(N)));
    CHECK_FALSE(c.is_virasoro);
    CHECK_FALSE(c.residual.is_zero());
    CHECK_FALSE(c.is_standard.has_value());
  }
  const VirasoroCertificate z = is_virasoro(GcElement(2));
  CHECK_FALSE(z.is_virasoro);
  CHECK_FALSE(z.degree.has_value());
  CHECK_THROWS_AS(is_standard(GcElement::term(0, QMatrix::identity(2))), NotVirasoro);
}

TEST_CASE("standardness") {
  CHECK(is_standard(canonical_virasoro(3, Scalar(1, 2), Scalar(4))));
  CHECK(is_standard(GcElement::term(1, QMatrix::unit(3, 1, 1))));
  CHECK(is_standard(GcElement::term(1, a1(2))));
  CHECK_FALSE(has_standard_shape(GcElement::term(0, QMatrix::unit(2, 0, 0)) +
                                 GcElement::term(0, QMatrix::unit(2, 1, 1), D())));
}

TEST_CASE("degree-one standard constructors") {
  const GcElement f1 = make_standard_deg1(1, Scalar(1), Scalar(0), QMatrix::unit(2, 0, 0), QMatrix::unit(2, 0, 0));
  CHECK(f1 == GcElement::term(0, QMatrix::unit(2, 0, 0), D()) + GcElement::term(1, QMatrix::unit(2, 0, 0)));
  CHECK(is_virasoro(f1).is_virasoro);
  CHECK(is_standard(f1));

  const GcElement f2 = make_standard_deg1(2, Scalar(5), std::nullopt, QMatrix::identity(2), QMatrix(2, 2));
  CHECK(f2 == GcElement::term(1, QMatrix::identity(2)));

  const GcElement f3 = make_standard_deg1(2, Scalar(3), std::nullopt, QMatrix::unit(2, 0, 0), QMatrix::unit(2, 0, 1));
  CHECK(f3 == GcElement::term(0, QMatrix::unit(2, 0, 1), MPoly(3)) + GcElement::term(1, QMatrix::unit(2, 0, 0)));
  CHECK(is_virasoro(f3).is_virasoro);
  const Deg1FormMatch fm = match_deg1_forms(f3);
  CHECK(fm.form2);

  CHECK_THROWS_AS(make_standard_deg1(1, Scalar(1), Scalar(0), QMatrix::unit(2, 0, 1), QMatrix(2, 2)), NotIdempotent);
  CHECK_THROWS_AS(make_standard_deg1(1, Scalar(1), Scalar(0), QMatrix(2, 2), QMatrix(2, 2)), NotIdempotent);
  CHECK_THROWS_AS(make_standard_deg1(2, Scalar(1), Scalar(0), QMatrix::identity(2), QMatrix(2, 2)), InvalidArgument);
  CHECK_THROWS_AS(make_standard_deg1(3, Scalar(1), std::nullopt, QMatrix::identity(2), QMatrix(2, 2)), InvalidArgument);
}

TEST_CASE("higher-degree standard constructor") {
  const GcElement g = make_standard_higher(QMatrix::unit(2, 0, 0), {{2, Scalar(1), QMatrix::unit(2, 0, 1)}});
  CHECK(g == GcElement::term(1, QMatrix::unit(2, 0, 0)) + GcElement::term(2, QMatrix::unit(2, 0, 1)));
  const VirasoroCertificate c = is_virasoro(g);
  CHECK(c.is_virasoro);
  CHECK(c.degree == 2u);
  CHECK(c.is_standard == true);
  CHECK(make_standard_higher(QMatrix::identity(2), {}) == GcElement::term(1, QMatrix::identity(2)));
  try {
    make_standard_higher(QMatrix::unit(2, 0, 0), {{3, Scalar(1), QMatrix::unit(2, 0, 0)}});
    FAIL("expected ConstraintViolated");
  } catch (const ConstraintViolated& e) {
    CHECK(std::string(e.what()).find("B_3") != std::string::npos);
  }
}

TEST_CASE("non-standard T1/T2 in gc_2") {
  NonstandardParams p;
  p.A = {a1(2), a2(2)};
  p.B = p.A;
  p.a = {Scalar(0), Scalar(1)};
  for (auto kind : {NonstandardKind::T1, NonstandardKind::T2}) {
    const GcElement g = make_nonstandard(kind, p);
    const VirasoroCertificate c = is_virasoro(g);
    CHECK(c.is_virasoro);
    CHECK(c.degree == 1u);
    CHECK(c.is_standard == false);
  }
}

TEST_CASE("non-standard T3/T4 with C·D·C = 0 in gc_4") {
  for (auto kind : {NonstandardKind::T3, NonstandardKind::T4}) {
    const VirasoroCertificate c = is_virasoro(make_nonstandard(kind, gc4_params()));
    CHECK(c.is_virasoro);
    CHECK(c.degree == 2u);
    CHECK(c.is_standard == false);
  }
}

TEST_CASE("gc_3 data with C·D_2·C ≠ 0 is rejected by the constructor") {
  NonstandardParams p;
  p.A = {a1(3), a2(3)};
  p.B = p.A;
  p.a = {Scalar(0), Scalar(1)};
  p.C = mat(3, {{3, 3, 1}});
  p.D = {mat(3, {{3, 3, 1}})};
  p.b = {Scalar(1)};
  CHECK_THROWS_AS(make_nonstandard(NonstandardKind::T3, p), ConstraintViolated);
  // The literal element fails the Virasoro equation, only in the E33 block.
  GcElement t3 = GcElement::term(1, QMatrix::identity(3)) + GcElement::term(0, a1(3)) +
                 GcElement::term(0, a2(3), D() + MPoly(1)) + GcElement::term(2, QMatrix::unit(3, 2, 2));
  const VirasoroCertificate c = is_virasoro(t3);
  CHECK_FALSE(c.is_virasoro);
  for (const auto& [n, m] : c.residual.terms()) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != 2 || j != 2) CHECK(m(i, j).is_zero());
  }
}

TEST_CASE("non-standard constraint violations are named") {
  auto expect = [](NonstandardParams p, NonstandardKind k, const std::string& needle) {
    try {
      make_nonstandard(k, p);
      FAIL("expected ConstraintViolated for " << needle);
    } catch (const ConstraintViolated& e) {
      CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, std::string(e.what()));
    }
  };
  NonstandardParams base;
  base.A = {a1(2), a2(2)};
  base.B = base.A;
  base.a = {Scalar(0), Scalar(1)};

  NonstandardParams p = base;
  p.a = {Scalar(1), Scalar(1)};
  expect(p, NonstandardKind::T1, "a_1 = a_2");
  p = base;
  p.A = {a1(2)};
  p.B = {a1(2)};
  p.a = {Scalar(0)};
  expect(p, NonstandardKind::T1, "k ≥ 2");
  p = base;
  p.A[1] = a1(2);
  p.B[1] = a1(2);
  expect(p, NonstandardKind::T2, "A_1A_2");
  p = base;
  p.B[0] = QMatrix(2, 2);
  expect(p, NonstandardKind::T1, "A_1B_1A_1 = 0");
  p = base;
  p.A[0] = QMatrix::unit(2, 0, 1);
  expect(p, NonstandardKind::T1, "A_1²");
  NonstandardParams q = gc4_params();
  q.D = {mat(4, {{3, 1, 1}})};
  expect(q, NonstandardKind::T3, "CD_2A_1");
  q = gc4_params();
  q.C = mat(4, {{1, 1, 1}});
  expect(q, NonstandardKind::T4, "A_1C");
}

TEST_CASE("degree-one grid classification") {
  const GridReport r1 = classify_deg1_grid(1, {Scalar(-1), Scalar(0), Scalar(1)}, 1);
  CHECK(r1.candidates == 81);
  CHECK(r1.virasoro == 9);
  CHECK(r1.counterexamples.empty());
  const GridReport r2 = classify_deg1_grid(2, {Scalar(0), Scalar(1)}, 0);
  CHECK(r2.candidates == 256);
  CHECK(r2.virasoro > 0);
  CHECK(r2.counterexamples.empty());
  const GridReport r3 = classify_deg1_grid(2, {}, 1);
  CHECK(r3.candidates == 0);
  CHECK(r3.counterexamples.empty());
}
