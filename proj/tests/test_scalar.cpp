#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ckq/formal.hpp"
#include "ckq/scalar.hpp"

using namespace ckq;

namespace {

GaussRational q(long n, long d = 1) { return GaussRational::ratio(n, d); }
const GaussRational I = GaussRational::i();

DualCoeff random_dual(std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  auto g = [&] { return GaussRational(Rational(d(rng)), Rational(d(rng))); };
  return {g(), g(), g(), g()};
}

}  // namespace

TEST_CASE("gauss rationals") {
  GaussRational a(Rational(1, 2), Rational(3));
  CHECK(a * a.inverse() == GaussRational(1));
  CHECK(I * I == GaussRational(-1));
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK_THROWS_AS(GaussRational().inverse(), std::domain_error);
  CHECK(GaussRational::ratio(2, 4) == q(1, 2));
}

TEST_CASE("dual_mul examples") {
  auto i1 = DualCoeff::iota1(), i2 = DualCoeff::iota2();
  CHECK(dual_mul(i1, i1).is_zero());
  CHECK(dual_mul(i1, i2) == DualCoeff::iota12());
  CHECK(dual_mul(DualCoeff(1) + i1, DualCoeff(1) - i1) == DualCoeff(1));
}

TEST_CASE("dual coefficients form a commutative ring") {
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    auto a = random_dual(rng), b = random_dual(rng), c = random_dual(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    DualCoeff nil = a;
    nil[0] = 0;
    DualCoeff sq = nil * nil;
    CHECK(sq[0].is_zero());
    CHECK(sq[1].is_zero());
    CHECK(sq[2].is_zero());
    CHECK((sq * nil).is_zero());
    if (a.is_unit()) CHECK(a * a.inverse() == DualCoeff(1));
  }
}

TEST_CASE("j assignments") {
  CHECK(JAssign::all().size() == 4);
  JAssign d{JAssign::Value::dual, JAssign::Value::dual};
  CHECK(d.monomial(1, 1) == DualCoeff::iota12());
  CHECK(d.monomial(2, 0).is_zero());
  CHECK_THROWS_AS(d.monomial(-1, 0), std::domain_error);
  CHECK(JAssign::standard().monomial(-3, 2) == DualCoeff(1));
  CHECK(JAssign::parse("i1,i2") == d);
  CHECK_THROWS(JAssign::parse("2,1"));
}

TEST_CASE("series_arith examples") {
  ZSeries one_plus = ZSeries::constant(1, 3) + ZSeries::monomial(1, 1, 3);
  ZSeries one_minus = ZSeries::constant(1, 3) - ZSeries::monomial(1, 1, 3);
  CHECK(series_arith(one_plus, one_minus, SeriesOp::mul) ==
        ZSeries::constant(1, 3) - ZSeries::monomial(1, 2, 3));
  CHECK((ZSeries::monomial(1, 3, 3) * ZSeries::monomial(1, 1, 3)).is_zero());
  ZSeries iz = ZSeries::monomial(DualCoeff::iota1(), 1, 3);
  CHECK((iz * iz).is_zero());
  CHECK_THROWS_AS(ZSeries(3) + ZSeries(4), OrderMismatch);
}

TEST_CASE("structure functions") {
  const int N = 3;
  ZSeries e = structure_fn(StructureKind::exp, 1, 1, N);
  CHECK(e[0] == DualCoeff(1));
  CHECK(e[1] == DualCoeff(1));
  CHECK(e[2] == DualCoeff(q(1, 2)));
  CHECK(e[3] == DualCoeff(q(1, 6)));

  ZSeries s = structure_fn(StructureKind::sinhc, 1, DualCoeff::iota12(), 8);
  CHECK(s == ZSeries::monomial(1, 1, 8));
  CHECK(structure_fn(StructureKind::cosh, 1, DualCoeff::iota1(), 8) == ZSeries::constant(1, 8));

  for (DualCoeff J : {DualCoeff(1), DualCoeff::iota1(), DualCoeff::iota12()}) {
    for (GaussRational sc : {q(1), q(1, 2), I, q(-3, 2)}) {
      ZSeries c = structure_fn(StructureKind::cosh, sc, J, 8);
      ZSeries sh = structure_fn(StructureKind::sinh, sc, J, 8);
      ZSeries ex = structure_fn(StructureKind::exp, sc, J, 8);
      CHECK(c * c - sh * sh == ZSeries::constant(1, 8));
      CHECK(ex == c + sh);
      CHECK(sh == J * structure_fn(StructureKind::sinhc, sc, J, 8));
    }
  }
}

TEST_CASE("contracted structure functions do not depend on the truncation") {
  for (DualCoeff J : {DualCoeff::iota1(), DualCoeff::iota2(), DualCoeff::iota12()})
    for (auto k : {StructureKind::exp, StructureKind::cosh, StructureKind::sinh,
                   StructureKind::sinhc}) {
      ZSeries a = structure_fn(k, q(1, 2), J, 4);
      ZSeries b = structure_fn(k, q(1, 2), J, 10);
      CHECK(a.with_order(10) == b);
    }
}

TEST_CASE("series_sqrt_one_plus") {
  CHECK(series_sqrt_one_plus(ZSeries(6)) == ZSeries::constant(1, 6));
  ZSeries sq = ZSeries::monomial(2, 1, 6) + ZSeries::monomial(1, 2, 6);
  CHECK(series_sqrt_one_plus(sq) == ZSeries::constant(1, 6) + ZSeries::monomial(1, 1, 6));
  // binomial(1/2, k): 1, 1/2, -1/8, 1/16, -5/128
  ZSeries r = series_sqrt_one_plus(ZSeries::monomial(1, 1, 4));
  CHECK(r[1] == DualCoeff(q(1, 2)));
  CHECK(r[2] == DualCoeff(q(-1, 8)));
  CHECK(r[3] == DualCoeff(q(1, 16)));
  CHECK(r[4] == DualCoeff(q(-5, 128)));
  std::mt19937 rng(3);
  for (int n = 0; n < 20; ++n) {
    ZSeries s(6);
    for (int k = 1; k <= 6; ++k) s[k] = random_dual(rng);
    ZSeries root = series_sqrt_one_plus(s);
    CHECK(root * root == ZSeries::constant(1, 6) + s);
  }
  CHECK_THROWS(series_sqrt_one_plus(ZSeries::constant(1, 4)));
}

TEST_CASE("series_subst_scale") {
  ZSeries e = structure_fn(StructureKind::exp, 1, 1, 6);
  CHECK(series_subst_scale(e, DualCoeff::iota1()) ==
        ZSeries::constant(1, 6) + ZSeries::monomial(DualCoeff::iota1(), 1, 6));
  CHECK(series_subst_scale(ZSeries::monomial(1, 2, 4), I * q(1, 2)) ==
        ZSeries::monomial(q(-1, 4), 2, 4));
  // sinh(i z/2) = i sin(z/2) = i (z/2 - z^3/48 + z^5/3840 - ...)
  ZSeries sh = series_subst_scale(structure_fn(StructureKind::sinh, 1, 1, 7), I * q(1, 2));
  CHECK(sh[1] == DualCoeff(I * q(1, 2)));
  CHECK(sh[3] == DualCoeff(I * q(-1, 48)));
  CHECK(sh[5] == DualCoeff(I * q(1, 3840)));
  CHECK(sh[7] == DualCoeff(I * q(-1, 645120)));
  CHECK(sh[2].is_zero());
}

TEST_CASE("series inverse") {
  ZSeries e = structure_fn(StructureKind::exp, 1, 1, 6);
  CHECK(e.inverse() == structure_fn(StructureKind::exp, -1, 1, 6));
  CHECK_THROWS(ZSeries::monomial(1, 1, 4).inverse());
}

TEST_CASE("formal j-series cancel negative powers") {
  const int N = 7;
  JSeries sh = formal_structure_fn(StructureKind::sinh, 1, JMono::j12(), N);
  JSeries sc = sh * JMono::j12().inverse();
  CHECK(sc == formal_structure_fn(StructureKind::sinhc, 1, JMono::j12(), N));
  for (auto j : JAssign::all()) {
    DualCoeff J = j.j1_coeff() * j.j2_coeff();
    CHECK(sc.evaluate(j) == structure_fn(StructureKind::sinhc, 1, J, N));
  }
  JSeries bad = JSeries::monomial(1, JMono{-1, 0}, 0, N);
  CHECK_THROWS_AS(bad.evaluate(JAssign{JAssign::Value::dual, JAssign::Value::unit}),
                  std::domain_error);
  CHECK(bad.evaluate(JAssign::standard()) == ZSeries::constant(1, N));

  JSeries c = formal_structure_fn(StructureKind::cosh, 1, JMono::j2(), N) * JMono::j1();
  CHECK(c.inverse() * c == JSeries::constant(1, N));
  CHECK(c.content() == JMono::j1());
  JSeries sub = formal_structure_fn(StructureKind::exp, 1, {}, N).subst_scale(1, JMono::j1());
  CHECK(sub == formal_structure_fn(StructureKind::exp, 1, JMono::j1(), N));
}
