#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckq/uqalg.hpp"

using namespace ckq;

namespace {

const int N = 4;
const GaussRational I = GaussRational::i();

JAssign ja(const char* s) { return JAssign::parse(s); }

std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& i : r.items)
    if (!i.ok) s += i.name + ": " + i.detail + "\n";
  return s;
}

ZSeries zs(const GaussRational& c, int k) { return ZSeries::monomial(c, k, N); }

}  // namespace

TEST_CASE("reference su relations agree with the scaled standard ones") {
  for (Variant v : {Variant::v02, Variant::v12}) {
    FormalRules p = reference_su_rules(v, N), s = scaled_su_rules(v, N);
    for (const auto& [lhs, rhs] : p) CHECK(s.at(lhs) == rhs);
  }
}

TEST_CASE("v12 su examples") {
  RewriteSystem rs = build_su(Variant::v12, JAssign::standard(), N).rs;
  CHECK(nc_commutator(rs.gen("H"), rs.gen("u1"), rs) == rs.gen("u2") * zs(GaussRational(-2) * I, 0));
  RewriteSystem c = build_su(Variant::v12, ja("i1,1"), N).rs;
  CHECK(nc_commutator(c.gen("u2"), c.gen("u1"), c).is_zero());
}

TEST_CASE("v02 commutator [u2,u1] at the standard point") {
  // i e^{-z} sinh z (e^{zH} - e^{-zH}) with e^{-z} sinh z = z - z^2 + 2/3 z^3
  RewriteSystem rs = build_su(Variant::v02, JAssign::standard(), N).rs;
  ZPoly c = nc_commutator(rs.gen("u2"), rs.gen("u1"), rs);
  const auto& a = rs.alphabet();
  REQUIRE(c.coeff(a.word("H")));
  CHECK(*c.coeff(a.word("H")) == zs(GaussRational(2) * I, 2) + zs(GaussRational(-2) * I, 3) +
                                     zs(GaussRational::ratio(4, 3) * I, 4));
  // z^4 H^3: i z * 2 z^3/6
  CHECK(*c.coeff(a.word("H H H")) == zs(GaussRational::ratio(1, 3) * I, 4));
}

TEST_CASE("conjugation by t") {
  for (Variant v : all_variants())
    for (const auto& j : JAssign::all()) {
      CAPTURE(to_string(v));
      CAPTURE(j.name());
      CheckReport r = su_conjugation_check(build_su(v, j, N));
      CHECK_MESSAGE(r.ok(), failures(r));
    }
  // most contracted v02: t^-1 u1 t = u1 exactly
  SuAlgebra alg = build_su(Variant::v02, ja("i1,i2"), N);
  CHECK(adjoint_exp(alg.rs, 2, GaussRational::ratio(-1, 2), alg.rs.gen("u1")) == alg.rs.gen("u1"));
  // (1,i2): u1 + i z u2
  SuAlgebra b = build_su(Variant::v02, ja("1,i2"), N);
  CHECK(adjoint_exp(b.rs, 2, GaussRational::ratio(-1, 2), b.rs.gen("u1")) ==
        b.rs.gen("u1") + b.rs.gen("u2") * zs(I, 1));
}

TEST_CASE("su Hopf axioms") {
  for (Variant v : all_variants())
    for (const auto& j : JAssign::all()) {
      CAPTURE(to_string(v));
      CAPTURE(j.name());
      CheckReport r = hopf_axiom_report_su(build_su(v, j, N));
      CHECK_MESSAGE(r.ok(), failures(r));
    }
}

TEST_CASE("so examples") {
  RewriteSystem g = build_so(Variant::v02, ja("i1,i2"), N).rs;
  CHECK(nc_commutator(g.gen("X01"), g.gen("X02"), g).is_zero());
  CHECK(nc_commutator(g.gen("X02"), g.gen("X12"), g).is_zero());
  ZPoly s = nc_commutator(g.gen("X12"), g.gen("X01"), g);
  CHECK(s == g.gen("X02") + g.word("X02 X02 X02") * zs(GaussRational::ratio(1, 6), 2) +
                 g.word("X02 X02 X02 X02 X02") * zs(GaussRational::ratio(1, 120), 4));
  RewriteSystem e = build_so(Variant::v12, ja("i1,1"), N).rs;
  CHECK(nc_commutator(e.gen("X01"), e.gen("X02"), e).is_zero());
  CHECK(nc_commutator(e.gen("X02"), e.gen("X12"), e) == e.gen("X01"));
  CHECK(nc_commutator(e.gen("X12"), e.gen("X01"), e) == e.gen("X02"));
}

TEST_CASE("so closed-form antipode at the standard point") {
  // S(X01) = -X01 cos(z/2) + X12 sin(z/2) for the X02 primitive
  SoAlgebra alg = build_so(Variant::v02, JAssign::standard(), N);
  const auto& rs = alg.rs;
  ZPoly want = rs.gen("X01") * (zs(-1, 0) + zs(GaussRational::ratio(1, 8), 2) + zs(GaussRational::ratio(-1, 384), 4)) +
               rs.gen("X12") * (zs(GaussRational::ratio(1, 2), 1) + zs(GaussRational::ratio(-1, 48), 3));
  CHECK(hopf_maps_so(alg).S.images.at(0) == want);
}

TEST_CASE("so Hopf axioms") {
  for (Variant v : all_variants())
    for (const auto& j : JAssign::all()) {
      CAPTURE(primitive_name(v));
      CAPTURE(j.name());
      CheckReport r = hopf_axiom_report_so(build_so(v, j, N));
      CHECK_MESSAGE(r.ok(), failures(r));
    }
}

TEST_CASE("contraction of the algebras") {
  for (bool so : {false, true})
    for (Variant v : all_variants())
      for (const auto& j : JAssign::all()) {
        CAPTURE(so);
        CAPTURE(to_string(v));
        CAPTURE(j.name());
        CheckReport r = verify_contraction_alg(v, j, N, so);
        CHECK_MESSAGE(r.ok(), failures(r));
      }
}
