#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckq/isomap.hpp"

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

bool has_note(const CheckReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("iso factors") {
  // reference v02 at (1,1): D E = i(zh/2)(1 - i zh/4 + ...)
  IsoSpec p = build_iso(Variant::v02, JAssign::standard(), N, IsoConvention::reference);
  ZSeries de = p.factor * p.phase;
  CHECK(de[0] == DualCoeff(0));
  CHECK(de[1] == DualCoeff(GaussRational::ratio(1, 2) * I));
  CHECK(de[2] == DualCoeff(GaussRational::ratio(1, 8)));
  // most contracted: D = i zh/2 exactly
  IsoSpec g = build_iso(Variant::v02, ja("i1,i2"), N);
  CHECK(g.factor == zs(GaussRational::ratio(1, 2) * I, 1));
  // v12 at (1,1): F^2 = e^{-i zh/2} 2 zh sin(zh/2) = zh^2 - i/2 zh^3 + ...
  IsoSpec f = build_iso(Variant::v12, JAssign::standard(), N, IsoConvention::reference);
  ZSeries f2 = f.factor * f.factor;
  CHECK(f2[2] == DualCoeff(1));
  CHECK(f2[3] == DualCoeff(GaussRational::ratio(-1, 2) * I));
}

TEST_CASE("iso relations and coproducts") {
  for (Variant v : {Variant::v02, Variant::v12})
    for (const auto& j : JAssign::all()) {
      CAPTURE(to_string(v));
      CAPTURE(j.name());
      CheckReport r = iso_report(v, j, N);
      CHECK_MESSAGE(r.ok(), failures(r));
    }
  CHECK_THROWS_AS(build_iso(Variant::v01, JAssign::standard(), N), std::invalid_argument);
}

TEST_CASE("reference convention intertwines the opposite coproduct") {
  IsoSpec p = build_iso(Variant::v02, JAssign::standard(), N, IsoConvention::reference);
  CHECK(verify_iso_relations(p).ok());
  CheckReport c = verify_iso_coproducts(p);
  CHECK_FALSE(c.ok());
  CHECK(has_note(c, "opposite coproduct"));
}

TEST_CASE("extension in N keeps lower coefficients") {
  IsoSpec a = build_iso(Variant::v02, JAssign::standard(), N), b = build_iso(Variant::v02, JAssign::standard(), N + 2);
  CHECK(b.factor.with_order(N) == a.factor);
  CHECK(b.phase.with_order(N) == a.phase);
}

TEST_CASE("candidate isomorphisms") {
  SoAlgebra x02 = build_so(Variant::v02, JAssign::standard(), N);
  SoAlgebra x12 = build_so(Variant::v12, JAssign::standard(), N);
  auto perms = signed_permutations(x02);
  CHECK(perms.size() == 48);
  CHECK(check_candidate_iso(perms.front(), x02, x02).ok());
  // identity between different primitives fails
  CHECK_FALSE(check_candidate_iso(signed_permutations(x12).front(), x02, x12).ok());
  // non-invertible linear part is rejected
  GenMap<ZPoly> bad = perms.front();
  bad.images[2] = x02.rs.gen("X01");
  CHECK_FALSE(check_candidate_iso(bad, x02, x02).ok());
}

TEST_CASE("special cases") {
  CheckReport r = special_case_report(N);
  CHECK_MESSAGE(r.ok(), failures(r));
  CHECK(has_note(r, "X12 (i1,1) Euclidean"));
  CHECK(has_note(r, "intertwining the coproducts"));
}
