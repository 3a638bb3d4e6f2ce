#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckq/pairing.hpp"

using namespace ckq;
using namespace ckq::lsym;

namespace {

const int N = 5;
const GaussRational I = GaussRational::i();
constexpr char B1 = 0, B2 = 1, A1 = 2, A2 = 3;

JAssign ja(const char* s) { return JAssign::parse(s); }

std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& i : r.items)
    if (!i.ok) s += i.name + ": " + i.detail + "\n";
  return s;
}

ZSeries zs(const GaussRational& c, int k) { return ZSeries::monomial(c, k, N); }

}  // namespace

TEST_CASE("generator table examples") {
  // cosh(z/2) = 1 + z^2/8 + z^4/384
  CHECK(pair_gen(Variant::v02, JAssign::standard(), t, A1, N) ==
        zs(1, 0) + zs(GaussRational::ratio(1, 8), 2) + zs(GaussRational::ratio(1, 384), 4));
  CHECK(pair_gen(Variant::v02, ja("i1,1"), u2, B1, N) == zs(I, 1));
  CHECK(pair_gen(Variant::v02, ja("i1,i2"), u1, B2, N).is_zero());
  CHECK(pair_gen(Variant::v02, JAssign::standard(), u1, A1, N).is_zero());
}

TEST_CASE("reference tables equal the scaled standard table") {
  for (Variant v : {Variant::v02, Variant::v12})
    for (char s = 0; s < 4; ++s)
      for (char g = 0; g < 4; ++g) {
        CAPTURE(to_string(v));
        CAPTURE(int(s));
        CAPTURE(int(g));
        CHECK(reference_pair_gen(v, s, g, N) == formal_pair_gen(v, s, g, N));
      }
}

TEST_CASE("recursive pairing by hand") {
  Pairing p(Variant::v02, JAssign::standard(), N);
  // <t, a> = <t,a1> + i<t,a2> = cosh(z/2) + sinh(z/2) = e^{z/2}
  ZSeries ta = p.word(Word{t}, Word{A1}) + p.word(Word{t}, Word{A2}) * zs(I, 0);
  CHECK(ta == ZSeries::monomial(1, 0, N) + zs(GaussRational::ratio(1, 2), 1) +
                  zs(GaussRational::ratio(1, 8), 2) + zs(GaussRational::ratio(1, 48), 3) +
                  zs(GaussRational::ratio(1, 384), 4) + zs(GaussRational::ratio(1, 3840), 5));
  CHECK(p.word(Word{u1}, Word{}).is_zero());
  CHECK(p.word(Word{t}, Word{}) == zs(1, 0));
  // Delta t = t (x) t: <t, a1 a1> = <t,a1>^2 since t kills b's
  ZSeries c = p.word(Word{t}, Word{A1});
  CHECK(p.word(Word{t}, Word{A1, A1}) == c * c);
  // Delta a1 mixes in b's: <t t, a1> = sum <t, a1_(1)><t, a1_(2)>, only the a-part survives
  ZSeries s = p.word(Word{t}, Word{A2});
  CHECK(p.word(Word{t, t}, Word{A1}) == c * c + s * s * zs(-1, 0));
}

TEST_CASE("L T pairing") {
  for (Variant v : all_variants())
    for (const auto& j : JAssign::all()) {
      CAPTURE(to_string(v));
      CAPTURE(j.name());
      CheckReport r = verify_LT_pairing(v, j, N);
      CHECK_MESSAGE(r.ok(), failures(r));
    }
}

TEST_CASE("ideal annihilation and relation functionals") {
  for (Variant v : all_variants())
    for (const auto& j : JAssign::all()) {
      CAPTURE(to_string(v));
      CAPTURE(j.name());
      CheckReport a = verify_ideal_annihilation(v, j, 2, 4);
      CHECK_MESSAGE(a.ok(), failures(a));
      CheckReport b = verify_relation_functionals(v, j, 2, 4);
      CHECK_MESSAGE(b.ok(), failures(b));
      CheckReport c = verify_pairing_consistency(v, j, 2, 4);
      CHECK_MESSAGE(c.ok(), failures(c));
    }
}
