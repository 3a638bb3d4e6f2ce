#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ckq/freealg.hpp"

using namespace ckq;

namespace {

const int N = 4;
ZSeries sc(const DualCoeff& c) { return ZSeries::constant(c, N); }

// x<y<w with yx -> xy + z x and w central
RewriteSystem toy() {
  RewriteSystem rs(Alphabet({"x", "y", "w"}), N);
  const auto& a = rs.alphabet();
  rs.add_rule("y x", ZPoly::term(a.word("x y"), sc(1)) +
                         ZPoly::term(a.word("x"), ZSeries::monomial(1, 1, N)));
  rs.add_rule("w x", ZPoly::term(a.word("x w"), sc(1)));
  rs.add_rule("w y", ZPoly::term(a.word("y w"), sc(1)));
  return rs;
}

ZPoly random_word_poly(const RewriteSystem& rs, std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> g(0, rs.alphabet().size() - 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(g(rng)));
  return ZPoly::term(w, sc(1));
}

}  // namespace

TEST_CASE("alphabet order") {
  Alphabet a({"u1", "u2", "H"}, {1, 1, 0});
  CHECK(a.less(a.word("H H H"), a.word("u1")));
  CHECK(a.less(a.word("u1 H"), a.word("H u1")));
  CHECK(a.less(a.word("u1 u2"), a.word("u2 u1")));
  CHECK(a.format(a.word("u2 H")) == "u2*H");
  CHECK(a.word("1").empty());
  CHECK_THROWS(a.word("q"));
  CHECK_THROWS(Alphabet({"a", "a"}));
}

TEST_CASE("normal_form examples") {
  auto rs = toy();
  const auto& a = rs.alphabet();
  ZPoly lhs = rs.word("y x");
  CHECK(rs.normal_form(lhs) == *rs.rule(a.word("y x")));
  ZPoly normal = rs.word("x y w");
  CHECK(rs.normal_form(normal) == normal);
  CHECK(rs.normal_form(rs.word("w y x")) ==
        ZPoly::term(a.word("x y w"), sc(1)) +
            ZPoly::term(a.word("x w"), ZSeries::monomial(1, 1, N)));
}

TEST_CASE("normal form is a projection and products associate") {
  auto rs = toy();
  std::mt19937 rng(11);
  for (int n = 0; n < 40; ++n) {
    ZPoly p = random_word_poly(rs, rng, 3), q = random_word_poly(rs, rng, 2),
          r = random_word_poly(rs, rng, 2);
    ZPoly np = rs.normal_form(p);
    CHECK(rs.normal_form(np) == np);
    CHECK(rs.normal_form(p + q) == rs.normal_form(np + q));
    ZPoly left = rs.normal_form(rs.normal_form(p * q) * r);
    ZPoly right = rs.normal_form(p * rs.normal_form(q * r));
    CHECK(left == right);
  }
  for (const auto& [lhs, rhs] : rs.rules())
    CHECK(rs.normal_form(ZPoly::term(lhs, sc(1)) - rhs).is_zero());
}

TEST_CASE("rules must decrease") {
  RewriteSystem rs(Alphabet({"x", "y"}), N);
  CHECK_THROWS_AS(rs.add_rule("x y", rs.word("y x")), std::invalid_argument);
  CHECK_THROWS_AS(rs.add_rule("x y x", rs.one()), std::invalid_argument);
}

TEST_CASE("step budget") {
  RewriteSystem rs(Alphabet({"x", "y"}), N, 3);
  rs.add_rule("y x", rs.word("x y"));
  CHECK_THROWS_AS(rs.normal_form(rs.word("y y y x x x")), StepBudgetExceeded);
}

TEST_CASE("critical pairs") {
  auto rs = toy();
  CHECK(critical_pairs_check(rs, 3).ok());
  RewriteSystem bad(Alphabet({"x", "y"}), N);
  bad.add_rule("x y", bad.one());
  bad.add_rule("y x", bad.one());
  bad.add_rule("x x", ZPoly());
  auto rep = critical_pairs_check(bad, 3);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& f : rep.failures) found = found || f.overlap == bad.alphabet().word("x x y");
  CHECK(found);
  CHECK_THROWS(critical_pairs_check(bad, 2));
}

TEST_CASE("tensor_mul examples") {
  auto rs = toy();
  const auto& a = rs.alphabet();
  Word x = a.word("x"), y = a.word("y");
  ZTensor xo = ZTensor::term({x, ""}, sc(1)), oy = ZTensor::term({"", y}, sc(1));
  CHECK(xo * oy == ZTensor::term({x, y}, sc(1)));
  ZTensor one = ZTensor::term({"", ""}, sc(1));
  ZTensor s = xo + ZTensor::term({y, x}, sc(3));
  CHECK(one * s == s);
  CHECK(ZTensor::term({x, y}, sc(1)) * ZTensor::term({y, x}, sc(1)) ==
        ZTensor::term({a.word("x y"), a.word("y x")}, sc(1)));
  CHECK_THROWS(ZTensor(2) * ZTensor(3));
  ZTensor red = rs.normal_form(ZTensor::term({a.word("y x"), x}, sc(1)));
  CHECK(red == ZTensor::pure({*rs.rule(a.word("y x")), rs.gen("x")}));
}

TEST_CASE("apply_map") {
  auto rs = toy();
  const auto& a = rs.alphabet();
  GenMap<ZPoly> id;
  for (int g = 0; g < a.size(); ++g) id.images[static_cast<char>(g)] = rs.gen(a.name(g));
  ZPoly p = rs.word("x y") + rs.word("w");
  CHECK(apply_map(id, p, rs.one()) == p);
  GenMap<ZPoly> anti = id;
  anti.kind = MapKind::antihom;
  CHECK(apply_map(anti, rs.word("x y"), rs.one()) == rs.word("y x"));
  GenMap<ZPoly> partial;
  partial.images[a.id("x")] = rs.gen("x");
  CHECK_THROWS_AS(apply_map(partial, rs.word("y"), rs.one()), std::out_of_range);
}

TEST_CASE("nc_commutator") {
  auto rs = toy();
  CHECK(nc_commutator(rs.gen("x"), rs.gen("x"), rs).is_zero());
  CHECK(nc_commutator(rs.gen("y"), rs.gen("x"), rs) ==
        ZPoly::term(rs.alphabet().word("x"), ZSeries::monomial(1, 1, N)));
}

TEST_CASE("content clearing") {
  JPolyNC p;
  p.add("a", JSeries::monomial(1, {1, 2}, 0, 3));
  p.add("b", JSeries::monomial(2, {2, 1}, 1, 3));
  CHECK(clear_content(p) == JMono{1, 1});
  CHECK(*p.coeff("a") == JSeries::monomial(1, {0, 1}, 0, 3));
}
