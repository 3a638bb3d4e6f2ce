#include "ckq/uqalg.hpp"

namespace ckq {

namespace {

constexpr char U1 = 0, U2 = 1, H = 2;
constexpr char X01 = 0, X02 = 1, X12 = 2;

const GaussRational I = GaussRational::i();

JSeries jc(const GaussRational& c, JMono m, int n) { return JSeries::monomial(c, m, 0, n); }

JSeries fs(StructureKind k, const GaussRational& s, JMono J, int n) {
  return formal_structure_fn(k, s, J, n);
}

JPolyNC term(const Word& w, const JSeries& c) { return JPolyNC::term(w, c); }

/// sum_k c_k z^k P^k with c_k the Taylor coefficients of f(z P).
JPolyNC series_in(char P, const JSeries& f) {
  JPolyNC out;
  for (int k = 0; k <= f.order(); ++k) {
    if (f[k].empty()) continue;
    for (const auto& [m, c] : f[k])
      out += term(Word(static_cast<std::size_t>(k), P), JSeries::monomial(c, m, k, f.order()));
  }
  return out;
}

char so_primitive(Variant v) {
  switch (v) {
    case Variant::v02: return X02;
    case Variant::v12: return X12;
    case Variant::v01: return X01;
  }
  return X02;
}

struct Comm {
  GaussRational sign;
  JMono mono;
  char target;
};

/// Classical [x,y] for x < y: [X01,X02] = j1^2 X12, [X01,X12] = -X02, [X02,X12] = j2^2 X01.
Comm classical_comm(char x, char y, JMono j1, JMono j2) {
  if (x == X01 && y == X02) return {1, j1.pow(2), X12};
  if (x == X01 && y == X12) return {-1, {}, X02};
  return {1, j2.pow(2), X01};
}

/// [P, X] = alpha Y in the classical bracket (linear in P's commutators).
std::pair<GaussRational, JMono> ad_primitive(char P, char X, char& Y, JMono j1, JMono j2) {
  Comm c = P < X ? classical_comm(P, X, j1, j2) : classical_comm(X, P, j1, j2);
  Y = c.target;
  return {P < X ? c.sign : -c.sign, c.mono};
}

FormalRules so_rules_with(Variant v, JMono j1, JMono j2, int n) {
  char P = so_primitive(v);
  // sinh(zP)/z: odd powers of P with coefficient z^{2k}/(2k+1)!
  JPolyNC sinh_over_z;
  {
    Rational fact = 1;
    for (int k = 1; k <= n + 1; ++k) {
      fact *= k;
      if (k % 2 == 1)
        sinh_over_z += term(Word(static_cast<std::size_t>(k), P),
                            JSeries::monomial(GaussRational(Rational(1) / fact), {}, k - 1, n));
    }
  }
  FormalRules r;
  for (char x = 0; x < 3; ++x)
    for (char y = x + 1; y < 3; ++y) {
      Comm c = classical_comm(x, y, j1, j2);
      JPolyNC comm = c.target == P ? sinh_over_z * jc(c.sign, c.mono, n)
                                   : term(Word(1, c.target), jc(c.sign, c.mono, n));
      r[Word{y, x}] = term(Word{x, y}, jc(1, {}, n)) - comm;
    }
  return r;
}

std::string jname(const JAssign& j) { return "(" + j.name() + ")"; }

}  // namespace

const Alphabet& su_alphabet() {
  static const Alphabet a({"u1", "u2", "H"}, {1, 1, 0});
  return a;
}

const Alphabet& so_alphabet(Variant v) {
  static const Alphabet a02({"X01", "X02", "X12"}, {1, 0, 1});
  static const Alphabet a12({"X01", "X02", "X12"}, {1, 1, 0});
  static const Alphabet a01({"X01", "X02", "X12"}, {0, 1, 1});
  switch (v) {
    case Variant::v02: return a02;
    case Variant::v12: return a12;
    case Variant::v01: return a01;
  }
  return a02;
}

std::string primitive_name(Variant v) { return VariantSpec::of(v).primitive; }

FormalRules formal_su_rules(JMono J, JMono m1, JMono m2, JMono m12, int n) {
  FormalRules r;
  JSeries one = jc(1, {}, n);
  r[Word{H, U1}] = term(Word{U1, H}, one) + term(Word{U2}, jc(GaussRational(-2) * I, m1, n));
  r[Word{H, U2}] = term(Word{U2, H}, one) + term(Word{U1}, jc(GaussRational(2) * I, m2, n));
  // t^2 - t^-2 = e^{zH} - e^{-zH}
  JSeries t2 = fs(StructureKind::exp, 1, {}, n) - fs(StructureKind::exp, -1, {}, n);
  JSeries pref = fs(StructureKind::exp, -1, J, n) * fs(StructureKind::sinh, 1, J, n) * jc(I, m12, n);
  r[Word{U2, U1}] = term(Word{U1, U2}, one) + series_in(H, t2) * pref;
  return r;
}

FormalRules scaled_su_rules(Variant v, int n) {
  VariantSpec s = VariantSpec::of(v);
  return formal_su_rules(s.J, s.H_div * s.u1_div * s.u2_div.inverse(),
                         s.H_div * s.u2_div * s.u1_div.inverse(), s.u1_div * s.u2_div, n);
}

FormalRules reference_su_rules(Variant v, int n) {
  JSeries one = jc(1, {}, n);
  FormalRules r;
  if (v == Variant::v02) {
    JMono J = JMono::j12();
    r[Word{H, U1}] = term(Word{U1, H}, one) + term(Word{U2}, jc(GaussRational(-2) * I, JMono::j1().pow(2), n));
    r[Word{H, U2}] = term(Word{U2, H}, one) + term(Word{U1}, jc(GaussRational(2) * I, JMono::j2().pow(2), n));
    JSeries t2 = fs(StructureKind::exp, 1, {}, n) - fs(StructureKind::exp, -1, {}, n);
    JSeries pref = jc(I, J, n) * fs(StructureKind::exp, -1, J, n) * fs(StructureKind::sinh, 1, J, n);
    r[Word{U2, U1}] = term(Word{U1, U2}, one) + series_in(H, t2) * pref;
    return r;
  }
  if (v == Variant::v12) {
    JMono j2 = JMono::j2();
    r[Word{H, U1}] = term(Word{U1, H}, one) + term(Word{U2}, jc(GaussRational(-2) * I, {}, n));
    r[Word{H, U2}] = term(Word{U2, H}, one) + term(Word{U1}, jc(GaussRational(2) * I, j2.pow(2), n));
    JSeries sinhzH = fs(StructureKind::sinh, 1, {}, n);
    JSeries pref = jc(GaussRational(2) * I, JMono::j1().pow(2) * j2, n) *
                   fs(StructureKind::exp, -1, j2, n) * fs(StructureKind::sinh, 1, j2, n);
    r[Word{U2, U1}] = term(Word{U1, U2}, one) + series_in(H, sinhzH) * pref;
    return r;
  }
  throw std::invalid_argument("no reference su relations for " + to_string(v));
}

FormalRules formal_so_rules(Variant v, int n) {
  return so_rules_with(v, JMono::j1(), JMono::j2(), n);
}

SuAlgebra build_su(Variant v, const JAssign& j, int n) {
  SuAlgebra alg;
  alg.variant = VariantSpec::of(v);
  alg.j = j;
  alg.order = n;
  FormalRules fr = v == Variant::v01 ? scaled_su_rules(v, n) : reference_su_rules(v, n);
  alg.rs = rewrite_system_from(fr, su_alphabet(), j, n);
  return alg;
}

SoAlgebra build_so(Variant v, const JAssign& j, int n) {
  SoAlgebra alg;
  alg.variant = VariantSpec::of(v);
  alg.j = j;
  alg.order = n;
  alg.primitive = so_primitive(v);
  alg.rs = rewrite_system_from(formal_so_rules(v, n), so_alphabet(v), j, n);
  return alg;
}

CheckReport su_conjugation_check(const SuAlgebra& alg) {
  CheckReport r;
  const auto& s = alg.variant;
  const int n = alg.order;
  const auto& rs = alg.rs;
  JMono m1 = s.H_div * s.u1_div * s.u2_div.inverse();
  JMono m2 = s.H_div * s.u2_div * s.u1_div.inverse();
  JSeries ch = fs(StructureKind::cosh, 1, s.J, n), shc = fs(StructureKind::sinhc, 1, s.J, n);
  ZPoly c1 = evaluate(term(Word{U1}, ch) + term(Word{U2}, shc * jc(I, m1, n)), alg.j);
  ZPoly c2 = evaluate(term(Word{U2}, ch) + term(Word{U1}, shc * jc(-I, m2, n)), alg.j);
  r.zero("t^-1 u1 t = cosh(Jz) u1 + i m1 sinh(Jz)/J u2",
         adjoint_exp(rs, H, GaussRational::ratio(-1, 2), rs.gen("u1")) - c1, rs.alphabet());
  r.zero("t^-1 u2 t = cosh(Jz) u2 - i m2 sinh(Jz)/J u1",
         adjoint_exp(rs, H, GaussRational::ratio(-1, 2), rs.gen("u2")) - c2, rs.alphabet());
  return r;
}

HopfMaps hopf_maps_su(const SuAlgebra& alg) {
  const auto& rs = alg.rs;
  HopfMaps h;
  h.S.kind = MapKind::antihom;
  ZPoly one = rs.one();
  ZTensor t_left = exp_generator_tensor(rs, H, GaussRational::ratio(1, 2), 0);
  ZTensor tinv_right = exp_generator_tensor(rs, H, GaussRational::ratio(-1, 2), 1);
  for (char u : {U1, U2}) {
    ZPoly g = rs.gen(su_alphabet().name(u));
    h.delta.images[u] = t_left * ZTensor::pure({one, g}) + ZTensor::pure({g, one}) * tinv_right;
    h.S.images[u] = -adjoint_exp(rs, H, GaussRational::ratio(-1, 2), g);
    h.eps[u] = ZSeries(alg.order);
  }
  ZPoly Hp = rs.gen("H");
  h.delta.images[H] = ZTensor::pure({Hp, one}) + ZTensor::pure({one, Hp});
  h.S.images[H] = -Hp;
  h.eps[H] = ZSeries(alg.order);
  return h;
}

HopfMaps hopf_maps_so(const SoAlgebra& alg) {
  const auto& rs = alg.rs;
  const auto& s = alg.variant;
  const int n = alg.order;
  const char P = alg.primitive;
  const auto& a = rs.alphabet();
  HopfMaps h;
  h.S.kind = MapKind::antihom;
  ZPoly one = rs.one();
  ZPoly Pp = rs.gen(a.name(P));
  ZTensor left = exp_generator_tensor(rs, P, GaussRational::ratio(-1, 2), 0);
  ZTensor right = exp_generator_tensor(rs, P, GaussRational::ratio(1, 2), 1);
  // S(X) = -cos(Jz/2) X - alpha sin(Jz/2)/J Y where [P,X] = alpha Y
  JSeries cosJ = fs(StructureKind::cosh, GaussRational::ratio(1, 2) * I, s.J, n);
  JSeries sinJ = fs(StructureKind::sinhc, GaussRational::ratio(1, 2) * I, s.J, n) * jc(-I, {}, n);
  for (char x = 0; x < 3; ++x) {
    h.eps[x] = ZSeries(n);
    ZPoly g = rs.gen(a.name(x));
    if (x == P) {
      h.delta.images[x] = ZTensor::pure({g, one}) + ZTensor::pure({one, g});
      h.S.images[x] = -g;
      continue;
    }
    h.delta.images[x] = left * ZTensor::pure({one, g}) + ZTensor::pure({g, one}) * right;
    char Y = 0;
    auto [sign, mono] = ad_primitive(P, x, Y, JMono::j1(), JMono::j2());
    JPolyNC S = term(Word{x}, -cosJ) + term(Word{Y}, sinJ * jc(-sign, mono, n));
    h.S.images[x] = evaluate(S, alg.j);
  }
  return h;
}

GenMap<ZPoly> conjugation_antipode_so(const SoAlgebra& alg) {
  const auto& rs = alg.rs;
  GenMap<ZPoly> S;
  S.kind = MapKind::antihom;
  for (char x = 0; x < 3; ++x) {
    ZPoly g = rs.gen(rs.alphabet().name(x));
    S.images[x] = x == alg.primitive ? -g : -adjoint_exp(rs, alg.primitive, GaussRational::ratio(1, 2), g);
  }
  return S;
}

CheckReport hopf_axiom_report_su(const SuAlgebra& alg) {
  CheckReport r;
  const auto& rs = alg.rs;
  const auto& a = rs.alphabet();
  const auto& s = alg.variant;
  HopfMaps h = hopf_maps_su(alg);
  check_multiplicative(r, h, rs);
  check_coassociative(r, h, rs);
  check_counit(r, h, rs);
  std::map<char, ZPoly> expected{{U1, ZPoly()}, {U2, ZPoly()}, {H, ZPoly()}};
  check_antipode(r, h, rs, expected);
  check_antipode_relations(r, h, rs);
  r.merge(su_conjugation_check(alg));
  // u = u1/d1 + i u2/d2 multiplied through by d1 d2: S(u) = -e^{Jz} u, S(ubar) = -e^{-Jz} ubar
  const int n = alg.order;
  for (int sg : {1, -1}) {
    JPolyNC u = term(Word{U1}, jc(1, s.u2_div, n)) + term(Word{U2}, jc(I * GaussRational(sg), s.u1_div, n));
    ZPoly ue = evaluate(u, alg.j);
    ZPoly want = ue * (-fs(StructureKind::exp, sg, s.J, n).evaluate(alg.j));
    r.zero(sg > 0 ? "S(d2 u1 + i d1 u2) = -e^{Jz} (d2 u1 + i d1 u2)"
                  : "S(d2 u1 - i d1 u2) = -e^{-Jz} (d2 u1 - i d1 u2)",
           apply_antipode(h.S, ue, rs) - want, a);
  }
  return r;
}

CheckReport hopf_axiom_report_so(const SoAlgebra& alg) {
  CheckReport r;
  const auto& rs = alg.rs;
  const auto& a = rs.alphabet();
  HopfMaps h = hopf_maps_so(alg);
  check_multiplicative(r, h, rs);
  check_coassociative(r, h, rs);
  check_counit(r, h, rs);
  std::map<char, ZPoly> expected{{X01, ZPoly()}, {X02, ZPoly()}, {X12, ZPoly()}};
  check_antipode(r, h, rs, expected);
  check_antipode_relations(r, h, rs);
  ZPoly x = rs.gen("X01"), y = rs.gen("X02"), w = rs.gen("X12");
  ZPoly jac = nc_commutator(x, nc_commutator(y, w, rs), rs) + nc_commutator(y, nc_commutator(w, x, rs), rs) +
              nc_commutator(w, nc_commutator(x, y, rs), rs);
  r.zero("Jacobi identity", rs.normal_form(jac), a);
  GenMap<ZPoly> conj = conjugation_antipode_so(alg);
  for (char g = 0; g < 3; ++g)
    r.zero("closed-form antipode on " + a.name(g) + " equals -e^{zP/2} X e^{-zP/2}",
           h.S.images.at(g) - conj.images.at(g), a);
  return r;
}

CheckReport verify_contraction_alg(Variant v, const JAssign& j, int n, bool so) {
  CheckReport r;
  VariantSpec s = VariantSpec::of(v);
  const Alphabet& a = so ? so_alphabet(v) : su_alphabet();
  auto run = [&](int order, std::vector<ZPoly>& cleared) {
    RewriteSystem target = so ? build_so(v, j, order).rs : build_su(v, j, order).rs;
    FormalRules standard = so ? so_rules_with(v, {}, {}, order) : formal_su_rules({}, {}, {}, {}, order);
    GenMap<JPolyNC> sub;
    if (so) {
      sub.images[X01] = term(Word{X01}, jc(1, JMono::j1().inverse(), order));
      sub.images[X02] = term(Word{X02}, jc(1, JMono::j12().inverse(), order));
      sub.images[X12] = term(Word{X12}, jc(1, JMono::j2().inverse(), order));
    } else {
      sub.images[U1] = term(Word{U1}, jc(1, s.u1_div.inverse(), order));
      sub.images[U2] = term(Word{U2}, jc(1, s.u2_div.inverse(), order));
      sub.images[H] = term(Word{H}, jc(1, s.H_div.inverse(), order));
    }
    std::vector<ZPoly> residues;
    for (const auto& [lhs, rhs] : standard) {
      JPolyNC rel = term(lhs, jc(1, {}, order)) - rhs;
      rel = rel.map_coeffs([&](const JSeries& c) { return c.subst_scale(1, s.J); });
      JPolyNC img = apply_map(sub, rel, term("", jc(1, {}, order)));
      clear_content(img);
      ZPoly ev = evaluate(img, j);
      cleared.push_back(ev);
      residues.push_back(target.normal_form(ev));
    }
    return std::make_pair(residues, standard);
  };
  std::vector<ZPoly> cleared;
  auto [res, standard] = run(n, cleared);
  std::string fam = so ? "so(" + s.primitive + ")" : "su " + to_string(v);
  std::size_t idx = 0;
  for (const auto& [lhs, rhs] : standard) {
    r.expect("scaled " + a.format(lhs) + " relation is not trivially zero", !cleared[idx].is_zero());
    r.zero("scaled " + a.format(lhs) + " relation holds in " + fam + jname(j), res[idx], a);
    ++idx;
  }
  if (j.any_dual()) {
    std::vector<ZPoly> wider_cleared;
    auto wider = run(n + 2, wider_cleared).first;
    bool stable = true;
    for (std::size_t i = 0; i < wider.size(); ++i)
      stable = stable && wider[i].is_zero() && truncate(wider_cleared[i], n) == cleared[i];
    r.expect("contraction result stable under N -> N+2", stable);
  }
  return r;
}

}  // namespace ckq
