#include "ckq/isomap.hpp"

#include <algorithm>
#include <array>

namespace ckq {

namespace {

constexpr char U1 = 0, U2 = 1, H = 2;
constexpr char X01 = 0, X02 = 1, X12 = 2;

const GaussRational I = GaussRational::i();

JSeries jc(const GaussRational& c, JMono m, int n) { return JSeries::monomial(c, m, 0, n); }

JSeries fs(StructureKind k, const GaussRational& s, JMono J, int n) {
  return formal_structure_fn(k, s, J, n);
}

/// sin(J zh/2)/(J zh/2) with J kept formal; fact accumulates 4^k (2k+1)!.
JSeries formal_sinc_half(JMono J, int n) {
  JSeries out(n);
  Rational fact = 1;
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) fact *= 4 * (2 * k) * (2 * k + 1);
    Rational c = Rational(k % 2 ? -1 : 1) / fact;
    out += JSeries::monomial(GaussRational(c), J.pow(2 * k), 2 * k, n);
  }
  return out;
}

ZSeries zmono(const GaussRational& c, int k, int n) { return ZSeries::monomial(c, k, n); }

ZTensor flip(const ZTensor& t) {
  ZTensor out(2);
  for (const auto& [k, c] : t.terms()) out.add({k[1], k[0]}, c);
  return out;
}

std::string sign_pattern(const ZPoly& a, const ZPoly& b) {
  if (a == b) return "equal";
  if (a == -b) return "negated";
  ZPoly sum = a + b, diff = a - b;
  if (sum.size() < diff.size()) return "agree up to sign except " + std::to_string(sum.size()) + " terms";
  return "differ in " + std::to_string(diff.size()) + " terms";
}

}  // namespace

IsoSpec build_iso(Variant v, const JAssign& j, int n, IsoConvention c) {
  if (v == Variant::v01) throw std::invalid_argument("no isomorphism is defined for the v01 coupling");
  IsoSpec iso;
  iso.source = build_su(v, j, n);
  iso.target = build_so(v, j, n);
  iso.convention = c;
  const bool reference = c == IsoConvention::reference;
  iso.zscale = GaussRational::ratio(1, 2) * (reference ? I : -I);
  const JMono J = VariantSpec::of(v).J;
  iso.phase = fs(StructureKind::exp, GaussRational::ratio(1, 4) * (reference ? -I : I), J, n).evaluate(j);
  ZSeries root = series_sqrt_one_plus(formal_sinc_half(J, n).evaluate(j) - ZSeries::constant(1, n));
  const auto& rs = iso.target.rs;
  iso.phi.kind = MapKind::hom;
  if (v == Variant::v02) {
    // D = i (zh/2) sqrt(sinc(J zh/2))
    iso.factor = zmono(GaussRational::ratio(1, 2) * I, 1, n) * root;
    ZSeries de = iso.factor * iso.phase * ZSeries::constant(GaussRational(2) * I, n);
    iso.phi.images[H] = rs.gen("X02") * ZSeries::constant(GaussRational(-2) * I, n);
    iso.phi.images[U1] = rs.gen("X12") * (de * ZSeries::constant(j.monomial(2, 0), n));
    iso.phi.images[U2] = rs.gen("X01") * (de * ZSeries::constant(j.monomial(0, 2), n));
  } else {
    // F = E zh sqrt(sinc(j2 zh/2))
    iso.factor = iso.phase * zmono(1, 1, n) * root;
    iso.phi.images[H] = rs.gen("X12") * ZSeries::constant(GaussRational(-2) * I, n);
    iso.phi.images[U1] = rs.gen("X02") * iso.factor;
    iso.phi.images[U2] = rs.gen("X01") * (iso.factor * ZSeries::constant(-j.monomial(0, 2), n));
  }
  return iso;
}

ZPoly iso_apply(const IsoSpec& iso, const ZPoly& p) {
  const auto& rs = iso.target.rs;
  DualCoeff s(iso.zscale);
  ZPoly q = p.map_coeffs([&](const ZSeries& c) { return c.subst_scale(s); });
  std::function<ZPoly(const ZPoly&)> reduce = [&](const ZPoly& x) { return rs.normal_form(x); };
  return rs.normal_form(apply_map(iso.phi, q, rs.one(), reduce));
}

ZTensor iso_apply(const IsoSpec& iso, const ZTensor& t) {
  const auto& rs = iso.target.rs;
  DualCoeff s(iso.zscale);
  std::map<Word, ZPoly> cache;
  auto img = [&](const Word& w) -> const ZPoly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, iso_apply(iso, ZPoly::term(w, rs.scalar(1)))).first;
    return it->second;
  };
  ZTensor out(2);
  for (const auto& [k, c] : t.terms()) out += ZTensor::pure({img(k[0]), img(k[1])}) * c.subst_scale(s);
  return rs.normal_form(out);
}

CheckReport verify_iso_relations(const IsoSpec& iso) {
  CheckReport r;
  const auto& src = iso.source.rs;
  const auto& sa = src.alphabet();
  const auto& ta = iso.target.rs.alphabet();
  for (const auto& [lhs, rhs] : src.rules())
    r.zero("image of the " + sa.format(lhs) + " relation vanishes",
           iso_apply(iso, ZPoly::term(lhs, src.scalar(1)) - rhs), ta);
  const int n = iso.source.order;
  const Variant v = iso.source.variant.name;
  const JMono J = iso.source.variant.J;
  // sin(J zh/2)/J = -i sinh(i J zh/2)/J
  ZSeries sinJ = (fs(StructureKind::sinhc, GaussRational::ratio(1, 2) * I, J, n) * jc(-I, {}, n)).evaluate(iso.source.j);
  if (v == Variant::v02) {
    // D^2 = -(zh/(2J)) sin(J zh/2)
    ZSeries want = zmono(GaussRational::ratio(-1, 2), 1, n) * sinJ;
    r.zero("D^2 = -(zh/2J) sin(J zh/2)", iso.factor * iso.factor - want);
  } else {
    // F^2 = E^2 2 zh sin(j2 zh/2)/j2
    ZSeries want = iso.phase * iso.phase * zmono(2, 1, n) * sinJ;
    r.zero("F^2 = E^2 2 zh sin(j2 zh/2)/j2", iso.factor * iso.factor - want);
  }
  return r;
}

CheckReport verify_iso_coproducts(const IsoSpec& iso) {
  CheckReport r;
  const auto& src = iso.source.rs;
  const auto& trg = iso.target.rs;
  const auto& sa = src.alphabet();
  const auto& ta = trg.alphabet();
  HopfMaps hs = hopf_maps_su(iso.source), ht = hopf_maps_so(iso.target);
  DualCoeff s(iso.zscale);
  std::string pattern;
  bool op = true;
  for (char g = 0; g < 3; ++g) {
    ZPoly gen = src.gen(sa.name(g));
    ZPoly img = iso_apply(iso, gen);
    ZTensor lhs = iso_apply(iso, apply_delta(hs, gen, src));
    ZTensor rhs = apply_delta(ht, img, trg);
    r.zero("(phi x phi) Delta(" + sa.name(g) + ") = Delta(phi(" + sa.name(g) + "))", lhs - rhs, ta);
    op = op && (lhs - trg.normal_form(flip(rhs))).is_zero();
    r.zero("counit intertwines on " + sa.name(g),
           apply_counit(ht, img, trg.order()) - hs.eps.at(g).subst_scale(s));
    ZPoly a = apply_antipode(ht.S, img, trg);
    ZPoly b = iso_apply(iso, apply_antipode(hs.S, gen, src));
    pattern += (pattern.empty() ? "" : ", ") + sa.name(g) + ": " + sign_pattern(a, b);
  }
  r.note("antipode S~(phi(g)) vs phi(S(g)): " + pattern);
  if (op) r.note("phi intertwines Delta with the opposite coproduct of the target");
  return r;
}

CheckReport iso_report(Variant v, const JAssign& j, int n) {
  CheckReport r;
  IsoSpec iso = build_iso(v, j, n, IsoConvention::matched);
  r.merge(verify_iso_relations(iso));
  r.merge(verify_iso_coproducts(iso));
  for (const auto& [g, img] : iso.phi.images)
    if (img.is_zero()) r.note("image of " + iso.source.rs.alphabet().name(g) + " vanishes at j=(" + j.name() + "); the map is not injective");
  IsoSpec reference = build_iso(v, j, n, IsoConvention::reference);
  CheckReport pr = verify_iso_relations(reference), pc = verify_iso_coproducts(reference);
  std::string op;
  for (const auto& note : pc.notes)
    if (note.find("opposite") != std::string::npos) op = "; it intertwines the opposite coproduct";
  r.note(std::string("reference convention z = i zh/2, E = e^{-iJ zh/4}: relations ") + (pr.ok() ? "hold" : "fail") +
         ", coproducts " + (pc.ok() ? "intertwine" : "do not intertwine") + op);
  return r;
}

std::vector<GenMap<ZPoly>> signed_permutations(const SoAlgebra& target) {
  std::vector<GenMap<ZPoly>> out;
  std::array<char, 3> p{0, 1, 2};
  const auto& rs = target.rs;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      GenMap<ZPoly> m;
      for (char a = 0; a < 3; ++a) {
        ZPoly g = rs.gen(rs.alphabet().name(p[static_cast<std::size_t>(a)]));
        m.images[a] = (signs >> a) & 1 ? -g : g;
      }
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CheckReport check_candidate_iso(const GenMap<ZPoly>& map, const SoAlgebra& source, const SoAlgebra& target) {
  CheckReport r;
  const auto& trg = target.rs;
  const auto& src = source.rs;
  // linear part
  std::array<std::array<DualCoeff, 3>, 3> M{};
  bool linear = true;
  for (char a = 0; a < 3; ++a)
    for (const auto& [w, c] : map.images.at(a).terms()) {
      if (w.size() != 1) {
        linear = false;
        continue;
      }
      M[static_cast<std::size_t>(a)][static_cast<std::size_t>(w[0])] = c[0];
    }
  r.expect("images are linear in the target generators", linear);
  DualCoeff det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
  r.expect("linear part is invertible", det.is_unit(), det.is_unit() ? "" : "non-invertible linear part");
  std::function<ZPoly(const ZPoly&)> reduce = [&](const ZPoly& x) { return trg.normal_form(x); };
  for (const auto& [lhs, rhs] : src.rules())
    r.zero("image of the " + src.alphabet().format(lhs) + " relation vanishes",
           trg.normal_form(apply_map(map, ZPoly::term(lhs, src.scalar(1)) - rhs, trg.one(), reduce)),
           trg.alphabet());
  return r;
}

namespace {

std::string perm_name(const GenMap<ZPoly>& m, const Alphabet& a) {
  std::string s;
  for (const auto& [g, img] : m.images) s += (s.empty() ? "" : ", ") + a.name(g) + " -> " + img.to_string(a);
  return s;
}

/// The inverse of a signed permutation, as a map into `target`.
GenMap<ZPoly> invert(const GenMap<ZPoly>& m, const SoAlgebra& target) {
  GenMap<ZPoly> inv;
  const auto& rs = target.rs;
  for (const auto& [a, img] : m.images) {
    const auto& [w, c] = *img.terms().begin();
    ZPoly g = rs.gen(rs.alphabet().name(a));
    inv.images[w[0]] = c[0] == DualCoeff(1) ? g : -g;
  }
  return inv;
}

}  // namespace

CheckReport special_case_report(int n) {
  CheckReport r;
  const JAssign e{JAssign::Value::dual, JAssign::Value::unit};
  const JAssign g{JAssign::Value::dual, JAssign::Value::dual};
  struct Case {
    Variant v;
    JAssign j;
    std::string label;
    // expected [X01,X02], [X02,X12], [X12,X01]; "S" marks sinh(zh P)/zh
    std::array<std::string, 3> want;
  };
  const std::vector<Case> cases = {
      {Variant::v12, e, "Euclidean", {"0", "X01", "X02"}},
      {Variant::v01, e, "", {"0", "S", "X02"}},
      {Variant::v02, g, "Galilean", {"0", "0", "S"}},
      {Variant::v12, g, "Galilean", {"0", "0", "X02"}},
      {Variant::v01, g, "Galilean", {"0", "0", "X02"}},
  };
  for (const auto& c : cases) {
    SoAlgebra alg = build_so(c.v, c.j, n);
    const auto& rs = alg.rs;
    const auto& a = rs.alphabet();
    std::string tag = primitive_name(c.v) + " (" + c.j.name() + ")" + (c.label.empty() ? "" : " " + c.label);
    const std::array<std::pair<const char*, const char*>, 3> pairs = {
        {{"X01", "X02"}, {"X02", "X12"}, {"X12", "X01"}}};
    ZPoly P = rs.gen(primitive_name(c.v));
    ZPoly sinh_over_z;
    {
      ZPoly pw = P;
      Rational fact = 1;
      for (int k = 1; k <= n + 1; k += 2) {
        if (k > 1) {
          fact *= (k - 1) * k;
          pw = rs.normal_form(pw * P * P);
        }
        sinh_over_z += pw * ZSeries::monomial(GaussRational(Rational(1) / fact), k - 1, n);
      }
    }
    std::string consts;
    for (std::size_t i = 0; i < 3; ++i) {
      ZPoly got = nc_commutator(rs.gen(pairs[i].first), rs.gen(pairs[i].second), rs);
      ZPoly want = c.want[i] == "0" ? ZPoly() : c.want[i] == "S" ? sinh_over_z : rs.gen(c.want[i]);
      std::string name = std::string("[") + pairs[i].first + "," + pairs[i].second + "]";
      r.zero(tag + ": " + name + " = " + (c.want[i] == "S" ? "sinh(zh " + primitive_name(c.v) + ")/zh" : c.want[i]),
             got - want, a);
      consts += (consts.empty() ? "" : "; ") + name + " = " + (got.is_zero() ? "0" : truncate(got, 2).to_string(a) + (got.size() > 1 ? " + ..." : ""));
    }
    bool transformed = !(VariantSpec::of(c.v).J_at(c.j) == DualCoeff(1));
    r.note(tag + ": " + consts + "; deformation parameter " + (transformed ? "transformed" : "untouched"));
    if (c.v == Variant::v12 && c.j == e) r.expect("Euclidean case leaves the deformation parameter untouched", !transformed);
    if (c.v == Variant::v01 && c.j == e) r.expect("X01 case at (i1,1) transforms the deformation parameter", transformed);
  }
  // Galilean X01 and X12 algebras: search a signed permutation isomorphism
  SoAlgebra s01 = build_so(Variant::v01, g, n), s12 = build_so(Variant::v12, g, n);
  HopfMaps h01 = hopf_maps_so(s01), h12 = hopf_maps_so(s12);
  std::size_t found = 0;
  std::string hopf;
  for (const auto& m : signed_permutations(s12)) {
    CheckReport c = check_candidate_iso(m, s01, s12);
    if (!c.ok()) continue;
    ++found;
    bool coalg = true;
    for (char x = 0; x < 3; ++x) {
      ZTensor lhs = apply_delta(h01, s01.rs.gen(s01.rs.alphabet().name(x)), s01.rs);
      // (m x m) Delta_01(x) against Delta_12(m(x))
      ZTensor img(2);
      for (const auto& [k, cc] : lhs.terms()) {
        std::function<ZPoly(const ZPoly&)> red = [&](const ZPoly& p) { return s12.rs.normal_form(p); };
        img += ZTensor::pure({apply_map(m, ZPoly::term(k[0], s12.rs.scalar(1)), s12.rs.one(), red),
                              apply_map(m, ZPoly::term(k[1], s12.rs.scalar(1)), s12.rs.one(), red)}) * cc;
      }
      coalg = coalg && (s12.rs.normal_form(img) - apply_delta(h12, m.images.at(x), s12.rs)).is_zero();
    }
    CheckReport back = check_candidate_iso(invert(m, s01), s12, s01);
    r.expect("inverse of " + perm_name(m, s12.rs.alphabet()) + " is an isomorphism in reverse", back.ok());
    if (coalg && hopf.empty()) hopf = perm_name(m, s12.rs.alphabet());
  }
  r.expect("signed permutation isomorphism so(X01) -> so(X12) at (i1,i2)", found > 0,
           std::to_string(found) + " of 48 candidates");
  r.note(std::to_string(found) + " of 48 signed permutations are algebra isomorphisms so(X01) -> so(X12) at (i1,i2)");
  if (!hopf.empty()) r.note("also intertwining the coproducts: " + hopf);
  return r;
}

}  // namespace ckq
