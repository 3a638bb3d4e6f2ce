#include "ckq/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ckq {

namespace {

constexpr char B1 = 0, B2 = 1, A1 = 2, A2 = 3;
using namespace lsym;

const GaussRational I = GaussRational::i();

JSeries jc(const GaussRational& c, JMono m, int n) { return JSeries::monomial(c, m, 0, n); }

JSeries fs(StructureKind k, const GaussRational& s, JMono J, int n) {
  return formal_structure_fn(k, s, J, n);
}

const GaussRational half = GaussRational::ratio(1, 2);

std::vector<Word> all_words(int alphabet_size, int maxlen) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int g = 0; g < alphabet_size; ++g) next.push_back(w + static_cast<char>(g));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Table entry used for pairing: reference for v02/v12, scaled otherwise.
JSeries table_entry(Variant v, char sym, char gen, int n) {
  return v == Variant::v01 ? formal_pair_gen(v, sym, gen, n) : reference_pair_gen(v, sym, gen, n);
}

using LinL = std::map<char, JSeries>;

JSeries pair_linear(Variant v, const LinL& l, const JPolyNC& f, int n) {
  JSeries out(n);
  for (const auto& [s, cs] : l)
    for (const auto& [w, cw] : f.terms()) {
      if (w.size() != 1) throw std::logic_error("pair_linear expects linear Fun elements");
      out += cs * cw * table_entry(v, s, w[0], n);
    }
  return out;
}

ZSeries det4(const SeriesMatrix& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  const int n = m[0][0].order();
  ZSeries out(n);
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inversions += p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)];
    ZSeries prod = ZSeries::constant(inversions % 2 ? -1 : 1, n);
    for (std::size_t r = 0; r < 4; ++r) prod *= m[r][static_cast<std::size_t>(p[r])];
    out += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

const Alphabet& l_alphabet() {
  static const Alphabet a({"t", "ti", "u1", "u2"});
  return a;
}

JSeries formal_pair_gen(Variant v, char sym, char gen, int n) {
  VariantSpec s = VariantSpec::of(v);
  const JMono J = s.J;
  if (sym < 0 || sym > 3 || gen < 0 || gen > 3) throw std::out_of_range("unknown pairing symbol or generator");
  JSeries zero(n);
  JMono scale = gen == A1 ? JMono{} : gen == A2 ? J : gen == B1 ? s.b1_scale : s.b2_scale;
  JMono div = sym == u1 ? s.u1_div : sym == u2 ? s.u2_div : JMono{};
  JMono factor = div * scale.inverse();
  // standard values with z -> Jz
  JSeries ch_half = fs(StructureKind::cosh, half, J, n), sh_half = fs(StructureKind::sinh, half, J, n);
  JSeries sh = fs(StructureKind::sinh, 1, J, n);
  JSeries val = zero;
  if (sym == t || sym == ti) {
    if (gen == A1) val = ch_half;
    if (gen == A2) val = sh_half * (sym == t ? -I : I);
  } else {
    char own = sym == u1 ? B1 : B2;
    if (gen == own) val = -(sh * sh_half);
    else if (sym == u1 && gen == B2) val = sh * ch_half * (-I);
    else if (sym == u2 && gen == B1) val = sh * ch_half * I;
  }
  return val * jc(1, factor, n);
}

JSeries reference_pair_gen(Variant v, char sym, char gen, int n) {
  if (v == Variant::v01) throw std::invalid_argument("no reference pairing table for v01");
  const JMono J = VariantSpec::of(v).J;
  JSeries ch_half = fs(StructureKind::cosh, half, J, n);
  JSeries shc_half = fs(StructureKind::sinhc, half, J, n);
  JSeries sh = fs(StructureKind::sinh, 1, J, n), shc = fs(StructureKind::sinhc, 1, J, n);
  JSeries sh_half = fs(StructureKind::sinh, half, J, n);
  const JMono j1sq = JMono::j1().pow(2), j2sq = JMono::j2().pow(2);
  if (sym == t || sym == ti) {
    // t^-1 through the antipode: S(a1) = a1, S(a2) = -a2
    if (gen == A1) return ch_half;
    if (gen == A2) return shc_half * (sym == t ? -I : I);
    return JSeries(n);
  }
  if ((sym == u1 && gen == B1) || (sym == u2 && gen == B2)) return -(sh * sh_half);
  if (sym == u1 && gen == B2)
    return shc * ch_half * jc(-I, v == Variant::v02 ? j1sq : JMono{}, n);
  if (sym == u2 && gen == B1) return shc * ch_half * jc(I, j2sq, n);
  return JSeries(n);
}

ZSeries pair_gen(Variant v, const JAssign& j, char sym, char gen, int n) {
  return table_entry(v, sym, gen, n).evaluate(j);
}

Pairing::Pairing(Variant v, const JAssign& j, int n) : order_(n) {
  for (char s = 0; s < 4; ++s)
    for (char g = 0; g < 4; ++g) table_[{s, g}] = pair_gen(v, j, s, g, n);
  FunAlgebra alg = build_fun(v, j, n);
  fun_ = hopf_maps_fun(alg);
  fun_one_ = tensor_one(alg.rs);
}

const ZTensor& Pairing::fun_delta(const Word& fw) {
  auto it = delta_memo_.find(fw);
  if (it != delta_memo_.end()) return it->second;
  ZTensor d = fun_one_;
  for (char g : fw) d = d * fun_.delta.images.at(g);
  return delta_memo_.emplace(fw, std::move(d)).first->second;
}

ZSeries Pairing::fun_counit(const Word& fw) const {
  ZSeries v = ZSeries::constant(1, order_);
  for (char g : fw) v *= fun_.eps.at(g);
  return v;
}

ZSeries Pairing::l_counit(const Word& lw) const {
  for (char g : lw)
    if (g == u1 || g == u2) return ZSeries(order_);
  return ZSeries::constant(1, order_);
}

ZTensor Pairing::l_delta(const Word& lw) const {
  ZSeries one = ZSeries::constant(1, order_);
  ZTensor d = ZTensor::term({Word{}, Word{}}, one);
  for (char g : lw) {
    ZTensor dg(2);
    if (g == t || g == ti) {
      dg.add({Word{g}, Word{g}}, one);
    } else {
      dg.add({Word{t}, Word{g}}, one);
      dg.add({Word{g}, Word{ti}}, one);
    }
    d = d * dg;
  }
  return d;
}

ZSeries Pairing::gen_word(char g, const Word& fw) {
  if (fw.empty()) return l_counit(Word{g});
  if (fw.size() == 1) return table_.at({g, fw[0]});
  Word rest = fw.substr(1);
  ZSeries out(order_);
  ZTensor dg = l_delta(Word{g});
  for (const auto& [k, c] : dg.terms()) {
    ZSeries head = table_.at({k[0][0], fw[0]});
    if (head.is_zero()) continue;
    out += c * head * word(k[1], rest);
  }
  return out;
}

ZSeries Pairing::word(const Word& lw, const Word& fw) {
  if (lw.empty()) return fun_counit(fw);
  auto key = std::make_pair(lw, fw);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  ZSeries out(order_);
  if (lw.size() == 1) {
    out = gen_word(lw[0], fw);
  } else {
    Word rest = lw.substr(1);
    for (const auto& [k, c] : fun_delta(fw).terms()) {
      ZSeries head = word(Word{lw[0]}, k[0]);
      if (head.is_zero()) continue;
      out += c * head * word(rest, k[1]);
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

ZSeries Pairing::word_alt(const Word& lw, const Word& fw) {
  if (fw.empty()) return l_counit(lw);
  if (lw.empty()) return fun_counit(fw);
  Word rest = fw.substr(1);
  ZSeries out(order_);
  ZTensor d = l_delta(lw);
  for (const auto& [k, c] : d.terms()) {
    ZSeries head = word(k[0], Word{fw[0]});
    if (head.is_zero()) continue;
    out += c * head * word(k[1], rest);
  }
  return out;
}

ZSeries Pairing::operator()(const ZPoly& l, const ZPoly& f) {
  ZSeries out(order_);
  for (const auto& [lw, lc] : l.terms())
    for (const auto& [fw, fc] : f.terms()) out += lc * fc * word(lw, fw);
  return out;
}

CheckReport verify_LT_pairing(Variant v, const JAssign& j, int n) {
  CheckReport r;
  VariantSpec s = VariantSpec::of(v);
  const JMono J = s.J;
  JMatrix2 T = formal_T(s, n);
  FormalMatrix Rz = formal_R(s, n);
  JSeries norm = fs(StructureKind::exp, -half, J, n);
  FormalMatrix R(4, std::vector<JSeries>(4, JSeries(n))), Rp = R, Rm = R;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) R[a][b] = Rz[a][b] * norm;
  auto swap = [](std::size_t x) { return (x % 2) * 2 + x / 2; };
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) Rp[a][b] = R[swap(a)][swap(b)];
  JSeries inv_norm = fs(StructureKind::exp, half, J, n);
  JSeries qinv = fs(StructureKind::exp, -1, J, n);
  Rm[0][0] = qinv * inv_norm;
  Rm[1][1] = inv_norm;
  Rm[2][1] = -(fs(StructureKind::sinh, 1, J, n) * GaussRational(2)) * inv_norm;
  Rm[2][2] = inv_norm;
  Rm[3][3] = qinv * inv_norm;
  SeriesMatrix Re = evaluate(R, j), Rme = evaluate(Rm, j);
  r.zero("det R = 1", det4(Re) - ZSeries::constant(1, n));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      ZSeries e = a == b ? ZSeries::constant(-1, n) : ZSeries(n);
      for (std::size_t m = 0; m < 4; ++m) e += Re[a][m] * Rme[m][b];
      if (!e.is_zero()) r.zero("R R^-1 = 1 at (" + std::to_string(a) + "," + std::to_string(b) + ")", e);
    }
  // L(+) = [[t, u], [0, t^-1]], L(-) = [[t^-1, 0], [-e^{Jz} ubar, t]]
  LinL uu{{u1, jc(1, s.u1_div.inverse(), n)}, {u2, jc(I, s.u2_div.inverse(), n)}};
  LinL ubar{{u1, jc(1, s.u1_div.inverse(), n)}, {u2, jc(-I, s.u2_div.inverse(), n)}};
  JSeries one = jc(1, {}, n);
  using LMat = std::array<std::array<LinL, 2>, 2>;
  LMat Lp{{{LinL{{t, one}}, uu}, {LinL{}, LinL{{ti, one}}}}};
  LinL lower;
  for (const auto& [sym, c] : ubar) lower[sym] = c * (-fs(StructureKind::exp, 1, J, n));
  LMat Lm{{{LinL{{ti, one}}, LinL{}}, {lower, LinL{{t, one}}}}};
  for (int pm = 0; pm < 2; ++pm) {
    const LMat& L = pm == 0 ? Lp : Lm;
    const FormalMatrix& target = pm == 0 ? Rp : Rm;
    std::size_t bad = 0;
    for (int i = 0; i < 2; ++i)
      for (int jj = 0; jj < 2; ++jj)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            JSeries val = pair_linear(v, L[i][jj], T[k][l], n);
            ZSeries res = val.evaluate(j) -
                          target[static_cast<std::size_t>(2 * i + k)][static_cast<std::size_t>(2 * jj + l)].evaluate(j);
            if (!res.is_zero()) {
              ++bad;
              r.zero(std::string("<L") + (pm == 0 ? "+" : "-") + "_" + std::to_string(i + 1) +
                         std::to_string(jj + 1) + ", T_" + std::to_string(k + 1) + std::to_string(l + 1) + ">",
                     res);
            }
          }
    if (!bad) r.pass(std::string("<L") + (pm == 0 ? "(+)" : "(-)") + ", T> = " + (pm == 0 ? "P R P" : "R^-1") +
                     " (16 entries)");
  }
  // aggregates x = e^{Jz/2}, lambda = 2 sinh(Jz)
  JSeries x = fs(StructureKind::exp, half, J, n), xinv = fs(StructureKind::exp, -half, J, n);
  JSeries lambda = fs(StructureKind::sinh, 1, J, n) * GaussRational(2);
  JPolyNC bb = T[0][1];
  JPolyNC bbar = JPolyNC::term(Word{B1}, jc(1, s.b1_scale, n)) - JPolyNC::term(Word{B2}, jc(I, s.b2_scale, n));
  r.zero("t(a) = x", (pair_linear(v, LinL{{t, one}}, T[0][0], n) - x).evaluate(j));
  r.zero("u(bbar) = -x lambda", (pair_linear(v, uu, bbar, n) + x * lambda).evaluate(j));
  r.zero("ubar(b) = x^-1 lambda", (pair_linear(v, ubar, bb, n) - xinv * lambda).evaluate(j));
  r.zero("t(b) = 0", pair_linear(v, LinL{{t, one}}, bb, n).evaluate(j));
  r.zero("u(b) = 0", pair_linear(v, uu, bb, n).evaluate(j));
  r.zero("ubar(bbar) = 0", pair_linear(v, ubar, bbar, n).evaluate(j));
  // the prefactor e^{-Jz} in place of e^{-Jz/2} would give det R = e^{-2Jz}
  SeriesMatrix Rz_e = evaluate(Rz, j);
  ZSeries d_printed = det4(Rz_e) * fs(StructureKind::exp, -4, J, n).evaluate(j);
  if (!(d_printed == ZSeries::constant(1, n)))
    r.note("with R = e^{-Jz} R_z the determinant is " + d_printed.to_string() + ", not 1; e^{-Jz/2} is used");
  return r;
}

CheckReport verify_ideal_annihilation(Variant v, const JAssign& j, int maxlen, int n) {
  if (maxlen < 1) throw std::invalid_argument("maxlen must be at least 1");
  CheckReport r;
  FunAlgebra alg = build_fun(v, j, n);
  const auto& fa = alg.rs.alphabet();
  std::vector<std::pair<std::string, ZPoly>> rels;
  for (const auto& [lhs, rhs] : alg.rs.rules())
    rels.emplace_back(fa.format(lhs) + " rule", ZPoly::term(lhs, alg.rs.scalar(1)) - rhs);
  rels.emplace_back("det_q - 1", alg.det - alg.rs.one());
  Pairing p(v, j, n);
  std::vector<Word> words = all_words(4, maxlen);
  for (const auto& [name, rel] : rels) {
    std::size_t bad = 0;
    for (const auto& w : words) {
      ZSeries val = p(ZPoly::term(w, ZSeries::constant(1, n)), rel);
      if (!val.is_zero()) {
        ++bad;
        if (bad <= 3) r.zero("<" + l_alphabet().format(w) + ", " + name + "> = 0", val);
      }
    }
    if (bad > 3) r.fail(name + " annihilated", std::to_string(bad) + " nonzero pairings");
    if (!bad) r.pass("L words up to length " + std::to_string(maxlen) + " annihilate the " + name);
  }
  return r;
}

CheckReport verify_relation_functionals(Variant v, const JAssign& j, int maxlen, int n) {
  CheckReport r;
  VariantSpec s = VariantSpec::of(v);
  const auto& la = l_alphabet();
  auto lw = [&](const char* w) { return ZPoly::term(la.word(w), ZSeries::constant(1, n)); };
  JMono m1 = s.H_div * s.u1_div * s.u2_div.inverse();
  JMono m2 = s.H_div * s.u2_div * s.u1_div.inverse();
  JMono m12 = s.u1_div * s.u2_div;
  ZSeries ch = fs(StructureKind::cosh, 1, s.J, n).evaluate(j);
  ZSeries c1 = (fs(StructureKind::sinhc, 1, s.J, n) * jc(I, m1, n)).evaluate(j);
  ZSeries c2 = (fs(StructureKind::sinhc, 1, s.J, n) * jc(-I, m2, n)).evaluate(j);
  ZSeries c12 = (fs(StructureKind::exp, -1, s.J, n) * fs(StructureKind::sinh, 1, s.J, n) * jc(I, m12, n)).evaluate(j);
  std::vector<std::pair<std::string, ZPoly>> rels = {
      {"t t^-1 = 1", lw("t ti") - lw("")},
      {"t^-1 t = 1", lw("ti t") - lw("")},
      {"u1 t = t (cosh(Jz) u1 + i m1 sinh(Jz)/J u2)", lw("u1 t") - lw("t u1") * ch - lw("t u2") * c1},
      {"u2 t = t (cosh(Jz) u2 - i m2 sinh(Jz)/J u1)", lw("u2 t") - lw("t u2") * ch - lw("t u1") * c2},
      {"[u2,u1] = i m12 e^{-Jz} sinh(Jz) (t^2 - t^-2)",
       lw("u2 u1") - lw("u1 u2") - (lw("t t") - lw("ti ti")) * c12},
  };
  Pairing p(v, j, n);
  std::vector<Word> words = all_words(4, maxlen);
  for (const auto& [name, rel] : rels) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& w : words) {
      ZSeries val = p(rel, ZPoly::term(w, ZSeries::constant(1, n)));
      if (!val.is_zero() && ++bad == 1) first = fun_alphabet().format(w) + ": " + val.to_string();
    }
    r.expect(name + " on Fun words up to length " + std::to_string(maxlen), bad == 0,
             bad ? std::to_string(bad) + " nonzero, first " + first : "");
  }
  return r;
}

CheckReport verify_pairing_consistency(Variant v, const JAssign& j, int maxlen, int n) {
  CheckReport r;
  Pairing p(v, j, n);
  FunAlgebra alg = build_fun(v, j, n);
  HopfMaps h = hopf_maps_fun(alg);
  // t^-1 is the antipode transpose of t
  for (char g = 0; g < 4; ++g) {
    ZSeries via_S = p(ZPoly::term(Word{t}, ZSeries::constant(1, n)), h.S.images.at(g));
    r.zero("<t^-1, " + fun_alphabet().name(g) + "> = <t, S(" + fun_alphabet().name(g) + ")>",
           via_S - p.word(Word{ti}, Word{g}));
  }
  std::vector<Word> lws = all_words(4, maxlen), fws = all_words(4, maxlen);
  std::mt19937 rng(12345);
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const auto& lw : lws)
    for (const auto& fw : fws) {
      if (lw.size() + fw.size() > static_cast<std::size_t>(maxlen) + 1 && rng() % 8 != 0) continue;
      ++checked;
      ZSeries d = p.word(lw, fw) - p.word_alt(lw, fw);
      if (!d.is_zero() && ++bad == 1)
        first = l_alphabet().format(lw) + " on " + fun_alphabet().format(fw) + ": " + d.to_string();
    }
  r.expect("both recursive extensions agree (" + std::to_string(checked) + " word pairs)", bad == 0, first);
  return r;
}

}  // namespace ckq
