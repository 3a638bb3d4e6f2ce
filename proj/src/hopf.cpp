#include "ckq/hopf.hpp"

namespace ckq {

ZTensor tensor_one(const RewriteSystem& rs, int arity) {
  return ZTensor::term(ZTensor::Key(static_cast<std::size_t>(arity)), rs.scalar(1));
}

ZTensor apply_delta(const HopfMaps& h, const ZPoly& p, const RewriteSystem& rs) {
  std::function<ZTensor(const ZTensor&)> reduce = [&](const ZTensor& t) {
    return rs.normal_form(t);
  };
  return rs.normal_form(apply_map(h.delta, p, tensor_one(rs), reduce));
}

ZPoly apply_antipode(const GenMap<ZPoly>& S, const ZPoly& p, const RewriteSystem& rs) {
  std::function<ZPoly(const ZPoly&)> reduce = [&](const ZPoly& x) { return rs.normal_form(x); };
  return rs.normal_form(apply_map(S, p, rs.one(), reduce));
}

ZSeries apply_counit(const HopfMaps& h, const ZPoly& p, int order) {
  ZSeries out(order);
  for (const auto& [w, c] : p.terms()) {
    ZSeries v = c;
    for (char g : w) {
      auto it = h.eps.find(g);
      if (it == h.eps.end()) throw std::out_of_range("counit has no value for a generator");
      v *= it->second;
      if (v.is_zero()) break;
    }
    out += v;
  }
  return out;
}

ZPoly antipode_contract(const HopfMaps& h, const ZTensor& t, const RewriteSystem& rs, bool left) {
  std::map<Word, ZPoly> cache;
  auto S_of = [&](const Word& w) -> const ZPoly& {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, apply_antipode(h.S, ZPoly::term(w, rs.scalar(1)), rs)).first;
    return it->second;
  };
  ZPoly out;
  for (const auto& [k, c] : t.terms()) {
    ZPoly x = left ? S_of(k[0]) : ZPoly::term(k[0], rs.scalar(1));
    ZPoly y = left ? ZPoly::term(k[1], rs.scalar(1)) : S_of(k[1]);
    out += (x * y) * c;
  }
  return rs.normal_form(out);
}

void check_multiplicative(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs) {
  const auto& a = rs.alphabet();
  for (const auto& [lhs, rhs] : rs.rules()) {
    ZPoly rel = ZPoly::term(lhs, rs.scalar(1)) - rhs;
    r.zero("coproduct respects " + a.format(lhs) + " rule", apply_delta(h, rel, rs), a);
  }
}

namespace {

/// Applies delta to one slot of every term, raising the arity by one.
ZTensor expand_slot(const HopfMaps& h, const ZTensor& t, int slot, const RewriteSystem& rs) {
  ZTensor out(t.arity() + 1);
  std::map<Word, ZTensor> cache;
  for (const auto& [k, c] : t.terms()) {
    const Word& w = k[static_cast<std::size_t>(slot)];
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, apply_delta(h, ZPoly::term(w, rs.scalar(1)), rs)).first;
    for (const auto& [dk, dc] : it->second.terms()) {
      ZTensor::Key key;
      for (int i = 0; i < t.arity(); ++i) {
        if (i == slot) {
          key.push_back(dk[0]);
          key.push_back(dk[1]);
        } else {
          key.push_back(k[static_cast<std::size_t>(i)]);
        }
      }
      out.add(key, c * dc);
    }
  }
  return rs.normal_form(out);
}

}  // namespace

void check_coassociative(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs) {
  const auto& a = rs.alphabet();
  for (const auto& [g, img] : h.delta.images) {
    ZTensor d = apply_delta(h, rs.gen(a.name(g)), rs);
    ZTensor left = expand_slot(h, d, 0, rs);
    ZTensor right = expand_slot(h, d, 1, rs);
    r.zero("coassociativity on " + a.name(g), left - right, a);
  }
}

void check_counit(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs) {
  const auto& a = rs.alphabet();
  for (const auto& [g, img] : h.delta.images) {
    ZPoly gp = rs.gen(a.name(g));
    ZTensor d = apply_delta(h, gp, rs);
    ZPoly left, right;
    for (const auto& [k, c] : d.terms()) {
      left += ZPoly::term(k[1], c * apply_counit(h, ZPoly::term(k[0], rs.scalar(1)), rs.order()));
      right += ZPoly::term(k[0], c * apply_counit(h, ZPoly::term(k[1], rs.scalar(1)), rs.order()));
    }
    r.zero("counit (eps x id) on " + a.name(g), rs.normal_form(left - gp), a);
    r.zero("counit (id x eps) on " + a.name(g), rs.normal_form(right - gp), a);
  }
}

void check_antipode(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs,
                    const std::map<char, ZPoly>& expected) {
  const auto& a = rs.alphabet();
  for (const auto& [g, want] : expected) {
    ZTensor d = apply_delta(h, rs.gen(a.name(g)), rs);
    r.zero("antipode m(S x id) on " + a.name(g), antipode_contract(h, d, rs, true) - want, a);
    r.zero("antipode m(id x S) on " + a.name(g), antipode_contract(h, d, rs, false) - want, a);
  }
}

void check_antipode_relations(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs) {
  const auto& a = rs.alphabet();
  for (const auto& [lhs, rhs] : rs.rules()) {
    ZPoly rel = ZPoly::term(lhs, rs.scalar(1)) - rhs;
    r.zero("antipode respects " + a.format(lhs) + " rule", apply_antipode(h.S, rel, rs), a);
  }
}

ZPoly exp_generator(const RewriteSystem& rs, char P, const GaussRational& s) {
  ZPoly out;
  Rational fact = 1;
  GaussRational sk{1};
  for (int k = 0; k <= rs.order(); ++k) {
    if (k > 0) {
      fact *= k;
      sk *= s;
    }
    out.add(Word(static_cast<std::size_t>(k), P),
            ZSeries::monomial(DualCoeff(sk * GaussRational(Rational(1) / fact)), k, rs.order()));
  }
  return out;
}

ZTensor exp_generator_tensor(const RewriteSystem& rs, char P, const GaussRational& s, int slot) {
  ZTensor out(2);
  ZPoly e = exp_generator(rs, P, s);
  for (const auto& [w, c] : e.terms()) {
    ZTensor::Key k(2);
    k[static_cast<std::size_t>(slot)] = w;
    out.add(k, c);
  }
  return out;
}

ZPoly adjoint_exp(const RewriteSystem& rs, char P, const GaussRational& s, const ZPoly& X) {
  ZPoly Pp = ZPoly::term(Word(1, P), rs.scalar(1));
  ZPoly term = rs.normal_form(X);
  ZPoly out = term;
  Rational fact = 1;
  GaussRational sk{1};
  for (int k = 1; k <= rs.order(); ++k) {
    fact *= k;
    sk *= s;
    term = nc_commutator(Pp, term, rs);
    if (term.is_zero()) break;
    out += term * ZSeries::monomial(DualCoeff(sk * GaussRational(Rational(1) / fact)), k, rs.order());
  }
  return out;
}

}  // namespace ckq
