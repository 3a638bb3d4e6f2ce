// Duality pairing between the L-symbol algebra (t, t^-1, u1, u2) and
// Fun(SU_q(2;j)). Generator values come from a table; longer words are
// paired through the coproducts on either side.
#pragma once

#include <map>
#include <utility>

#include "ckq/funq.hpp"
#include "ckq/report.hpp"
#include "ckq/variant.hpp"

namespace ckq {

/// t, ti (= t^-1), u1, u2.
const Alphabet& l_alphabet();

namespace lsym {
constexpr char t = 0, ti = 1, u1 = 2, u2 = 3;
}

/// <sym, gen> with j kept formal: (div_sym / scale_gen) times the standard
/// value with z -> Jz.
JSeries formal_pair_gen(Variant v, char sym, char gen, int order);
/// The component tables in the reference form for v02 and v12.
JSeries reference_pair_gen(Variant v, char sym, char gen, int order);
/// Evaluated value; v02 and v12 use the reference tables, v01 the scaled one.
ZSeries pair_gen(Variant v, const JAssign& j, char sym, char gen, int order);

class Pairing {
 public:
  Pairing(Variant v, const JAssign& j, int order);

  int order() const { return order_; }
  /// <g h..., x> = sum <g, x(1)> <h..., x(2)> with the Fun coproduct.
  ZSeries word(const Word& lw, const Word& fw);
  /// Splits the Fun word first, using the coproduct of the L-symbols.
  ZSeries word_alt(const Word& lw, const Word& fw);
  ZSeries operator()(const ZPoly& l, const ZPoly& f);

 private:
  ZSeries gen_word(char g, const Word& fw);
  const ZTensor& fun_delta(const Word& fw);
  ZSeries fun_counit(const Word& fw) const;
  ZSeries l_counit(const Word& lw) const;
  /// Coproduct of an L word in the free L algebra.
  ZTensor l_delta(const Word& lw) const;

  int order_;
  std::map<std::pair<char, char>, ZSeries> table_;
  HopfMaps fun_;
  ZTensor fun_one_;
  std::map<std::pair<Word, Word>, ZSeries> memo_;
  std::map<Word, ZTensor> delta_memo_;
};

/// <L(+-)_{ij}, T_{kl}> against R(+) = P R P and R(-) = R^-1 with
/// R = e^{-Jz/2} R_z, plus det R = 1 and the aggregate values.
CheckReport verify_LT_pairing(Variant v, const JAssign& j, int order);
/// Every L word up to maxlen pairs to zero with every Fun defining relation and det_q - 1.
CheckReport verify_ideal_annihilation(Variant v, const JAssign& j, int maxlen, int order);
/// The algebra relations in t-form pair to zero with every Fun word up to maxlen.
CheckReport verify_relation_functionals(Variant v, const JAssign& j, int maxlen, int order);
/// Both recursive extensions agree on all word pairs up to maxlen.
CheckReport verify_pairing_consistency(Variant v, const JAssign& j, int maxlen, int order);

}  // namespace ckq
