// The quantum group Fun(SU_q(2;j)) in the three coupling variants:
// generators, R-matrix, RTT relations, quantum determinant, Hopf maps and
// contraction from the standard group.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ckq/freealg.hpp"
#include "ckq/hopf.hpp"
#include "ckq/report.hpp"
#include "ckq/variant.hpp"

namespace ckq {

enum class FunMode { bialgebra, ring };

/// b1 < b2 < a1 < a2.
const Alphabet& fun_alphabet();

using FormalMatrix = std::vector<std::vector<JSeries>>;
using SeriesMatrix = std::vector<std::vector<ZSeries>>;
using JMatrix2 = std::array<std::array<JPolyNC, 2>, 2>;
using FormalRules = std::map<Word, JPolyNC>;

/// T with entries a1 + iJ a2, s1 b1 + i s2 b2, -e^{-Jz}(s1 b1 - i s2 b2), a1 - iJ a2.
JMatrix2 formal_T(const VariantSpec& v, int order);
/// R_z with e^{Jz} on the diagonal corners and 2 sinh(Jz) below the diagonal.
FormalMatrix formal_R(const VariantSpec& v, int order);
SeriesMatrix r_matrix(Variant v, const JAssign& j, int order);
SeriesMatrix evaluate(const FormalMatrix& m, const JAssign& j);

/// Rule pattern of the relations for multiplier J and b-scalings s1, s2:
/// b2b1 -> b1b2, a1bk -> cosh(Jz) bk a1 + iJ sinh(Jz) bk a2,
/// a2bk -> cosh(Jz) bk a2 - i sinhc bk a1,
/// a2a1 -> a1a2 + i(s1^2 b1^2 + s2^2 b2^2) e^{-Jz} sinhc.
FormalRules formal_fun_rules(JMono J, JMono s1, JMono s2, int order);
/// The same pattern with the commutator [a1,a2] carrying e^{+Jz} (reference form)
/// in the literature for v02; used only to test extraction against it.
FormalRules reference_fun_rules(int order);

class RelationExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solves the 16 RTT entries for the six leading words with formal j.
FormalRules relations_from_rtt_formal(Variant v, int order);
RewriteSystem relations_from_rtt(Variant v, const JAssign& j, int order);
RewriteSystem rewrite_system_from(const FormalRules& rules, const Alphabet& a, const JAssign& j,
                                  int order);

struct FunAlgebra {
  VariantSpec variant;
  JAssign j;
  int order = 8;
  FunMode mode = FunMode::bialgebra;
  RewriteSystem rs;
  /// Bialgebra rules, kept also in ring mode.
  RewriteSystem bialgebra;
  /// Central grouplike det_q in bialgebra normal form.
  ZPoly det;
};

FunAlgebra build_fun(Variant v, const JAssign& j, int order, FunMode mode = FunMode::bialgebra);

std::vector<std::vector<ZPoly>> rtt_residual(const FunAlgebra& alg);
std::vector<std::vector<ZPoly>> rtt_residual(const RewriteSystem& rs, Variant v, const JAssign& j);
SeriesMatrix ybe_residual(Variant v, const JAssign& j, int order);
SeriesMatrix ybe_residual(const SeriesMatrix& R);

/// det_q = T11 T22 - e^{Jz} T12 T21 in bialgebra normal form.
ZPoly quantum_det(const FunAlgebra& alg);
/// a1^2 + J^2 a2^2 + s1^2 b1^2 + s2^2 b2^2, the z -> 0 limit of det_q.
ZPoly classical_det(Variant v, const JAssign& j, int order);
bool check_central(const FunAlgebra& alg, const ZPoly& p);

HopfMaps hopf_maps_fun(const FunAlgebra& alg);
/// Antipode with S(T)_{12} = -e^{+Jz} T12 instead of -e^{-Jz} T12.
GenMap<ZPoly> reference_antipode_fun(const FunAlgebra& alg);

CheckReport hopf_axiom_report_fun(const FunAlgebra& alg);
CheckReport verify_contraction_fun(Variant v, const JAssign& j, int order);
CheckReport rtt_report(const FunAlgebra& alg);
CheckReport ybe_report(Variant v, const JAssign& j, int order);
CheckReport det_report(Variant v, const JAssign& j, int order);
/// Extracted relations against the hard-coded v02 rules and the reference ones.
CheckReport relations_report(Variant v, const JAssign& j, int order);
/// [b1,b2] = 0, [b1,a2] = iz b1, [b2,a2] = iz b2 and a1 central at (i1,i2).
CheckReport contracted_relations_report(int order);

}  // namespace ckq
