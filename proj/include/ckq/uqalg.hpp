// Quantum algebras: su_q(2;j) in the H-presentation (u1, u2, H with
// t = e^{zH/2}) and the orthogonal algebras so_q(3;j;P) with primitive P.
#pragma once

#include <string>

#include "ckq/freealg.hpp"
#include "ckq/funq.hpp"
#include "ckq/hopf.hpp"
#include "ckq/report.hpp"
#include "ckq/variant.hpp"

namespace ckq {

/// u1 < u2 < H, H of weight 0.
const Alphabet& su_alphabet();
/// X01 < X02 < X12; the primitive of `v` has weight 0.
const Alphabet& so_alphabet(Variant v);
/// "X02", "X12", "X01".
std::string primitive_name(Variant v);

/// Rules with [H,u1] = -2i m1 u2, [H,u2] = 2i m2 u1 and
/// [u1,u2] = -i m12 e^{-Jz} sinh(Jz) (t^2 - t^-2).
FormalRules formal_su_rules(JMono J, JMono m1, JMono m2, JMono m12, int order);
/// The same pattern obtained from the variant scalings of the standard algebra.
FormalRules scaled_su_rules(Variant v, int order);
/// Relations in the reference form for v02 and v12 (multiplied through; no j^-1 left).
FormalRules reference_su_rules(Variant v, int order);

/// Rules for the commutators [X01,X02], [X01,X12], [X02,X12] of the
/// variant with primitive P; the commutator of the two non-primitive
/// generators is j^2 sinh(zP)/z.
FormalRules formal_so_rules(Variant v, int order);

struct SuAlgebra {
  VariantSpec variant;
  JAssign j;
  int order = 8;
  RewriteSystem rs;
};

struct SoAlgebra {
  VariantSpec variant;
  JAssign j;
  int order = 8;
  RewriteSystem rs;
  char primitive = 0;
};

SuAlgebra build_su(Variant v, const JAssign& j, int order);
SoAlgebra build_so(Variant primitive, const JAssign& j, int order);

/// e^{-zH/2} uk e^{zH/2} against cosh(Jz) u1 + i m1 sinh(Jz)/J u2 and
/// cosh(Jz) u2 - i m2 sinh(Jz)/J u1.
CheckReport su_conjugation_check(const SuAlgebra& alg);

HopfMaps hopf_maps_su(const SuAlgebra& alg);
HopfMaps hopf_maps_so(const SoAlgebra& alg);
/// -e^{zP/2} X e^{-zP/2} by adjoint series, the conjugation form of the antipode.
GenMap<ZPoly> conjugation_antipode_so(const SoAlgebra& alg);

CheckReport hopf_axiom_report_su(const SuAlgebra& alg);
CheckReport hopf_axiom_report_so(const SoAlgebra& alg);

/// Scaled standard relations reduce to zero; `so` selects the orthogonal family.
CheckReport verify_contraction_alg(Variant v, const JAssign& j, int order, bool so);

}  // namespace ckq
