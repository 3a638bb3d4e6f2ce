// Isomorphisms su_q(2;j) -> so_q(3;j;P) for the v02 and v12 couplings,
// and signed-permutation isomorphisms between contracted so algebras.
#pragma once

#include <vector>

#include "ckq/uqalg.hpp"

namespace ckq {

enum class IsoConvention {
  /// z = i zh/2 and E = e^{-iJ zh/4}, the reference convention.
  reference,
  /// z = -i zh/2 and E = e^{+iJ zh/4}; intertwines the coproducts directly.
  matched,
};

struct IsoSpec {
  SuAlgebra source;
  SoAlgebra target;
  IsoConvention convention = IsoConvention::matched;
  /// z = zscale * zh.
  GaussRational zscale;
  /// Images of u1, u2, H.
  GenMap<ZPoly> phi;
  /// D (v02) or F (v12) and the phase E.
  ZSeries factor;
  ZSeries phase;
};

IsoSpec build_iso(Variant v, const JAssign& j, int order, IsoConvention c = IsoConvention::matched);

/// Applies phi after substituting z -> zscale zh in the coefficients.
ZPoly iso_apply(const IsoSpec& iso, const ZPoly& p);
ZTensor iso_apply(const IsoSpec& iso, const ZTensor& t);

CheckReport verify_iso_relations(const IsoSpec& iso);
/// Coproducts and counits must intertwine; the antipode comparison is a note.
CheckReport verify_iso_coproducts(const IsoSpec& iso);

/// Relations and coproducts in the matched convention, with the reference
/// convention's outcome and degeneracy at dual j recorded as notes.
CheckReport iso_report(Variant v, const JAssign& j, int order);

/// Linear generator map between two so algebras given by images of X01, X02, X12.
CheckReport check_candidate_iso(const GenMap<ZPoly>& map, const SoAlgebra& source, const SoAlgebra& target);
/// All 48 signed permutations X_a -> s X_{pi(a)} between two so algebras.
std::vector<GenMap<ZPoly>> signed_permutations(const SoAlgebra& target);
/// Contracted structure constants, parameter scaling flags and the Galilean isomorphism search.
CheckReport special_case_report(int order);

}  // namespace ckq
