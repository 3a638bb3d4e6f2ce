// Hopf structure maps on a presented algebra and the axiom checks shared by
// the function algebras and the enveloping algebras.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckq/freealg.hpp"
#include "ckq/report.hpp"

namespace ckq {

struct HopfMaps {
  GenMap<ZTensor> delta;
  std::map<char, ZSeries> eps;
  /// Antihomomorphism.
  GenMap<ZPoly> S;
};

ZTensor tensor_one(const RewriteSystem& rs, int arity = 2);

/// Extension of delta to a polynomial, reduced in A (x) A.
ZTensor apply_delta(const HopfMaps& h, const ZPoly& p, const RewriteSystem& rs);
ZPoly apply_antipode(const GenMap<ZPoly>& S, const ZPoly& p, const RewriteSystem& rs);
ZSeries apply_counit(const HopfMaps& h, const ZPoly& p, int order);

/// sum_i S(x_i) y_i (left = true) or x_i S(y_i) for t = sum x_i (x) y_i.
ZPoly antipode_contract(const HopfMaps& h, const ZTensor& t, const RewriteSystem& rs, bool left);

/// Checks that do not depend on the algebra family. `expected_antipode`
/// gives m(S (x) id) Delta(g) per generator id.
void check_multiplicative(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs);
void check_coassociative(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs);
void check_counit(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs);
void check_antipode(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs,
                    const std::map<char, ZPoly>& expected);
void check_antipode_relations(CheckReport& r, const HopfMaps& h, const RewriteSystem& rs);

/// exp(s z P) for a generator P as a polynomial in P, truncated jointly in z.
ZPoly exp_generator(const RewriteSystem& rs, char P, const GaussRational& s);
ZTensor exp_generator_tensor(const RewriteSystem& rs, char P, const GaussRational& s, int slot);

/// e^{s z P} X e^{-s z P} = sum (s z)^k/k! ad_P^k(X), reduced, to the series order.
ZPoly adjoint_exp(const RewriteSystem& rs, char P, const GaussRational& s, const ZPoly& X);

}  // namespace ckq
