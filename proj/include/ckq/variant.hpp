// The three couplings of Hopf and Cayley-Klein structure. Each variant is
// fixed by its deformation multiplier J (z~ = J z) and by the j-monomials that
// scale the standard generators.
#pragma once

#include <string>
#include <vector>

#include "ckq/formal.hpp"

namespace ckq {

enum class Variant { v02, v12, v01 };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);
std::vector<Variant> all_variants();

struct VariantSpec {
  Variant name = Variant::v02;
  /// Deformation multiplier; equals the scaling of a2 and of the primitive.
  JMono J;
  /// Function side: a~2 = J a2, b~k = bk_scale * bk.
  JMono b1_scale;
  JMono b2_scale;
  /// Algebra side: u~k = uk / uk_div, H~ = H / H_div.
  JMono u1_div;
  JMono u2_div;
  JMono H_div;
  /// Name of the primitive rotation generator of the matching so-algebra.
  std::string primitive;

  static VariantSpec of(Variant v);
  DualCoeff J_at(const JAssign& j) const { return J.evaluate(j); }
};

}  // namespace ckq
