#include "ckq/variant.hpp"

#include <stdexcept>

namespace ckq {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::v02: return "v02";
    case Variant::v12: return "v12";
    case Variant::v01: return "v01";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (auto v : all_variants())
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

std::vector<Variant> all_variants() { return {Variant::v02, Variant::v12, Variant::v01}; }

VariantSpec VariantSpec::of(Variant v) {
  const JMono j1 = JMono::j1(), j2 = JMono::j2(), j12 = JMono::j12();
  switch (v) {
    case Variant::v02: return {v, j12, j1, j2, j1, j2, j12, "X02"};
    case Variant::v12: return {v, j2, j1, j12, j1, j12, j2, "X12"};
    case Variant::v01: return {v, j1, j12, j2, j12, j2, j1, "X01"};
  }
  throw std::invalid_argument("bad variant");
}

}  // namespace ckq
