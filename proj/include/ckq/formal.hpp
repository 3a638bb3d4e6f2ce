// Truncated z-series whose coefficients are Laurent polynomials in formal
// symbols j1, j2. Used wherever j^{-1} must cancel before a dual value is
// assigned: contraction by scalings, component extraction from T, L-matrix
// pairings.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckq/scalar.hpp"

namespace ckq {

/// j1^e1 j2^e2, exponents may be negative.
struct JMono {
  int e1 = 0;
  int e2 = 0;

  static JMono j1() { return {1, 0}; }
  static JMono j2() { return {0, 1}; }
  static JMono j12() { return {1, 1}; }

  JMono operator*(JMono o) const { return {e1 + o.e1, e2 + o.e2}; }
  JMono inverse() const { return {-e1, -e2}; }
  JMono pow(int k) const { return {e1 * k, e2 * k}; }
  bool is_one() const { return e1 == 0 && e2 == 0; }
  auto operator<=>(const JMono&) const = default;

  DualCoeff evaluate(const JAssign& j) const { return j.monomial(e1, e2); }
  std::string to_string() const;
};

using JPoly = std::map<JMono, GaussRational>;

class JSeries {
 public:
  JSeries() = default;
  explicit JSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

  static JSeries constant(const GaussRational& c, int order);
  static JSeries monomial(const GaussRational& c, JMono m, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const JPoly& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;

  JSeries& operator+=(const JSeries& o);
  JSeries& operator-=(const JSeries& o);
  JSeries& operator*=(const JSeries& o);
  JSeries& operator*=(const GaussRational& s);
  JSeries& operator*=(JMono m);

  friend JSeries operator+(JSeries a, const JSeries& b) { return a += b; }
  friend JSeries operator-(JSeries a, const JSeries& b) { return a -= b; }
  friend JSeries operator*(const JSeries& a, const JSeries& b);
  friend JSeries operator*(JSeries a, const GaussRational& s) { return a *= s; }
  friend JSeries operator*(JSeries a, JMono m) { return a *= m; }
  JSeries operator-() const;

  friend bool operator==(const JSeries& a, const JSeries& b) { return a.c_ == b.c_; }

  /// Requires the z^0 coefficient to be a single monomial.
  JSeries inverse() const;
  /// z -> c m z.
  JSeries subst_scale(const GaussRational& c, JMono m) const;
  /// Componentwise minimum exponent over all terms; nullopt for zero.
  std::optional<JMono> content() const;
  /// Assigns j; throws std::domain_error on a surviving negative power of a dual j.
  ZSeries evaluate(const JAssign& j) const;
  std::string to_string(const std::string& var = "z") const;

 private:
  void add_term(int k, JMono m, const GaussRational& c);
  std::vector<JPoly> c_;
};

/// exp/cosh/sinh(s J z) or sinh(s J z)/J, with J a formal monomial.
JSeries formal_structure_fn(StructureKind kind, const GaussRational& scale, JMono J, int order);

}  // namespace ckq
