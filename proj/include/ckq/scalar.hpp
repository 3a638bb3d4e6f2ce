// Exact coefficient arithmetic: Gaussian rationals, the dual-number algebra
// D_2(iota_1, iota_2), and truncated power series in the deformation variable.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

using Rational = mpq_class;

/// Raised when two series of different truncation order are combined.
class OrderMismatch : public std::invalid_argument {
 public:
  OrderMismatch(int lhs, int rhs);
};

/// re + i*im with arbitrary-precision rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {0, 1}; }
  /// The real rational num/den in canonical form.
  static GaussRational ratio(long num, long den);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussRational inverse() const;
  GaussRational pow(unsigned k) const;
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Element of D_2(iota;C) restricted to Q(i): components along
/// 1, iota_1, iota_2, iota_1 iota_2. Component index is the bitmask of the
/// iota factors (bit 0 = iota_1, bit 1 = iota_2).
class DualCoeff {
 public:
  static constexpr int kIota1 = 1;
  static constexpr int kIota2 = 2;
  static constexpr int kIota12 = 3;

  DualCoeff() = default;
  DualCoeff(GaussRational c0) { c_[0] = std::move(c0); }  // NOLINT(google-explicit-constructor)
  DualCoeff(long c0) { c_[0] = c0; }                      // NOLINT(google-explicit-constructor)
  DualCoeff(GaussRational c0, GaussRational c1, GaussRational c2, GaussRational c12)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c12)} {}

  static DualCoeff iota1() { return basis(kIota1); }
  static DualCoeff iota2() { return basis(kIota2); }
  static DualCoeff iota12() { return basis(kIota12); }
  static DualCoeff basis(int mask);

  const GaussRational& operator[](int mask) const { return c_[static_cast<std::size_t>(mask)]; }
  GaussRational& operator[](int mask) { return c_[static_cast<std::size_t>(mask)]; }

  bool is_zero() const;
  /// Invertible iff the 1-component is nonzero.
  bool is_unit() const { return !c_[0].is_zero(); }
  DualCoeff inverse() const;

  DualCoeff& operator+=(const DualCoeff& o);
  DualCoeff& operator-=(const DualCoeff& o);
  DualCoeff& operator*=(const DualCoeff& o);
  DualCoeff& operator*=(const GaussRational& s);

  friend DualCoeff operator+(DualCoeff a, const DualCoeff& b) { return a += b; }
  friend DualCoeff operator-(DualCoeff a, const DualCoeff& b) { return a -= b; }
  friend DualCoeff operator*(const DualCoeff& a, const DualCoeff& b);
  DualCoeff operator-() const;

  friend bool operator==(const DualCoeff& a, const DualCoeff& b) { return a.c_ == b.c_; }

  DualCoeff pow(unsigned k) const;
  std::string to_string() const;

 private:
  std::array<GaussRational, 4> c_{};
};

DualCoeff dual_mul(const DualCoeff& a, const DualCoeff& b);

/// A Cayley-Klein parameter assignment j_k in {1, iota_k}.
struct JAssign {
  enum class Value : std::uint8_t { unit, dual };
  Value j1 = Value::unit;
  Value j2 = Value::unit;

  static JAssign standard() { return {}; }
  static std::vector<JAssign> all();

  DualCoeff j1_coeff() const;
  DualCoeff j2_coeff() const;
  /// j1^e1 j2^e2; throws std::domain_error when a dual j carries a negative exponent.
  DualCoeff monomial(int e1, int e2) const;
  bool is_standard() const { return j1 == Value::unit && j2 == Value::unit; }
  bool any_dual() const { return !is_standard(); }

  /// "1,1", "i1,1", "1,i2", "i1,i2".
  std::string name() const;
  static JAssign parse(const std::string& s);

  friend bool operator==(JAssign a, JAssign b) { return a.j1 == b.j1 && a.j2 == b.j2; }
  friend bool operator<(JAssign a, JAssign b) {
    return std::pair(a.j1, a.j2) < std::pair(b.j1, b.j2);
  }
};

/// Truncated power series sum_{k<=order} c_k z^k with DualCoeff coefficients.
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  ZSeries(int order, std::vector<DualCoeff> coeffs);

  static ZSeries constant(const DualCoeff& c, int order);
  /// c * z^k (zero when k > order).
  static ZSeries monomial(const DualCoeff& c, int k, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const DualCoeff& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  DualCoeff& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<DualCoeff>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or -1 for the zero series.
  int valuation() const;
  bool is_unit() const { return !coeffs_.empty() && coeffs_[0].is_unit(); }

  ZSeries& operator+=(const ZSeries& o);
  ZSeries& operator-=(const ZSeries& o);
  ZSeries& operator*=(const ZSeries& o);
  ZSeries& operator*=(const DualCoeff& c);

  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(ZSeries a, const DualCoeff& c) { return a *= c; }
  friend ZSeries operator*(const DualCoeff& c, ZSeries a) { return a *= c; }
  ZSeries operator-() const;

  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse; requires a unit constant term.
  ZSeries inverse() const;
  /// Substitution z -> c z: coefficient k is multiplied by c^k.
  ZSeries subst_scale(const DualCoeff& c) const;
  /// Same series re-truncated (or zero-extended) to a new order.
  ZSeries with_order(int order) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  std::vector<DualCoeff> coeffs_;
};

enum class SeriesOp : std::uint8_t { add, sub, mul };
enum class StructureKind : std::uint8_t { exp, cosh, sinh, sinhc };

/// Ring operation on two series of equal order; throws OrderMismatch otherwise.
ZSeries series_arith(const ZSeries& a, const ZSeries& b, SeriesOp kind);

/// exp/cosh/sinh(s*J*z), or sinhc(s,J,z) = sinh(s*J*z)/J computed termwise
/// as sum s^{2k+1} J^{2k} z^{2k+1}/(2k+1)! without dividing by J.
ZSeries structure_fn(StructureKind kind, const GaussRational& scale, const DualCoeff& variant_j,
                     int order);

/// r with r^2 = 1 + s, r(0) = 1; requires s(0) = 0.
ZSeries series_sqrt_one_plus(const ZSeries& s);

/// z -> c z.
ZSeries series_subst_scale(const ZSeries& a, const DualCoeff& c);

}  // namespace ckq
