#include "ckq/scalar.hpp"

#include <sstream>

namespace ckq {

OrderMismatch::OrderMismatch(int lhs, int rhs)
    : std::invalid_argument("series order mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

// ---------------------------------------------------------------- GaussRational

GaussRational GaussRational::ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return {r};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Gaussian rational");
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational GaussRational::pow(unsigned k) const {
  GaussRational r{1};
  for (unsigned n = 0; n < k; ++n) r *= *this;
  return r;
}

std::string GaussRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "i";
  }
  std::string im = im_ == 1 ? "" : (im_ == -1 ? "-" : im_.get_str());
  std::string sep = sgn(im_) > 0 ? "+" : "";
  return "(" + re_.get_str() + sep + im + "i)";
}

// ---------------------------------------------------------------- DualCoeff

DualCoeff DualCoeff::basis(int mask) {
  DualCoeff d;
  d[mask] = 1;
  return d;
}

bool DualCoeff::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

DualCoeff& DualCoeff::operator+=(const DualCoeff& o) {
  for (std::size_t m = 0; m < 4; ++m)
    if (!o.c_[m].is_zero()) c_[m] += o.c_[m];
  return *this;
}

DualCoeff& DualCoeff::operator-=(const DualCoeff& o) {
  for (std::size_t m = 0; m < 4; ++m)
    if (!o.c_[m].is_zero()) c_[m] -= o.c_[m];
  return *this;
}

DualCoeff operator*(const DualCoeff& a, const DualCoeff& b) {
  DualCoeff r;
  for (int ma = 0; ma < 4; ++ma) {
    if (a[ma].is_zero()) continue;
    for (int mb = 0; mb < 4; ++mb) {
      if ((ma & mb) != 0 || b[mb].is_zero()) continue;  // iota_k^2 = 0
      r[ma | mb] += a[ma] * b[mb];
    }
  }
  return r;
}

DualCoeff& DualCoeff::operator*=(const DualCoeff& o) { return *this = *this * o; }

DualCoeff& DualCoeff::operator*=(const GaussRational& s) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= s;
  return *this;
}

DualCoeff DualCoeff::operator-() const {
  DualCoeff r = *this;
  for (auto& c : r.c_)
    if (!c.is_zero()) c = -c;
  return r;
}

DualCoeff DualCoeff::inverse() const {
  if (!is_unit()) throw std::domain_error("DualCoeff with zero scalar part is not invertible");
  // a = c0 (1 + n) with n nilpotent, n^3 = 0.
  GaussRational inv0 = c_[0].inverse();
  DualCoeff n = *this;
  n *= inv0;
  n[0] = 0;
  DualCoeff r = DualCoeff(1) - n + n * n;
  r *= inv0;
  return r;
}

DualCoeff DualCoeff::pow(unsigned k) const {
  DualCoeff r{1};
  for (unsigned n = 0; n < k; ++n) r *= *this;
  return r;
}

std::string DualCoeff::to_string() const {
  static const char* names[4] = {"", "ι1", "ι2", "ι1ι2"};
  std::string out;
  for (int m = 0; m < 4; ++m) {
    if (c_[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += c_[m].to_string();
    } else if (c_[m] == GaussRational{1}) {
      out += names[m];
    } else {
      out += c_[m].to_string() + "*" + names[m];
    }
  }
  return out.empty() ? "0" : out;
}

DualCoeff dual_mul(const DualCoeff& a, const DualCoeff& b) { return a * b; }

// ---------------------------------------------------------------- JAssign

std::vector<JAssign> JAssign::all() {
  using V = Value;
  return {{V::unit, V::unit}, {V::dual, V::unit}, {V::unit, V::dual}, {V::dual, V::dual}};
}

DualCoeff JAssign::j1_coeff() const {
  return j1 == Value::unit ? DualCoeff(1) : DualCoeff::iota1();
}

DualCoeff JAssign::j2_coeff() const {
  return j2 == Value::unit ? DualCoeff(1) : DualCoeff::iota2();
}

namespace {

DualCoeff power_of(JAssign::Value v, int e, int mask, const char* name) {
  if (v == JAssign::Value::unit || e == 0) return DualCoeff(1);
  if (e < 0)
    throw std::domain_error(std::string("negative power of dual ") + name + " is undefined");
  return e == 1 ? DualCoeff::basis(mask) : DualCoeff();
}

}  // namespace

DualCoeff JAssign::monomial(int e1, int e2) const {
  return power_of(j1, e1, DualCoeff::kIota1, "j1") * power_of(j2, e2, DualCoeff::kIota2, "j2");
}

std::string JAssign::name() const {
  std::string a = j1 == Value::unit ? "1" : "i1";
  std::string b = j2 == Value::unit ? "1" : "i2";
  return a + "," + b;
}

JAssign JAssign::parse(const std::string& s) {
  for (auto j : all())
    if (j.name() == s) return j;
  throw std::invalid_argument("unknown j-assignment '" + s + "'");
}

// ---------------------------------------------------------------- ZSeries

ZSeries::ZSeries(int order, std::vector<DualCoeff> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ZSeries ZSeries::constant(const DualCoeff& c, int order) {
  ZSeries s(order);
  s[0] = c;
  return s;
}

ZSeries ZSeries::monomial(const DualCoeff& c, int k, int order) {
  ZSeries s(order);
  if (k <= order) s[k] = c;
  return s;
}

bool ZSeries::is_zero() const { return valuation() < 0; }

int ZSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  if (o.order() != order()) throw OrderMismatch(order(), o.order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  if (o.order() != order()) throw OrderMismatch(order(), o.order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
  const int n = a.order();
  ZSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

ZSeries& ZSeries::operator*=(const ZSeries& o) { return *this = *this * o; }

ZSeries& ZSeries::operator*=(const DualCoeff& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x *= c;
  return *this;
}

ZSeries ZSeries::operator-() const {
  ZSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

ZSeries ZSeries::inverse() const {
  if (!is_unit()) throw std::domain_error("series with non-unit constant term is not invertible");
  const int n = order();
  DualCoeff inv0 = coeffs_[0].inverse();
  ZSeries r(n);
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    DualCoeff acc;
    for (int i = 1; i <= k; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * r[k - i];
    r[k] = -(acc * inv0);
  }
  return r;
}

ZSeries ZSeries::subst_scale(const DualCoeff& c) const {
  ZSeries r = *this;
  DualCoeff p{1};
  for (int k = 1; k <= order(); ++k) {
    p *= c;
    r[k] *= p;
  }
  return r;
}

ZSeries ZSeries::with_order(int order) const {
  ZSeries r(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = coeffs_[static_cast<std::size_t>(k)];
  return r;
}

std::string ZSeries::to_string(const std::string& var) const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    bool compound = cs.find(" + ") != std::string::npos;
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

ZSeries series_arith(const ZSeries& a, const ZSeries& b, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add:
      return a + b;
    case SeriesOp::sub:
      return a - b;
    case SeriesOp::mul:
      return a * b;
  }
  throw std::logic_error("unreachable");
}

ZSeries structure_fn(StructureKind kind, const GaussRational& scale, const DualCoeff& variant_j,
                     int order) {
  DualCoeff sj = variant_j;
  sj *= scale;
  ZSeries r(order);
  DualCoeff power{1};  // (sJ)^k
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      power *= sj;
      fact *= k;
    }
    bool even = k % 2 == 0;
    bool take = kind == StructureKind::exp || (kind == StructureKind::cosh && even) ||
                ((kind == StructureKind::sinh || kind == StructureKind::sinhc) && !even);
    if (!take) continue;
    DualCoeff term;
    if (kind == StructureKind::sinhc) {
      // s^{2m+1} J^{2m}: divide one factor of J out symbolically.
      term = DualCoeff(scale.pow(static_cast<unsigned>(k))) * variant_j.pow(static_cast<unsigned>(k - 1));
    } else {
      term = power;
    }
    term *= GaussRational(Rational(1) / fact);
    r[k] = term;
  }
  return r;
}

ZSeries series_sqrt_one_plus(const ZSeries& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_sqrt_one_plus needs a zero constant term");
  // (1+s)^{1/2} = sum_k binom(1/2, k) s^k.
  const int n = s.order();
  ZSeries result = ZSeries::constant(1, n);
  ZSeries power = ZSeries::constant(1, n);
  Rational binom = 1;
  for (int k = 1; k <= n; ++k) {
    binom *= Rational(1, 2) - (k - 1);
    binom /= k;
    power *= s;
    if (power.is_zero()) break;
    result += power * DualCoeff(GaussRational(binom));
  }
  return result;
}

ZSeries series_subst_scale(const ZSeries& a, const DualCoeff& c) { return a.subst_scale(c); }

}  // namespace ckq
