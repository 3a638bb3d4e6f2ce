#include "ckq/formal.hpp"

#include <algorithm>
#include <sstream>

namespace ckq {

std::string JMono::to_string() const {
  std::string out;
  auto part = [&](int e, const char* name) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  part(e1, "j1");
  part(e2, "j2");
  return out.empty() ? "1" : out;
}

JSeries JSeries::constant(const GaussRational& c, int order) {
  return monomial(c, {}, 0, order);
}

JSeries JSeries::monomial(const GaussRational& c, JMono m, int k, int order) {
  JSeries s(order);
  if (k <= order) s.add_term(k, m, c);
  return s;
}

void JSeries::add_term(int k, JMono m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto& poly = c_[static_cast<std::size_t>(k)];
  auto [it, inserted] = poly.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) poly.erase(it);
  }
}

bool JSeries::is_zero() const {
  for (const auto& p : c_)
    if (!p.empty()) return false;
  return true;
}

JSeries& JSeries::operator+=(const JSeries& o) {
  if (o.order() != order()) throw OrderMismatch(order(), o.order());
  for (int k = 0; k <= order(); ++k)
    for (const auto& [m, c] : o[k]) add_term(k, m, c);
  return *this;
}

JSeries& JSeries::operator-=(const JSeries& o) {
  if (o.order() != order()) throw OrderMismatch(order(), o.order());
  for (int k = 0; k <= order(); ++k)
    for (const auto& [m, c] : o[k]) add_term(k, m, -c);
  return *this;
}

JSeries operator*(const JSeries& a, const JSeries& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
  const int n = a.order();
  JSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].empty()) continue;
    for (int j = 0; i + j <= n; ++j)
      for (const auto& [ma, ca] : a[i])
        for (const auto& [mb, cb] : b[j]) r.add_term(i + j, ma * mb, ca * cb);
  }
  return r;
}

JSeries& JSeries::operator*=(const JSeries& o) { return *this = *this * o; }

JSeries& JSeries::operator*=(const GaussRational& s) {
  if (s.is_zero()) {
    for (auto& p : c_) p.clear();
    return *this;
  }
  for (auto& p : c_)
    for (auto& [m, c] : p) c *= s;
  return *this;
}

JSeries& JSeries::operator*=(JMono m) {
  for (auto& p : c_) {
    JPoly shifted;
    for (auto& [mm, c] : p) shifted.emplace(mm * m, std::move(c));
    p = std::move(shifted);
  }
  return *this;
}

JSeries JSeries::operator-() const {
  JSeries r = *this;
  r *= GaussRational(-1);
  return r;
}

JSeries JSeries::inverse() const {
  if (c_.empty() || c_[0].size() != 1)
    throw std::domain_error("formal series inverse needs a single-monomial constant term: " +
                            to_string());
  const auto& [m0, c0] = *c_[0].begin();
  JSeries lead_inv = monomial(c0.inverse(), m0.inverse(), 0, order());
  // this = lead * (1 + g), g(0) = 0
  JSeries g = *this * lead_inv;
  g -= constant(1, order());
  JSeries neg_g = -g;
  JSeries sum = constant(1, order());
  JSeries power = constant(1, order());
  for (int k = 1; k <= order(); ++k) {
    power *= neg_g;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * lead_inv;
}

JSeries JSeries::subst_scale(const GaussRational& c, JMono m) const {
  JSeries r(order());
  GaussRational ck{1};
  for (int k = 0; k <= order(); ++k) {
    for (const auto& [mm, cc] : c_[static_cast<std::size_t>(k)])
      r.add_term(k, mm * m.pow(k), cc * ck);
    ck *= c;
  }
  return r;
}

std::optional<JMono> JSeries::content() const {
  std::optional<JMono> out;
  for (const auto& p : c_)
    for (const auto& [m, c] : p) {
      if (!out) {
        out = m;
      } else {
        out->e1 = std::min(out->e1, m.e1);
        out->e2 = std::min(out->e2, m.e2);
      }
    }
  return out;
}

ZSeries JSeries::evaluate(const JAssign& j) const {
  ZSeries r(order());
  for (int k = 0; k <= order(); ++k)
    for (const auto& [m, c] : c_[static_cast<std::size_t>(k)]) {
      DualCoeff v = m.evaluate(j);
      v *= c;
      r[k] += v;
    }
  return r;
}

std::string JSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k)
    for (const auto& [m, c] : c_[static_cast<std::size_t>(k)]) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string();
      if (!m.is_one()) os << "*" << m.to_string();
      if (k == 1) os << "*" << var;
      if (k > 1) os << "*" << var << "^" << k;
    }
  return first ? "0" : os.str();
}

JSeries formal_structure_fn(StructureKind kind, const GaussRational& scale, JMono J, int order) {
  JSeries r(order);
  Rational fact = 1;
  GaussRational sk{1};
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      fact *= k;
      sk *= scale;
    }
    bool even = k % 2 == 0;
    bool keep = kind == StructureKind::exp || (kind == StructureKind::cosh && even) ||
                ((kind == StructureKind::sinh || kind == StructureKind::sinhc) && !even);
    if (!keep) continue;
    GaussRational c = sk * GaussRational(Rational(1) / fact);
    JMono m = J.pow(kind == StructureKind::sinhc ? k - 1 : k);
    r += JSeries::monomial(c, m, k, order);
  }
  return r;
}

}  // namespace ckq
