// Noncommutative polynomials over series coefficients, tensor powers,
// quadratic rewrite systems with normal forms, and generator maps.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ckq/formal.hpp"
#include "ckq/scalar.hpp"

namespace ckq {

/// A word is a string of symbol ids; id order is the alphabet precedence.
using Word = std::string;

class Alphabet {
 public:
  Alphabet() = default;
  /// names in ascending precedence; weights default to 1.
  explicit Alphabet(std::vector<std::string> names, std::vector<int> weights = {});

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  char id(const std::string& name) const;
  int weight(char id) const { return weights_.at(static_cast<std::size_t>(id)); }
  int weight(const Word& w) const;

  /// Space-separated symbol names; "" or "1" is the empty word.
  Word word(const std::string& spaced) const;
  std::string format(const Word& w) const;

  /// Weighted degree-lex: total weight, then length, then lex by precedence.
  bool less(const Word& a, const Word& b) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

struct WordOrder {
  const Alphabet* alphabet;
  bool operator()(const Word& a, const Word& b) const { return alphabet->less(a, b); }
};

template <class C>
class NCPoly {
 public:
  using Terms = std::map<Word, C>;

  NCPoly() = default;
  static NCPoly term(const Word& w, const C& c) {
    NCPoly p;
    p.add(w, c);
    return p;
  }

  void add(const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const C* coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  NCPoly& operator*=(const C& s) {
    Terms out;
    for (auto& [w, c] : terms_) {
      C v = c * s;
      if (!v.is_zero()) out.emplace(w, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  NCPoly operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const C& s) { return a *= s; }
  friend NCPoly operator*(const C& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  template <class F>
  auto map_coeffs(F&& f) const -> NCPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    NCPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

  std::string to_string(const Alphabet& a, const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + it->second.to_string(var) + ")";
      if (!it->first.empty()) out += "*" + a.format(it->first);
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Elements of A^{(x)k}: map from k-tuples of words to coefficients.
template <class C>
class TensorPoly {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, C>;

  explicit TensorPoly(int arity = 2) : arity_(arity) {}
  static TensorPoly term(const Key& k, const C& c) {
    TensorPoly t(static_cast<int>(k.size()));
    t.add(k, c);
    return t;
  }
  /// p_1 (x) p_2 (x) ... (x) p_k.
  static TensorPoly pure(const std::vector<NCPoly<C>>& factors) {
    TensorPoly t(static_cast<int>(factors.size()));
    t.pure_rec(factors, 0, Key{}, nullptr);
    return t;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const C& c) {
    if (static_cast<int>(k.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  TensorPoly& operator*=(const C& s) {
    Terms out;
    for (auto& [k, c] : terms_) {
      C v = c * s;
      if (!v.is_zero()) out.emplace(k, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(TensorPoly a, const C& s) { return a *= s; }
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    a.check(b);
    TensorPoly r(a.arity_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k(ka.size());
        for (std::size_t i = 0; i < ka.size(); ++i) k[i] = ka[i] + kb[i];
        r.add(k, ca * cb);
      }
    return r;
  }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> TensorPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    TensorPoly<std::decay_t<decltype(f(std::declval<const C&>()))>> r(arity_);
    for (const auto& [k, c] : terms_) r.add(k, f(c));
    return r;
  }

  std::string to_string(const Alphabet& a, const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string(var) + ")*";
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += "(x)";
        out += a.format(k[i]);
      }
    }
    return out;
  }

 private:
  void check(const TensorPoly& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
  }
  void pure_rec(const std::vector<NCPoly<C>>& f, std::size_t i, Key key, const C* acc) {
    if (i == f.size()) {
      if (acc) add(key, *acc);
      return;
    }
    for (const auto& [w, c] : f[i].terms()) {
      Key k = key;
      k.push_back(w);
      C next = acc ? *acc * c : c;
      pure_rec(f, i + 1, std::move(k), &next);
    }
  }

  int arity_;
  Terms terms_;
};

using ZPoly = NCPoly<ZSeries>;
using JPolyNC = NCPoly<JSeries>;
using ZTensor = TensorPoly<ZSeries>;
using JTensor = TensorPoly<JSeries>;

/// Evaluates formal coefficients at a concrete j.
ZPoly evaluate(const JPolyNC& p, const JAssign& j);
ZTensor evaluate(const JTensor& t, const JAssign& j);
/// Divides every coefficient by the common j-content; returns the content.
JMono clear_content(JPolyNC& p);

class StepBudgetExceeded : public std::runtime_error {
 public:
  explicit StepBudgetExceeded(std::size_t budget);
};

/// 10^6 unless CKQ_STEP_BUDGET holds a positive integer.
std::size_t default_step_budget();

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(Alphabet alphabet, int order, std::size_t budget = default_step_budget());

  /// lhs must have length 2 and every rhs word must be strictly smaller.
  void add_rule_word(const Word& lhs, ZPoly rhs);
  /// lhs given as space-separated symbol names.
  void add_rule(const std::string& lhs_spaced, ZPoly rhs) {
    add_rule_word(alphabet_.word(lhs_spaced), std::move(rhs));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int order() const { return order_; }
  std::size_t budget() const { return budget_; }
  void set_budget(std::size_t b) { budget_ = b; }
  const std::map<Word, ZPoly>& rules() const { return rules_; }
  const ZPoly* rule(const Word& lhs) const;

  ZSeries scalar(const DualCoeff& c) const { return ZSeries::constant(c, order_); }
  ZPoly one() const { return ZPoly::term("", scalar(1)); }
  ZPoly gen(const std::string& name) const {
    return ZPoly::term(alphabet_.word(name), scalar(1));
  }
  ZPoly word(const std::string& spaced) const {
    return ZPoly::term(alphabet_.word(spaced), scalar(1));
  }

  bool is_normal(const Word& w) const;
  ZPoly normal_form(const ZPoly& p) const;
  ZTensor normal_form(const ZTensor& t) const;

 private:
  int reducible_at(const Word& w) const;

  Alphabet alphabet_;
  int order_ = 8;
  std::size_t budget_ = 1000000;
  std::map<Word, ZPoly> rules_;
};

ZPoly nc_commutator(const ZPoly& x, const ZPoly& y, const RewriteSystem& rs);

struct CriticalPairFailure {
  Word overlap;
  ZPoly difference;
};

struct CriticalPairReport {
  std::size_t checked = 0;
  std::vector<CriticalPairFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Reduces every overlap of two rule left sides both ways (quadratic rules
/// overlap only in words of length 3).
CriticalPairReport critical_pairs_check(const RewriteSystem& rs, int maxlen);

enum class MapKind { hom, antihom };

/// Generator images; the extension to words multiplies images in order
/// (hom) or in reverse order (antihom).
template <class Image>
struct GenMap {
  MapKind kind = MapKind::hom;
  std::map<char, Image> images;
};

/// Linear extension of m to p. `one` is the image of the empty word;
/// `reduce` is applied after every product to keep images normal.
template <class C, class Image>
Image apply_map(const GenMap<Image>& m, const NCPoly<C>& p, const Image& one,
                const std::function<Image(const Image&)>& reduce = nullptr) {
  Image out = one;
  out -= one;
  std::map<Word, Image> cache;
  for (const auto& [w, c] : p.terms()) {
    auto it = cache.find(w);
    if (it == cache.end()) {
      Image img = one;
      for (std::size_t i = 0; i < w.size(); ++i) {
        char g = m.kind == MapKind::hom ? w[i] : w[w.size() - 1 - i];
        auto gi = m.images.find(g);
        if (gi == m.images.end())
          throw std::out_of_range("generator map has no image for symbol id " +
                                  std::to_string(static_cast<int>(g)));
        img = img * gi->second;
        if (reduce) img = reduce(img);
      }
      it = cache.emplace(w, std::move(img)).first;
    }
    out += it->second * c;
  }
  return out;
}

}  // namespace ckq
