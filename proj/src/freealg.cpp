#include "ckq/freealg.hpp"

#include <cstdlib>
#include <set>

namespace ckq {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size())
    throw std::invalid_argument("alphabet weights do not match symbols");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("duplicate alphabet symbol");
}

char Alphabet::id(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<char>(i);
  throw std::invalid_argument("unknown symbol '" + name + "'");
}

int Alphabet::weight(const Word& w) const {
  int s = 0;
  for (char c : w) s += weight(c);
  return s;
}

Word Alphabet::word(const std::string& spaced) const {
  Word w;
  std::size_t pos = 0;
  while (pos < spaced.size()) {
    std::size_t end = spaced.find(' ', pos);
    if (end == std::string::npos) end = spaced.size();
    std::string tok = spaced.substr(pos, end - pos);
    if (!tok.empty() && tok != "1") w.push_back(id(tok));
    pos = end + 1;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += name(w[i]);
  }
  return out;
}

bool Alphabet::less(const Word& a, const Word& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ZPoly evaluate(const JPolyNC& p, const JAssign& j) {
  return p.map_coeffs([&](const JSeries& c) { return c.evaluate(j); });
}

ZTensor evaluate(const JTensor& t, const JAssign& j) {
  return t.map_coeffs([&](const JSeries& c) { return c.evaluate(j); });
}

JMono clear_content(JPolyNC& p) {
  std::optional<JMono> content;
  for (const auto& [w, c] : p.terms()) {
    auto m = c.content();
    if (!m) continue;
    if (!content) {
      content = m;
    } else {
      content->e1 = std::min(content->e1, m->e1);
      content->e2 = std::min(content->e2, m->e2);
    }
  }
  if (!content) return {};
  JPolyNC out;
  for (const auto& [w, c] : p.terms()) out.add(w, c * content->inverse());
  p = std::move(out);
  return *content;
}

StepBudgetExceeded::StepBudgetExceeded(std::size_t budget)
    : std::runtime_error("normal form exceeded the reduction step budget of " +
                         std::to_string(budget)) {}

std::size_t default_step_budget() {
  if (const char* env = std::getenv("CKQ_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, int order, std::size_t budget)
    : alphabet_(std::move(alphabet)), order_(order), budget_(budget) {}

void RewriteSystem::add_rule_word(const Word& lhs, ZPoly rhs) {
  if (lhs.size() != 2) throw std::invalid_argument("rewrite rules need a two-letter left side");
  for (const auto& [w, c] : rhs.terms()) {
    if (c.order() != order_) throw OrderMismatch(order_, c.order());
    if (!alphabet_.less(w, lhs))
      throw std::invalid_argument("rule " + alphabet_.format(lhs) + " -> ... has rhs word " +
                                  alphabet_.format(w) + " that is not smaller");
  }
  rules_[lhs] = std::move(rhs);
}

const ZPoly* RewriteSystem::rule(const Word& lhs) const {
  auto it = rules_.find(lhs);
  return it == rules_.end() ? nullptr : &it->second;
}

int RewriteSystem::reducible_at(const Word& w) const {
  if (rules_.empty()) return -1;
  Word pair(2, '\0');
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    pair[0] = w[i];
    pair[1] = w[i + 1];
    if (rules_.count(pair)) return static_cast<int>(i);
  }
  return -1;
}

bool RewriteSystem::is_normal(const Word& w) const { return reducible_at(w) < 0; }

ZPoly RewriteSystem::normal_form(const ZPoly& p) const {
  std::map<Word, ZSeries, WordOrder> work(WordOrder{&alphabet_});
  for (const auto& [w, c] : p.terms()) work.emplace(w, c);
  ZPoly out;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto last = std::prev(work.end());
    Word w = last->first;
    ZSeries c = std::move(last->second);
    work.erase(last);
    if (c.is_zero()) continue;
    int pos = reducible_at(w);
    if (pos < 0) {
      out.add(w, c);
      continue;
    }
    if (++steps > budget_) throw StepBudgetExceeded(budget_);
    const ZPoly& rhs = rules_.at(w.substr(static_cast<std::size_t>(pos), 2));
    Word prefix = w.substr(0, static_cast<std::size_t>(pos));
    Word suffix = w.substr(static_cast<std::size_t>(pos) + 2);
    for (const auto& [v, cv] : rhs.terms()) {
      ZSeries nc = c * cv;
      if (nc.is_zero()) continue;
      Word nw = prefix + v + suffix;
      auto [it, inserted] = work.try_emplace(std::move(nw), nc);
      if (!inserted) it->second += nc;
    }
  }
  return out;
}

ZTensor RewriteSystem::normal_form(const ZTensor& t) const {
  std::unordered_map<Word, ZPoly> cache;
  auto nf_word = [&](const Word& w) -> const ZPoly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, normal_form(ZPoly::term(w, scalar(1)))).first;
    return it->second;
  };
  ZTensor out(t.arity());
  for (const auto& [key, c] : t.terms()) {
    bool normal = true;
    for (const auto& w : key) normal = normal && is_normal(w);
    if (normal) {
      out.add(key, c);
      continue;
    }
    std::vector<ZPoly> factors;
    factors.reserve(key.size());
    for (const auto& w : key) factors.push_back(nf_word(w));
    factors[0] *= c;
    out += ZTensor::pure(factors);
  }
  return out;
}

ZPoly nc_commutator(const ZPoly& x, const ZPoly& y, const RewriteSystem& rs) {
  return rs.normal_form(x * y - y * x);
}

CriticalPairReport critical_pairs_check(const RewriteSystem& rs, int maxlen) {
  if (maxlen < 3) throw std::invalid_argument("critical pair check needs maxlen >= 3");
  CriticalPairReport rep;
  for (const auto& [l1, r1] : rs.rules())
    for (const auto& [l2, r2] : rs.rules()) {
      if (l1[1] != l2[0]) continue;
      Word overlap = l1 + l2.substr(1);
      ZPoly left = r1 * ZPoly::term(l2.substr(1), rs.scalar(1));
      ZPoly right = ZPoly::term(l1.substr(0, 1), rs.scalar(1)) * r2;
      ZPoly diff = rs.normal_form(left - right);
      ++rep.checked;
      if (!diff.is_zero()) rep.failures.push_back({overlap, std::move(diff)});
    }
  return rep;
}

}  // namespace ckq
