#include "ckq/report.hpp"

namespace ckq {

namespace {

constexpr std::size_t kDetailLimit = 400;

std::string clip(std::string s) {
  if (s.size() > kDetailLimit) s = s.substr(0, kDetailLimit) + " ...";
  return s;
}

int merge_order(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

}  // namespace

bool CheckReport::ok() const {
  for (const auto& i : items)
    if (!i.ok) return false;
  return true;
}

std::size_t CheckReport::nonzero() const {
  std::size_t n = 0;
  for (const auto& i : items) n += i.nonzero;
  return n;
}

int CheckReport::first_order() const {
  int o = -1;
  for (const auto& i : items) o = merge_order(o, i.first_order);
  return o;
}

void CheckReport::pass(const std::string& name, const std::string& detail) {
  items.push_back({name, true, 0, -1, detail});
}

void CheckReport::fail(const std::string& name, const std::string& detail) {
  items.push_back({name, false, 1, -1, clip(detail)});
}

void CheckReport::expect(const std::string& name, bool ok, const std::string& detail) {
  items.push_back({name, ok, ok ? 0u : 1u, -1, clip(detail)});
}

void CheckReport::zero(const std::string& name, const ZPoly& r, const Alphabet& a) {
  CheckItem it{name, r.is_zero(), r.size(), -1, ""};
  for (const auto& [w, c] : r.terms()) it.first_order = merge_order(it.first_order, c.valuation());
  if (!it.ok) it.detail = clip(r.to_string(a));
  items.push_back(std::move(it));
}

void CheckReport::zero(const std::string& name, const ZTensor& r, const Alphabet& a) {
  CheckItem it{name, r.is_zero(), r.size(), -1, ""};
  for (const auto& [k, c] : r.terms()) it.first_order = merge_order(it.first_order, c.valuation());
  if (!it.ok) it.detail = clip(r.to_string(a));
  items.push_back(std::move(it));
}

void CheckReport::zero(const std::string& name, const ZSeries& r) {
  CheckItem it{name, r.is_zero(), r.is_zero() ? 0u : 1u, r.valuation(), ""};
  if (!it.ok) it.detail = clip(r.to_string());
  items.push_back(std::move(it));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto i : other.items) {
    i.name = prefix + i.name;
    items.push_back(std::move(i));
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

std::string CheckReport::summary() const {
  std::string out;
  for (const auto& i : items) {
    out += (i.ok ? "  ok   " : "  FAIL ") + i.name;
    if (!i.detail.empty()) out += ": " + i.detail;
    out += "\n";
  }
  for (const auto& n : notes) out += "  note " + n + "\n";
  return out;
}

ZPoly truncate(const ZPoly& p, int order) {
  return p.map_coeffs([&](const ZSeries& c) { return c.with_order(order); });
}

}  // namespace ckq
