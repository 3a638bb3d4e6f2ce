// Uniform pass/fail records shared by all verification operations.
#pragma once

#include <string>
#include <vector>

#include "ckq/freealg.hpp"

namespace ckq {

struct CheckItem {
  std::string name;
  bool ok = true;
  /// Number of nonzero residual entries (terms) found.
  std::size_t nonzero = 0;
  /// Lowest z-order carrying a nonzero residual coefficient, -1 if none.
  int first_order = -1;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  bool ok() const;
  std::size_t nonzero() const;
  int first_order() const;

  void pass(const std::string& name, const std::string& detail = "");
  void fail(const std::string& name, const std::string& detail);
  void expect(const std::string& name, bool ok, const std::string& detail = "");
  /// Residual must vanish; records its size and a readable form on failure.
  void zero(const std::string& name, const ZPoly& residual, const Alphabet& a);
  void zero(const std::string& name, const ZTensor& residual, const Alphabet& a);
  void zero(const std::string& name, const ZSeries& residual);
  void note(const std::string& text) { notes.push_back(text); }
  void merge(const CheckReport& other, const std::string& prefix = "");
  std::string summary() const;
};

/// Coefficients truncated to a lower order.
ZPoly truncate(const ZPoly& p, int order);

}  // namespace ckq
