// Verification suites behind the `ckq` command: argument parsing, task
// fan-out over a worker pool, report records and their serialization.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ckq/funq.hpp"
#include "ckq/report.hpp"

namespace ckq {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_args for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& check_names();

struct RunConfig {
  enum class Command { verify, report };
  Command command = Command::verify;
  std::vector<std::string> checks;
  std::vector<Variant> variants;
  std::vector<JAssign> js;
  int order = 8;
  /// Unset: ring for hopf-fun, bialgebra elsewhere.
  std::optional<FunMode> mode;
  int maxlen = 3;
  std::string format = "text";
  unsigned jobs = 1;
  std::string report_path = "ckq-report.json";
};

/// `args` excludes the program name. Throws UsageError on any malformed or
/// unsupported request.
RunConfig parse_args(const std::vector<std::string>& args);

struct RunRecord {
  std::string check;
  std::string family;
  std::string variant;
  std::string j;
  int order = 0;
  /// pass, fail or pass-with-note.
  std::string status;
  std::size_t nonzero = 0;
  int first_order = -1;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> failures;
  double wall_ms = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct Report {
  std::vector<RunRecord> runs;
  friend bool operator==(const Report&, const Report&) = default;
};

RunRecord make_record(const std::string& check, const std::string& family, const std::string& variant,
                      const std::string& j, int order, const CheckReport& r);

Report run_suite(const RunConfig& cfg);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string emit_text(const Report& r);
/// 0 iff every record passes (pass-with-note counts as pass).
int exit_code(const Report& r);

/// Full command: parse, run or replay, print, write the report file. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckq
