#include "ckq/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ckq/isomap.hpp"
#include "ckq/pairing.hpp"

namespace ckq {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "rtt",     "ybe",   "relations-from-rtt", "det",         "hopf-fun",      "hopf-su",    "hopf-so",
      "pairing", "ideal", "iso",                "contraction", "special-cases", "confluence", "all"};
  return names;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification of Cayley-Klein quantum groups and algebras", "ckq"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string check, variant = "all", j = "all", mode;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("check", check, "Check to run")->required()->check(CLI::IsMember(check_names()));
  verify->add_option("--variant", variant, "v02, v12, v01 or all")
      ->check(CLI::IsMember({"v02", "v12", "v01", "all"}));
  verify->add_option("--j", j, "1,1, i1,1, 1,i2, i1,i2 or all")
      ->check(CLI::IsMember({"1,1", "i1,1", "1,i2", "i1,i2", "all"}));
  verify->add_option("--order", cfg.order, "Truncation order N")->check(CLI::Range(2, 64));
  verify->add_option("--mode", mode, "bialgebra or ring")->check(CLI::IsMember({"bialgebra", "ring"}));
  verify->add_option("--maxlen", cfg.maxlen, "Word length for word-indexed checks")->check(CLI::Range(1, 8));
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  auto* report = app.add_subcommand("report", "Replay the last report file");
  report->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (report->parsed()) {
    cfg.command = RunConfig::Command::report;
    return cfg;
  }
  if (!verify->parsed()) throw UsageError("expected a subcommand");
  if (check == "iso" && variant == "v01")
    throw UsageError("no isomorphism is defined for the v01 coupling");
  if (check == "all") {
    cfg.checks.assign(check_names().begin(), check_names().end() - 1);
  } else {
    cfg.checks = {check};
  }
  cfg.variants = variant == "all" ? all_variants() : std::vector<Variant>{parse_variant(variant)};
  cfg.js = j == "all" ? JAssign::all() : std::vector<JAssign>{JAssign::parse(j)};
  if (!mode.empty()) cfg.mode = mode == "ring" ? FunMode::ring : FunMode::bialgebra;
  if (cfg.jobs == 1 && verify->count("--jobs") == 0)
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

RunRecord make_record(const std::string& check, const std::string& family, const std::string& variant,
                      const std::string& j, int order, const CheckReport& r) {
  RunRecord rec;
  rec.check = check;
  rec.family = family;
  rec.variant = variant;
  rec.j = j;
  rec.order = order;
  rec.nonzero = r.nonzero();
  rec.first_order = r.first_order();
  rec.notes = r.notes;
  for (const auto& i : r.items)
    if (!i.ok) rec.failures.emplace_back(i.name, i.detail);
  rec.status = !r.ok() ? "fail" : r.notes.empty() ? "pass" : "pass-with-note";
  return rec;
}

namespace {

struct Task {
  std::string check, family, variant, j;
  int order;
  std::function<CheckReport()> run;
};

std::string mode_name(FunMode m) { return m == FunMode::ring ? "fun-ring" : "fun"; }

std::vector<Task> plan(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const int n = cfg.order, maxlen = cfg.maxlen;
  const FunMode base = cfg.mode.value_or(FunMode::bialgebra);
  for (const auto& check : cfg.checks) {
    if (check == "special-cases") {
      tasks.push_back({check, "so", "-", "-", n, [n] { return special_case_report(n); }});
      continue;
    }
    for (Variant v : cfg.variants)
      for (const JAssign& j : cfg.js) {
        const std::string vs = to_string(v), js = j.name();
        auto add = [&](const std::string& family, const std::string& label, std::function<CheckReport()> f) {
          tasks.push_back({check, family, label, js, n, std::move(f)});
        };
        if (check == "rtt") {
          add(mode_name(base), vs, [=] { return rtt_report(build_fun(v, j, n, base)); });
        } else if (check == "ybe") {
          add("fun", vs, [=] { return ybe_report(v, j, n); });
        } else if (check == "relations-from-rtt") {
          add("fun", vs, [=] {
            CheckReport r = relations_report(v, j, n);
            if (v == Variant::v02 && j.j1 == JAssign::Value::dual && j.j2 == JAssign::Value::dual)
              r.merge(contracted_relations_report(n), "contracted: ");
            return r;
          });
        } else if (check == "det") {
          add("fun", vs, [=] { return det_report(v, j, n); });
        } else if (check == "hopf-fun") {
          FunMode m = cfg.mode.value_or(FunMode::ring);
          add(mode_name(m), vs, [=] { return hopf_axiom_report_fun(build_fun(v, j, n, m)); });
        } else if (check == "hopf-su") {
          add("su", vs, [=] { return hopf_axiom_report_su(build_su(v, j, n)); });
        } else if (check == "hopf-so") {
          add("so", primitive_name(v), [=] { return hopf_axiom_report_so(build_so(v, j, n)); });
        } else if (check == "pairing") {
          add("pairing", vs, [=] {
            CheckReport r = verify_LT_pairing(v, j, n);
            r.merge(verify_pairing_consistency(v, j, std::min(maxlen, 2), n));
            return r;
          });
        } else if (check == "ideal") {
          add("pairing", vs, [=] {
            CheckReport r = verify_ideal_annihilation(v, j, maxlen, n);
            r.merge(verify_relation_functionals(v, j, maxlen, n));
            return r;
          });
        } else if (check == "iso") {
          if (v == Variant::v01) continue;
          add("iso", vs, [=] { return iso_report(v, j, n); });
        } else if (check == "contraction") {
          add("fun", vs, [=] { return verify_contraction_fun(v, j, n); });
          add("su", vs, [=] { return verify_contraction_alg(v, j, n, false); });
          add("so", primitive_name(v), [=] { return verify_contraction_alg(v, j, n, true); });
        } else if (check == "confluence") {
          auto cp = [](const RewriteSystem& rs) {
            CheckReport r;
            CriticalPairReport c = critical_pairs_check(rs, 3);
            const auto& a = rs.alphabet();
            for (const auto& f : c.failures) r.zero("overlap " + a.format(f.overlap) + " resolves", f.difference, a);
            r.pass(std::to_string(c.checked) + " overlaps of length 3 checked");
            return r;
          };
          add("fun", vs, [=] { return cp(build_fun(v, j, n, FunMode::bialgebra).rs); });
          add("fun-ring", vs, [=] { return cp(build_fun(v, j, n, FunMode::ring).rs); });
          add("su", vs, [=] { return cp(build_su(v, j, n).rs); });
          add("so", primitive_name(v), [=] { return cp(build_so(v, j, n).rs); });
        }
      }
  }
  return tasks;
}

RunRecord execute(const Task& t) {
  auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  try {
    rec = make_record(t.check, t.family, t.variant, t.j, t.order, t.run());
  } catch (const StepBudgetExceeded& e) {
    CheckReport r;
    r.fail("reduction", e.what());
    r.note("step budget exhausted; raise CKQ_STEP_BUDGET");
    rec = make_record(t.check, t.family, t.variant, t.j, t.order, r);
  } catch (const std::exception& e) {
    CheckReport r;
    r.fail("internal error", e.what());
    rec = make_record(t.check, t.family, t.variant, t.j, t.order, r);
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

Report run_suite(const RunConfig& cfg) {
  std::vector<Task> tasks = plan(cfg);
  std::vector<RunRecord> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = execute(tasks[i]);
  };
  unsigned nthreads = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nthreads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::stable_sort(out.begin(), out.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.check, a.family, a.variant, a.j) < std::tie(b.check, b.family, b.variant, b.j);
  });
  return Report{std::move(out)};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& rec : r.runs) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [name, detail] : rec.failures) failures.push_back({{"name", name}, {"detail", detail}});
    runs.push_back({{"check", rec.check},
                    {"family", rec.family},
                    {"variant", rec.variant},
                    {"j", rec.j},
                    {"N", rec.order},
                    {"status", rec.status},
                    {"residual", {{"nonzero", rec.nonzero}, {"first_order", rec.first_order}}},
                    {"notes", rec.notes},
                    {"failures", failures},
                    {"wall_ms", rec.wall_ms}});
  }
  return {{"schema_version", 1}, {"runs", runs}};
}

Report report_from_json(const nlohmann::json& j) {
  if (j.value("schema_version", 0) != 1) throw std::runtime_error("unsupported report schema");
  Report r;
  for (const auto& x : j.at("runs")) {
    RunRecord rec;
    rec.check = x.at("check");
    rec.family = x.at("family");
    rec.variant = x.at("variant");
    rec.j = x.at("j");
    rec.order = x.at("N");
    rec.status = x.at("status");
    rec.nonzero = x.at("residual").at("nonzero");
    rec.first_order = x.at("residual").at("first_order");
    rec.notes = x.at("notes").get<std::vector<std::string>>();
    for (const auto& f : x.at("failures")) rec.failures.emplace_back(f.at("name"), f.at("detail"));
    rec.wall_ms = x.at("wall_ms");
    r.runs.push_back(std::move(rec));
  }
  return r;
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "check" << std::setw(10) << "family" << std::setw(8) << "variant"
     << std::setw(7) << "j" << std::setw(4) << "N" << std::setw(16) << "status" << std::setw(9) << "nonzero"
     << std::setw(7) << "first" << "ms\n";
  for (const auto& rec : r.runs) {
    os << std::setw(20) << rec.check << std::setw(10) << rec.family << std::setw(8) << rec.variant << std::setw(7)
       << rec.j << std::setw(4) << rec.order << std::setw(16) << rec.status << std::setw(9) << rec.nonzero
       << std::setw(7) << (rec.first_order < 0 ? "-" : std::to_string(rec.first_order)) << std::fixed
       << std::setprecision(1) << rec.wall_ms << "\n";
    for (const auto& [name, detail] : rec.failures)
      os << "    FAIL " << name << (detail.empty() ? "" : ": " + detail) << "\n";
    for (const auto& n : rec.notes) os << "    note " << n << "\n";
  }
  std::size_t failed = std::count_if(r.runs.begin(), r.runs.end(), [](const RunRecord& x) { return x.status == "fail"; });
  os << r.runs.size() << " runs, " << failed << " failed\n";
  return os.str();
}

int exit_code(const Report& r) {
  for (const auto& rec : r.runs)
    if (rec.status == "fail") return 1;
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  Report rep;
  if (cfg.command == RunConfig::Command::report) {
    std::ifstream in(cfg.report_path);
    if (!in) {
      err << "usage error: no report file " << cfg.report_path << "\n";
      return 2;
    }
    try {
      rep = report_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      err << "cannot read " << cfg.report_path << ": " << e.what() << "\n";
      return 2;
    }
  } else {
    rep = run_suite(cfg);
    std::ofstream f(cfg.report_path);
    f << to_json(rep).dump(2) << "\n";
  }
  if (cfg.format == "json")
    out << to_json(rep).dump(2) << "\n";
  else
    out << emit_text(rep);
  return exit_code(rep);
}

}  // namespace ckq
