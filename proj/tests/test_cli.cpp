#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ckq/cli.hpp"

using namespace ckq;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

RunRecord record(const std::string& status) {
  RunRecord r;
  r.check = "rtt";
  r.family = "fun";
  r.variant = "v02";
  r.j = "1,1";
  r.order = 8;
  r.status = status;
  return r;
}

}  // namespace

TEST_CASE("parse examples") {
  RunConfig c = parse_args(split("verify rtt --j all --order 8"));
  CHECK(c.command == RunConfig::Command::verify);
  CHECK(c.checks == std::vector<std::string>{"rtt"});
  CHECK(c.js.size() == 4);
  CHECK(c.variants.size() == 3);
  CHECK(c.order == 8);

  RunConfig all = parse_args(split("verify all --format json"));
  CHECK(all.checks.size() == check_names().size() - 1);
  CHECK(all.format == "json");
  CHECK(all.maxlen == 3);
  CHECK_FALSE(all.mode.has_value());

  RunConfig one = parse_args(split("verify hopf-fun --variant v12 --j i1,i2 --mode bialgebra --maxlen 2 --jobs 3"));
  CHECK(one.variants == std::vector<Variant>{Variant::v12});
  CHECK(one.js.size() == 1);
  CHECK(one.js[0].name() == "i1,i2");
  CHECK(one.mode == FunMode::bialgebra);
  CHECK(one.maxlen == 2);
  CHECK(one.jobs == 3);

  CHECK(parse_args(split("report")).command == RunConfig::Command::report);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_args(split("verify iso --variant v01")), UsageError);
  CHECK_THROWS_AS(parse_args(split("verify nonsense")), UsageError);
  CHECK_THROWS_AS(parse_args(split("verify rtt --order 1")), UsageError);
  CHECK_THROWS_AS(parse_args(split("verify rtt --maxlen 0")), UsageError);
  CHECK_THROWS_AS(parse_args(split("verify rtt --j 2,1")), UsageError);
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args(split("verify --help")), HelpRequested);

  std::ostringstream out, err;
  CHECK(run_cli(split("verify iso --variant v01"), out, err) == 2);
  CHECK(err.str().find("v01") != std::string::npos);
  CHECK(run_cli(split("--help"), out, err) == 0);
}

TEST_CASE("exit codes and text table") {
  Report empty;
  CHECK(exit_code(empty) == 0);
  CHECK(emit_text(empty).find("0 runs") != std::string::npos);

  Report ok{{record("pass"), record("pass-with-note")}};
  CHECK(exit_code(ok) == 0);
  Report bad{{record("pass"), record("fail")}};
  CHECK(exit_code(bad) == 1);
}

TEST_CASE("json round trip") {
  RunRecord r = record("fail");
  r.nonzero = 3;
  r.first_order = 2;
  r.notes = {"a note"};
  r.failures = {{"RTT entry (1,2)", "(z^2)*b1"}};
  r.wall_ms = 12.5;
  Report rep{{r, record("pass")}};
  nlohmann::json j = to_json(rep);
  CHECK(j["schema_version"] == 1);
  CHECK(j["runs"].size() == 2);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == rep);
}

TEST_CASE("suite records are sorted and deterministic") {
  RunConfig c = parse_args(split("verify rtt --variant v02 --order 3 --jobs 4"));
  Report a = run_suite(c);
  c.jobs = 1;
  Report b = run_suite(c);
  REQUIRE(a.runs.size() == 4);
  for (auto* rep : {&a, &b})
    for (auto& r : rep->runs) r.wall_ms = 0;
  CHECK(a == b);
  for (const auto& r : a.runs) CHECK(r.status == "pass");
  CHECK(a.runs[0].j == "1,1");
  CHECK(a.runs[3].j == "i1,i2");
}

TEST_CASE("pairing suite record") {
  Report r = run_suite(parse_args(split("verify pairing --variant v02 --j 1,1 --order 4")));
  REQUIRE(r.runs.size() == 1);
  CHECK(r.runs[0].status != "fail");
  CHECK(r.runs[0].nonzero == 0);
  CHECK(r.runs[0].first_order == -1);
}

TEST_CASE("a corrupted rule yields a fail record naming the first nonzero entry") {
  FunAlgebra alg = build_fun(Variant::v02, JAssign::standard(), 4);
  RewriteSystem& rs = alg.rs;
  Word lhs = rs.alphabet().word("a2 a1");
  ZPoly rhs = *rs.rule(lhs) + ZSeries::monomial(1, 3, 4) * rs.word("a1 a2");
  rs.add_rule_word(lhs, rhs);

  auto res = rtt_residual(alg);
  std::string first;
  for (std::size_t p = 0; p < res.size() && first.empty(); ++p)
    for (std::size_t q = 0; q < res[p].size() && first.empty(); ++q)
      if (!res[p][q].is_zero()) first = "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")";
  REQUIRE_FALSE(first.empty());

  RunRecord rec = make_record("rtt", "fun", "v02", "1,1", 4, rtt_report(alg));
  CHECK(rec.status == "fail");
  CHECK(rec.nonzero > 0);
  CHECK(rec.first_order == 3);
  REQUIRE_FALSE(rec.failures.empty());
  CHECK(rec.failures.front().first.find(first) != std::string::npos);
  CHECK(exit_code(Report{{rec}}) == 1);
}

TEST_CASE("step budget exhaustion surfaces as a fail record") {
  setenv("CKQ_STEP_BUDGET", "3", 1);
  Report r = run_suite(parse_args(split("verify det --variant v02 --j 1,1 --order 3")));
  unsetenv("CKQ_STEP_BUDGET");
  REQUIRE(r.runs.size() == 1);
  CHECK(r.runs[0].status == "fail");
  REQUIRE_FALSE(r.runs[0].notes.empty());
  CHECK(r.runs[0].notes[0].find("CKQ_STEP_BUDGET") != std::string::npos);
}
