#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chiwb/session.hpp"

using namespace chiwb;
using json = nlohmann::ordered_json;

namespace {

std::string fixture(const std::string& name) {
  return std::string(CHIWB_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("the cusp session gives chi three and exit zero") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("cusp.chiwb"), opt);
  CHECK(out.exit_code == 0);
  REQUIRE(out.results.size() == 4);
  const SessionResult& chi = out.results.back();
  CHECK(chi.status == "ok");
  CHECK(chi.payload["chi"] == 3);
}

TEST_CASE("a syntax error yields one error result and exit one") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("syntax_error.chiwb"), opt);
  CHECK(out.exit_code == 1);
  REQUIRE(out.results.size() == 2);  // the ring declaration, then the failure
  CHECK(out.results[1].status == "error");
  std::string msg = out.results[1].payload["error"].get<std::string>();
  CHECK(msg.find("line 2") != std::string::npos);
}

TEST_CASE("a failed identity yields exit two") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("assert_fail.chiwb"), opt);
  CHECK(out.exit_code == 2);
  const SessionResult& last = out.results.back();
  CHECK(last.status == "assertion_failed");
  CHECK(last.payload["chi_ext"] != last.payload["degree"].get<long>() *
                                       last.payload["chi_base"].get<long>());
}

TEST_CASE("non-prime characteristics are rejected") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("ff_error.chiwb"), opt);
  CHECK(out.exit_code == 1);
  REQUIRE(out.results.size() == 1);
  std::string msg = out.results[0].payload["error"].get<std::string>();
  CHECK(msg.find("not prime") != std::string::npos);
}

TEST_CASE("a missing file is a clean input error") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("no_such_file.chiwb"), opt);
  CHECK(out.exit_code == 1);
  CHECK(out.results.size() == 1);
}

TEST_CASE("the grammar walk covers every command") {
  SessionOptions opt;
  RunOutcome out = run_session_file(fixture("workbench.chiwb"), opt);
  for (const auto& r : out.results) {
    INFO(r.command, " -> ", r.payload.dump());
    CHECK(r.status == "ok");
  }
  CHECK(out.exit_code == 0);
}

TEST_CASE("json reports are deterministic and schema-stable") {
  SessionOptions opt;
  opt.format = SessionOptions::Format::Json;
  opt.seed = 4242;
  RunOutcome a = run_session_file(fixture("workbench.chiwb"), opt);
  RunOutcome b = run_session_file(fixture("workbench.chiwb"), opt);
  CHECK(emit_json(a, opt) == emit_json(b, opt));

  json top = json::parse(emit_json(a, opt));
  CHECK(top["version"] == 1);
  REQUIRE(top.contains("results"));

  // the chi result carries the documented leading keys in order
  for (const auto& r : top["results"]) {
    if (r["command"].get<std::string>().rfind("chi ", 0) == 0) {
      std::vector<std::string> keys;
      for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
      REQUIRE(keys.size() >= 5);
      CHECK(keys[0] == "command");
      CHECK(keys[1] == "status");
      CHECK(keys[2] == "chi");
      CHECK(keys[3] == "tor_lengths");
      CHECK(keys[4] == "dims");
    }
  }
}

TEST_CASE("an empty session emits an empty result list") {
  SessionOptions opt;
  opt.format = SessionOptions::Format::Json;
  RunOutcome out = run_session_text("# nothing here\n", opt);
  CHECK(out.exit_code == 0);
  json top = json::parse(emit_json(out, opt));
  CHECK(top["results"].is_array());
  CHECK(top["results"].empty());
}

TEST_CASE("timing fields appear only when requested") {
  SessionOptions opt;
  opt.format = SessionOptions::Format::Json;
  RunOutcome out = run_session_text("ring A = QQ[x]; ideal I = x; chi I I;", opt);
  CHECK(emit_json(out, opt).find("time_ms") == std::string::npos);
  opt.timing = true;
  CHECK(emit_json(out, opt).find("time_ms") != std::string::npos);
}

TEST_CASE("command errors do not stop the session") {
  SessionOptions opt;
  RunOutcome out = run_session_text(
      "ring A = QQ[x,y];"
      "ideal I = x;"
      "chi I I;"  // support away from the origin
      "chi I I;"
      "ideal J = y;"
      "chi I J;",
      opt);
  CHECK(out.exit_code == 1);
  REQUIRE(out.results.size() == 6);
  CHECK(out.results[2].status == "error");
  CHECK(out.results[3].status == "error");
  CHECK(out.results[5].status == "ok");
  CHECK(out.results[5].payload["chi"] == 1);
}

TEST_CASE("unknown names and missing rings are reported with positions") {
  SessionOptions opt;
  RunOutcome out = run_session_text("ideal I = x;", opt);
  CHECK(out.exit_code == 1);
  CHECK(out.results[0].status == "error");

  RunOutcome out2 = run_session_text("ring A = QQ[x]; chi I J;", opt);
  CHECK(out2.exit_code == 1);
  CHECK(out2.results[1].payload["error"].get<std::string>().find("unknown ideal") !=
        std::string::npos);
}

TEST_CASE("the field override replaces declared fields") {
  SessionOptions opt;
  opt.format = SessionOptions::Format::Json;
  opt.has_field_override = true;
  opt.field_override = Field::prime_field(5);
  RunOutcome out = run_session_text("ring A = QQ[x,y]; ideal I = x + 5*y; ideal J = y;", opt);
  CHECK(out.results[0].payload["field"] == "FF(5)");
  // 5*y vanishes mod 5
  CHECK(out.results[1].payload["generators"][0] == "x");
}

TEST_CASE("the budget option bounds each command") {
  SessionOptions opt;
  opt.budget = 40;
  RunOutcome out = run_session_text(
      "ring A = FF(101)[x,y,z];"
      "ideal I = x^3*y - z^2 + x, y^4 - x*z + y, z^3 - x^2*y^2;"
      "ideal J = x, y, z;"
      "chi I J;",
      opt);
  CHECK(out.exit_code == 1);
  CHECK(out.results.back().status == "error");
  CHECK(out.results.back().payload["error"].get<std::string>().find("budget") !=
        std::string::npos);
}
