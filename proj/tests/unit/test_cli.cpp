#include "eqk/cli.hpp"
#include "fixtures.hpp"

using namespace eqk;

namespace {

const char* kPgl6 = R"({"type": "A5", "theta_matrix": [[1,-1,0,0,0],[0,-1,0,0,0],[0,-1,1,-1,0],[0,0,0,-1,0],[0,0,0,-1,1]]})";

RunResult job(const char* spec, const std::string& verb, Json args = Json::object()) {
  Json s = Json::parse(spec);
  s["args"] = std::move(args);
  return run(JobSpec{s, verb, std::nullopt, 2});
}

}  // namespace

TEST_CASE("describe") {
  auto r = job(kPgl6, "describe");
  REQUIRE(r.exit_code == 0);
  const auto& j = r.report;
  CHECK(j.dump().find("720") != std::string::npos);
  CHECK(j.dump().find("48") != std::string::npos);
  CHECK(j.dump() == job(kPgl6, "describe").report.dump());
}

TEST_CASE("splitting and congruence verbs") {
  const char* sl4 = R"({"type": "A3", "theta_matrix": [[1,-1,0],[0,-1,0],[0,-1,1]]})";
  auto s = job(sl4, "splitting-check");
  REQUIRE(s.exit_code == 0);
  CHECK(s.report.dump().find("\"WL_invariant_splitting_exists\":false") != std::string::npos);

  CHECK(job(kPgl6, "check-kg").exit_code == 0);
  auto bad = job(kPgl6, "check-kg", Json{{"element", {{"terms", {{{"exp", {0, 1, 0, 0, 0}}, {"coef", 1}}}}}}});
  CHECK(bad.exit_code == 1);
  CHECK(job(kPgl6, "check-kt", Json{{"ray", 1}}).exit_code == 0);
  CHECK(job(kPgl6, "curves", Json{{"scope", "Y"}}).exit_code == 0);
}

TEST_CASE("errors are reported with exit code 2") {
  auto v = job(kPgl6, "no-such-verb");
  CHECK(v.exit_code == 2);
  CHECK(v.report.contains("error"));
  auto n = job(R"({"type": "A2", "theta_matrix": [[1,1],[0,1]]})", "describe");
  CHECK(n.exit_code == 2);
  CHECK(n.report["error"]["code"] == "NotInvolution");
  CHECK(job(kPgl6, "check-kt", Json{{"scope", "Z"}}).exit_code == 2);
  CHECK(job(kPgl6, "filtration", Json{{"element", 1}, {"cone", "<7>"}}).exit_code == 2);
}

TEST_CASE("decompose, multiply and filtration") {
  Json x1{{"symmetrize", {{"terms", {{{"exp", {1, 0, 0, 0, 0, 0, 0, 0, 0}}, {"coef", 1}}}}}}};
  auto d = job(kPgl6, "decompose", Json{{"element", x1}});
  REQUIRE(d.exit_code == 0);
  CHECK(d.report["reassembles"] == true);
  auto m = job(kPgl6, "multiply", Json{{"left", x1}, {"right", x1}});
  REQUIRE(m.exit_code == 0);
  CHECK(m.report["agrees_with_direct_product"] == true);
  auto f = job(kPgl6, "filtration", Json{{"element", x1}, {"cone", "<1>"}});
  REQUIRE(f.exit_code == 0);
  CHECK(f.report["cone"] == "<1>");
}

TEST_CASE("verify on a small group") {
  auto r = job(R"({"type": "A1", "group_case": true})", "verify", Json{{"samples", 10}, {"congruence_triples", 100}});
  CHECK(r.exit_code == 0);
  CHECK(r.report["passed"] == true);
  CHECK(r.report["criteria"].size() == 8);
}
