#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "hessgkm/error.hpp"
#include "hessgkm/report.hpp"

using namespace hessgkm;

namespace {

HessenbergFunction H(const char* s) { return HessenbergFunction::parse(s); }

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(HESS_GKM_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze report") {
  const auto j = analyze_report(H("3,3,4,5,5"), {2});
  CHECK(j["schema"] == kSchema);
  CHECK(j["n"] == 5);
  CHECK(j["bottom_set"] == std::vector<int>{2});
  CHECK(j["l_set"] == std::vector<int>{3, 4});
  CHECK(j["lambda_sets"]["2"] == std::vector<int>{1});
  CHECK(j["poincare"]["agree"] == true);
  CHECK(j["b2"]["closed_form"] == 17);
  CHECK(j["b2"]["bruteforce"] == 17);
  CHECK(j["b2"]["graph_cohomology"] == 17);
  CHECK(j["components"] == 1);

  const auto d = analyze_report(H("1,2,3"), {});
  CHECK(d["components"] == 6);
  CHECK(d["b2"]["status"] == "not-applicable");
  CHECK(analyze_report(H("3,3,4,5,5"), {2}).dump() == j.dump());
}

TEST_CASE("h2 reports") {
  const auto j = h2_report(H("2,3,3"));
  CHECK(j["presentation"]["rank"] == 4);
  CHECK(j["formula"]["decomposition"] == "M(3) + M(2,1)");
  CHECK(j["realization"]["status"] == "passed");
  CHECK(j["character"]["status"] == "passed");

  const auto big = h2_report(H("2,3,6,6,6,7,8,8"));
  CHECK(big["formula"]["decomposition"] == "3*M(8) + 2*M(7,1) + 2*M(6,2)");
  CHECK(big["formula"]["dimension"] == 75);
  CHECK(big["formula"]["dimension_matches_b2"] == true);
  CHECK(big["character"]["status"] == "skipped");
  CHECK_THROWS_AS(h2_report(H("1,3,3")), Error);

  const auto d = h2d_report(H("3,4,5,5,5"), 2);
  CHECK(d["presentation"]["rank"] == 17);
  CHECK(d["formula"]["decomposition"] == "7*M(5) + 2*M(4,1)");
}

TEST_CASE("verify sweep") {
  VerifyOptions opt;
  opt.n = 2;
  const auto s = run_verify(opt);
  CHECK(s.functions == 2);
  CHECK(s.count(CheckStatus::Failed) == 0);
  CHECK(s.exit_code() == 0);
  CHECK(s.to_json()["ok"] == true);

  opt.n = 4;
  opt.ds = {2};
  const auto serial = run_verify(opt);
  opt.run.jobs = 3;
  const auto parallel = run_verify(opt);
  CHECK(serial.functions == 1 + 2 + 5 + 14 - 1);
  CHECK(serial.count(CheckStatus::Failed) == 0);
  CHECK(serial.to_json().dump() == parallel.to_json().dump());
}

TEST_CASE("verify reports budget skips honestly") {
  VerifyOptions opt;
  opt.n = 4;
  opt.ds = {2};
  opt.run.budget = LinearAlgebraBudget{10};
  const auto s = run_verify(opt);
  CHECK(s.count(CheckStatus::Failed) == 0);
  CHECK(s.count(CheckStatus::Skipped) > 0);
  CHECK(s.exit_code() == 0);
}

TEST_CASE("decompose report") {
  const auto j = decompose_report(ClassFunction::constant(4, 1));
  CHECK(j["decomposition"] == "M(4)");
}

TEST_CASE("command line exit codes and output") {
  const auto a = run_cli("analyze 3,3,4,5,5");
  CHECK(a.status == 0);
  const auto j = Json::parse(a.out);
  CHECK(j["schema"] == "hess-gkm/1");
  CHECK(j["b2"]["closed_form"] == 17);

  CHECK(run_cli("analyze 2,1,3").status == 2);
  CHECK(run_cli("analyze 3,x,3").status == 2);
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("h2 1,3,3").status == 1);
  CHECK(run_cli("verify --n 2").status == 0);

  const auto dot1 = run_cli("graph 2,3,3 --format dot");
  const auto dot2 = run_cli("graph 2,3,3 --format dot");
  CHECK(dot1.status == 0);
  CHECK(dot1.out == dot2.out);
  CHECK(dot1.out.find("graph") != std::string::npos);
  const auto g = Json::parse(run_cli("graph 3,3,3 --format json").out);
  CHECK(g["edges"].size() == 9);

  const auto h2 = run_cli("h2 2,3,6,6,6,7,8,8");
  CHECK(h2.status == 0);
  CHECK(Json::parse(h2.out)["formula"]["decomposition"] == "3*M(8) + 2*M(7,1) + 2*M(6,2)");

  const auto dec = run_cli("decompose --n 3 --values 1,1,1");
  CHECK(dec.status == 0);
  CHECK(Json::parse(dec.out)["decomposition"] == "M(3)");
  CHECK(run_cli("decompose --n 3 --values 0,0,1").status == 1);
}
