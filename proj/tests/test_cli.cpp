#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef QZETA_BIN
#error "QZETA_BIN must point at the command-line binary"
#endif

namespace {

using Json = nlohmann::ordered_json;

struct RunOut {
  int code = -1;
  std::string out;
};

std::string scratch_path(const std::string& stem) {
  static int counter = 0;
  return "/tmp/qzeta_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + "_" +
         stem;
}

RunOut run_cli(const std::string& args) {
  std::string outfile = scratch_path("out");
  std::string cmd = std::string(QZETA_BIN) + " " + args + " > " + outfile + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunOut r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(outfile.c_str());
  return r;
}

Json parse(const RunOut& r) { return Json::parse(r.out); }

Json strip_timings(Json j) {
  if (j.contains("checks"))
    for (Json& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("lfactor subcommand reports exact matches", "[cli]") {
  RunOut r = run_cli("lfactor --type C --rank 2 --rep std --degree 4");
  REQUIRE(r.code == 0);
  Json j = parse(r);
  REQUIRE(j.at("schema") == "1");
  REQUIRE(j.at("match") == true);
  REQUIRE(j.at("series").size() == 5);

  RunOut t = run_cli("lfactor --type A --rank 1 --rep trivial --degree 3");
  REQUIRE(t.code == 0);
  Json tj = parse(t);
  REQUIRE(tj.at("match") == true);
  for (const Json& c : tj.at("series")) REQUIRE(c == "(1)");
}

TEST_CASE("malformed input exits with the usage code", "[cli]") {
  REQUIRE(run_cli("lfactor --type Z --rank 2").code == 2);
  REQUIRE(run_cli("lfactor --type A --rank 0").code == 2);
  REQUIRE(run_cli("doubling --kind sp --n 3").code == 2);
  REQUIRE(run_cli("verify --suite nonsense").code == 2);
  REQUIRE(run_cli("monoid --type C --rank 2 --lambda 1").code == 2);
  REQUIRE(run_cli("--no-such-flag").code == 2);
  REQUIRE(run_cli("doubling --kind oo --n 3 --format yaml").code == 2);
}

TEST_CASE("verify ledger passes and the fault hook trips", "[cli]") {
  RunOut ok = run_cli("verify --suite bk --n-max 4 --degree 6");
  REQUIRE(ok.code == 0);
  Json j = parse(ok);
  REQUIRE(j.at("all_pass") == true);
  for (const Json& c : j.at("checks")) REQUIRE(c.at("pass") == true);

  RunOut bad = run_cli("verify --suite doubling --n-max 4 --fault-id normalizer_chain");
  REQUIRE(bad.code == 1);
  Json b = parse(bad);
  REQUIRE(b.at("all_pass") == false);
  bool saw = false;
  for (const Json& c : b.at("checks"))
    if (c.at("id") == "normalizer_chain") {
      saw = true;
      REQUIRE(c.at("pass") == false);
    } else {
      REQUIRE(c.at("pass") == true);
    }
  REQUIRE(saw);
}

TEST_CASE("verify output is reproducible apart from timings", "[cli]") {
  RunOut a = run_cli("verify --suite reps --n-max 3 --degree 6");
  RunOut b = run_cli("verify --suite reps --n-max 3 --degree 6");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(strip_timings(parse(a)) == strip_timings(parse(b)));
}

TEST_CASE("monoid subcommand prints the dual unit group", "[cli]") {
  Json even = parse(run_cli("monoid --sym-power 2"));
  REQUIRE(even.at("dual_unit_group").at("label") == "GL1 x SL2");
  Json odd = parse(run_cli("monoid --sym-power 3"));
  REQUIRE(odd.at("dual_unit_group").at("label") == "GL2");
  Json gen = parse(run_cli("monoid --type C --rank 2 --lambda 1,0"));
  REQUIRE(gen.at("dual_unit_group").at("label") == "(GL1 x Sp4)/(Z/2)");
}

TEST_CASE("bk ledger covers exactly the requested checks", "[cli]") {
  RunOut r = run_cli("bk --case o --n 4 --check hwv,dp,mellin --degree 6");
  REQUIRE(r.code == 0);
  Json j = parse(r);
  REQUIRE(j.at("all_pass") == true);
  REQUIRE(j.at("ledger").size() == 3);
  REQUIRE(j.at("ledger").contains("hwv"));
  REQUIRE(j.at("ledger").contains("dp"));
  REQUIRE(j.at("ledger").contains("mellin"));
  REQUIRE(j.at("ledger").at("hwv").at("raising").size() == 2);

  REQUIRE(run_cli("bk --case sp --n 4 --check nosuch").code == 2);
}

TEST_CASE("config file sets defaults and flags override it", "[cli]") {
  std::string cfg = scratch_path("cfg.json");
  {
    std::ofstream out(cfg);
    out << "{\"n_max\": 4, \"degree\": 6, \"format\": \"pretty\"}\n";
  }
  Json dumped = parse(run_cli("verify --config " + cfg + " --dump-config"));
  REQUIRE(dumped.at("n_max") == 4);
  REQUIRE(dumped.at("degree") == 6);
  REQUIRE(dumped.at("format") == "pretty");

  Json overridden = parse(run_cli("verify --config " + cfg + " --degree 12 --dump-config"));
  REQUIRE(overridden.at("degree") == 12);
  REQUIRE(overridden.at("n_max") == 4);

  // the dump itself is a valid config: feeding it back reproduces it byte for byte
  RunOut first = run_cli("verify --config " + cfg + " --dump-config");
  std::string replay = scratch_path("replay.json");
  {
    std::ofstream out(replay);
    out << first.out;
  }
  RunOut second = run_cli("verify --config " + replay + " --dump-config");
  REQUIRE(first.out == second.out);
  REQUIRE(run_cli("verify --config /no/such/file --dump-config").code == 2);
  std::remove(cfg.c_str());
  std::remove(replay.c_str());
}

TEST_CASE("output formats render the same verdicts", "[cli]") {
  RunOut csv = run_cli("doubling --kind oo --n 3 --format csv");
  REQUIRE(csv.code == 0);
  REQUIRE(csv.out.find("normalizer_chain,true") != std::string::npos);
  RunOut pretty = run_cli("doubling --kind oo --n 3 --format pretty");
  REQUIRE(pretty.code == 0);
  REQUIRE(pretty.out.find("normalizer_chain: true") != std::string::npos);
}

TEST_CASE("gamma subcommand checks its functional equation", "[cli]") {
  Json g = parse(run_cli("gamma --a 2 --b2 2"));
  REQUIRE(g.at("functional_equation") == true);
  Json s = parse(run_cli("gamma --shell --b2 2"));
  REQUIRE(s.at("match") == true);
  REQUIRE(run_cli("gamma --a 0 --b2 0").code == 2);
}
