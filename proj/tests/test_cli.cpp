#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "onelie/json_io.hpp"
#include "onelie/strategies.hpp"

using nlohmann::json;
using namespace onelie;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// stdout only; stderr is the CLI's diagnostic channel and not asserted on
CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(ONELIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CmdResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_family(const std::string& path, const MultiFamily& f) {
  std::ofstream out(path);
  out << family_to_json(f).dump(2) << "\n";
}

std::string path_f2() {
  static bool done = [] {
    write_family("cli_f2.json", optimal_one_lie_family(2));
    return true;
  }();
  (void)done;
  return "cli_f2.json";
}

}  // namespace

TEST_CASE("plan emits families deterministically") {
  CmdResult r = run_cli("plan --mode one-lie --n 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 3);
  REQUIRE(j["queries"].size() == 4);
  CHECK(j["queries"][0]["elements"] == json({1, 2, 3}));
  CHECK(j["queries"][0]["multiplicity"] == 1);
  CHECK(j["queries"][1]["elements"] == json({1}));
  CHECK(j["queries"][1]["multiplicity"] == 2);
  CHECK(run_cli("plan --mode one-lie --n 3").out == r.out);

  json singles = json::parse(run_cli("plan --mode no-lie --n 4").out);
  REQUIRE(singles["queries"].size() == 4);
  CHECK(singles["queries"][3]["elements"] == json({4}));
  CHECK(singles["queries"][3]["multiplicity"] == 1);

  json bitmask = json::parse(run_cli("plan --mode exactly-one --n 8").out);
  REQUIRE(bitmask["queries"].size() == 3);
  CHECK(bitmask["queries"][0]["elements"] == json({2, 4, 6, 8}));
}

TEST_CASE("plan staged modes") {
  CmdResult r = run_cli("plan --mode two-round --n 16");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["mode"] == "two-round");
  CHECK(j["rounds"] == 2);
  CHECK(j["fanout"] == 4);
  CHECK(j["max_length"] == 8);
  REQUIRE(j["round1"]["queries"].size() == 4);
  CHECK(j["round1"]["queries"][0]["elements"] == json({1, 2, 3, 4}));

  json k = json::parse(run_cli("plan --mode r-round --n 27 --r 3").out);
  CHECK(k["rounds"] == 3);
  CHECK(k["fanout"] == 3);
  CHECK(k["max_length"] == 9);
  CHECK(k["round1"]["queries"].size() == 3);
}

TEST_CASE("plan with answers walks one branch") {
  json j = json::parse(run_cli("plan --mode r-round --n 16 --r 2 --answers NNNN").out);
  CHECK(j["rounds_answered"] == 1);
  CHECK(j["next_round"]["queries"].empty());
  CHECK(j["verdict"]["verdict"] == "none");

  json k = json::parse(run_cli("plan --mode r-round --n 16 --r 2 --answers NYNN").out);
  REQUIRE(k["next_round"]["queries"].size() == 4);
  CHECK(k["next_round"]["queries"][0]["elements"] == json({5}));
  CHECK(k["next_round"]["queries"][3]["elements"] == json({8}));
  CHECK(!k.contains("verdict"));

  json fin =
      json::parse(run_cli("plan --mode r-round --n 16 --r 2 --answers NYNN --answers NYNN").out);
  CHECK(fin["verdict"]["verdict"] == "found");
  CHECK(fin["verdict"]["element"] == 6);
}

TEST_CASE("decode on the paired family") {
  std::string f2 = path_f2();
  CmdResult r = run_cli("decode " + f2 + " YYYNN");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["verdict"] == "found");
  CHECK(j["element"] == 1);

  CHECK(json::parse(run_cli("decode " + f2 + " yynnn").out)["verdict"] == "found");

  r = run_cli("decode " + f2 + " NNNNN");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["verdict"] == "none");

  r = run_cli("decode " + f2 + " YYNYN");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["verdict"] == "inconsistent");

  r = run_cli("decode " + f2 + " NYYYY --method optimal");
  CHECK(r.exit_code == 0);
  json opt = json::parse(r.out);
  CHECK(opt["verdict"] == "found");
  CHECK(opt["element"] == 1);
}

TEST_CASE("decode guards and the undecidable case") {
  write_family("cli_once.json", MultiFamily(Universe(1), {{Query::from_mask(1), 1}}));
  CmdResult r = run_cli("decode cli_once.json Y");
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["verdict"] == "undecidable");

  CHECK(run_cli("decode cli_once.json Y --method optimal").exit_code == 2);
  CHECK(run_cli("decode " + path_f2() + " NYYYY --method optimal --lie-budget 2").exit_code == 2);
  CHECK(run_cli("decode " + path_f2() + " YYY").exit_code == 2);
  CHECK(run_cli("decode " + path_f2() + " XXXXX").exit_code == 2);
  CHECK(run_cli("decode cli_no_such_file.json Y").exit_code == 2);
}

TEST_CASE("simulate a single scenario") {
  std::string f2 = path_f2();
  CmdResult r = run_cli("simulate " + f2 + " --scenario '{2},none'");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["answers"] == "YNNYY");
  CHECK(j["excellent"] == json({2}));
  CHECK(j["lie"].is_null());
  CHECK(j["verdict"]["verdict"] == "found");
  CHECK(j["verdict"]["element"] == 2);

  json lied = json::parse(run_cli("simulate " + f2 + " --scenario '{1},0'").out);
  CHECK(lied["answers"] == "NYYNN");
  CHECK(lied["lie"] == 0);
  CHECK(lied["verdict"]["element"] == 1);

  CHECK(run_cli("simulate " + f2 + " --scenario '{9},none'").exit_code == 2);
  CHECK(run_cli("simulate " + f2 + " --scenario '{1},7'").exit_code == 2);
  CHECK(run_cli("simulate " + f2).exit_code == 2);
}

TEST_CASE("simulate exhaustively") {
  write_family("cli_f4.json", optimal_one_lie_family(4));
  CmdResult r = run_cli("simulate cli_f4.json --exhaustive");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["scenarios"] == 160);  // 2^4 sets times (1 truthful + 9 flips)
  CHECK(j["decoder_cross_checks"] == 160);
  CHECK(j["mismatches"] == 0);
  CHECK(j["failures"].empty());

  write_family("cli_singles3.json", singleton_family_no_lie(3));
  r = run_cli("simulate cli_singles3.json --exhaustive");
  CHECK(r.exit_code == 1);
  json bad = json::parse(r.out);
  CHECK(bad["mismatches"].get<int>() > 0);
  CHECK(!bad["failures"].empty());
}

TEST_CASE("sampled simulation is seed-stable") {
  std::string f2 = path_f2();
  CmdResult a = run_cli("simulate " + f2 + " --sample 50 --seed 7");
  CmdResult b = run_cli("simulate " + f2 + " --sample 50 --seed 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["scenarios"] == 50);
  CHECK(j["mismatches"] == 0);
  CHECK(j["mode"] == "sample");

  write_family("cli_wide.json", singleton_family_no_lie(21));
  CHECK(run_cli("simulate cli_wide.json --sample 5").exit_code == 2);
}

TEST_CASE("verify accepts solving families and rejects the rest") {
  write_family("cli_f5.json", optimal_one_lie_family(5));
  CmdResult r = run_cli("verify cli_f5.json --both");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["solving"] == true);
  CHECK(j["coverage"]["ok"] == true);
  CHECK(j["partition"]["ok"] == true);
  CHECK(j["semantic"]["ok"] == true);

  // structural checks only, by default
  json lemma_only = json::parse(run_cli("verify " + path_f2()).out);
  CHECK(lemma_only["solving"] == true);
  CHECK(!lemma_only.contains("semantic"));

  write_family("cli_tripled2.json",
               MultiFamily(Universe(2), {{Query::from_mask(0b11), 3}}));
  r = run_cli("verify cli_tripled2.json");
  CHECK(r.exit_code == 1);
  json t = json::parse(r.out);
  CHECK(t["solving"] == false);
  CHECK(t["coverage"]["ok"] == true);
  REQUIRE(t["partition"]["ok"] == false);
  CHECK(t["partition"]["witness"]["yes_side_positions"].size() >= 2);
  CHECK(!t["partition"]["candidates"].empty());

  r = run_cli("verify cli_singles3.json --semantic");
  CHECK(r.exit_code == 1);
  json s = json::parse(r.out);
  CHECK(s["semantic"]["ok"] == false);
  CHECK(s["semantic"].contains("witness_answers"));
  CHECK(!s.contains("coverage"));

  write_family("cli_wide17.json", singleton_family_no_lie(17));
  CHECK(run_cli("verify cli_wide17.json").exit_code == 2);
}

TEST_CASE("search-min") {
  CmdResult r = run_cli("search-min --n 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["min_size"] == 5);
  CHECK(j["n"] == 2);
  CHECK(j["max_m"] == 5);
  CHECK(j["witness_count"].get<int>() >= 1);
  CHECK(j["witnesses"].size() == 1);
  CHECK(j["witnesses_truncated"] == (j["witness_count"].get<int>() > 1));
  CHECK(run_cli("search-min --n 2").out == r.out);

  json all = json::parse(run_cli("search-min --n 2 --all-minimal").out);
  CHECK(all["witnesses"].size() == all["witness_count"].get<std::size_t>());
  CHECK(all["witnesses_truncated"] == false);

  json one = json::parse(run_cli("search-min --n 1").out);
  CHECK(one["min_size"] == 3);
  REQUIRE(one["witnesses"].size() == 1);
  CHECK(one["witnesses"][0]["queries"][0]["elements"] == json({1}));
  CHECK(one["witnesses"][0]["queries"][0]["multiplicity"] == 3);

  json unpruned = json::parse(run_cli("search-min --n 2 --no-prune").out);
  CHECK(unpruned["min_size"] == 5);
  CHECK(unpruned["pruned_by"]["coverage"] == 0);

  CmdResult capped = run_cli("search-min --n 2 --max-m 3");
  CHECK(capped.exit_code == 1);
  CHECK(json::parse(capped.out)["min_size"].is_null());

  CHECK(run_cli("search-min --n 5").exit_code == 2);
}

TEST_CASE("restrict") {
  write_family("cli_f3.json", optimal_one_lie_family(3));
  write_family("cli_tripled2.json",
               MultiFamily(Universe(2), {{Query::from_mask(0b11), 3}}));
  CmdResult r = run_cli("restrict cli_f3.json --j 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == run_cli("plan --mode one-lie --n 2").out);

  json relabeled = json::parse(run_cli("restrict cli_f3.json --j 1").out);
  CHECK(relabeled["n"] == 2);
  REQUIRE(relabeled["queries"].size() == 3);
  CHECK(relabeled["queries"][0]["elements"] == json({1, 2}));
  CHECK(relabeled["queries"][1]["elements"] == json({2}));
  CHECK(relabeled["queries"][2]["elements"] == json({1}));

  CHECK(run_cli("restrict cli_tripled2.json --j 1").exit_code == 2);
  CHECK(run_cli("restrict cli_f3.json --j 9").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("plan --mode bogus --n 3").exit_code == 2);
  CHECK(run_cli("plan --n 3").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
