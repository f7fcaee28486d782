#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "burn/engine.hpp"
#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/graph6.hpp"

using namespace burn;
using json = nlohmann::json;

namespace {

std::string binary() {
  const char* env = std::getenv("BURNGAME_BIN");
  REQUIRE_MESSAGE(env != nullptr, "BURNGAME_BIN must point at the burngame binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) {
    std::string feed = "/tmp/burngame_cli_stdin.txt";
    std::ofstream f(feed);
    f << stdin_text;
    f.close();
    cmd += " < " + feed;
  } else {
    cmd += " < /dev/null";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("compute matches the library") {
  CHECK(strip(run("compute --family path:9 --quantity b").out) == "3");
  CHECK(strip(run("compute --family hypercube:4 --quantity bg").out) == "4");
  CHECK(strip(run("compute --family complete:5 --quantity bg-prime").out) == "2");

  // against direct library calls on a couple of arbitrary graphs
  for (const char* famtext : {"cycle:7", "star:4", "corona(path:3,path:2)"}) {
    Graph g = parse_family(famtext);
    RunResult bg = run(std::string("compute --family '") + famtext + "' --quantity bg");
    CHECK(bg.exit_code == 0);
    CHECK(strip(bg.out) == std::to_string(game_value(g, {}, Player::Burner)));
  }

  RunResult rel =
      run("compute --family path:4 --quantity relative --burned 0,3 --starter staller");
  CHECK(strip(rel.out) == "1");

  RunResult j = run("compute --family cycle:5 --quantity bg --trace --format json");
  json parsed = json::parse(j.out);
  CHECK(parsed.at("value") == 3);
  CHECK(parsed.at("quantity") == "bg");
  CHECK(parsed.at("trace").at("rounds").size() == 3);
}

TEST_CASE("compute rejects bad input") {
  CHECK(run("compute --family path:9 --quantity nope").exit_code != 0);
  CHECK(run("compute --family blob:9 --quantity bg").exit_code != 0);
  CHECK(run("compute --quantity bg").exit_code != 0);  // no graph source
  // game quantities are capped at 20 vertices
  CHECK(run("compute --family path:21 --quantity bg").exit_code != 0);
  CHECK(run("compute --family path:21 --quantity b").exit_code == 0);
}

TEST_CASE("graph sources") {
  std::string g6 = emit_graph6(family({FamilyKind::Cycle, 6}));
  CHECK(strip(run("compute --graph6 " + g6 + " --quantity bg").out) == "3");

  std::string path = "/tmp/burngame_cli_edges.txt";
  {
    std::ofstream f(path);
    f << emit_edge_list(family({FamilyKind::Cycle, 6}));
  }
  CHECK(strip(run("compute --edges-file " + path + " --quantity bg").out) == "3");
}

TEST_CASE("verify exit codes and report") {
  RunResult ok = run("verify --suite prop-2.6 --n 1..4 --connected");
  CHECK(ok.exit_code == 0);
  json rep = json::parse(ok.out);
  CHECK(rep.at("summary").at("fail") == 0);
  CHECK(rep.at("schema_version") == 1);

  // alias accepted for the example check
  RunResult alias = run("verify --suite example-2.8 --n 1..1");
  CHECK(alias.exit_code == 0);
  CHECK(json::parse(alias.out).at("suite") == "ex-2.8");

  // the one honest failure set: lexicographic lower bounds without a universal vertex
  RunResult fail = run("verify --suite prop-6.4 --n 1..1");
  CHECK(fail.exit_code == 1);
  CHECK(json::parse(fail.out).at("summary").at("fail") == 24);

  RunResult csv = run("verify --suite prop-2.6 --n 1..3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("check_id,", 0) == 0);

  // order-8 corpora demand the long-running flag
  CHECK(run("verify --suite prop-4.7 --n 6..8 --both-connected").exit_code != 0);
}

TEST_CASE("corpus command") {
  std::string path = "/tmp/burngame_cli_corpus.g6";
  RunResult r = run("corpus --n 4 --dedup --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 11);
  std::remove(path.c_str());
}

TEST_CASE("sweep tables") {
  RunResult r = run("sweep --family path --n 1..8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bg") != std::string::npos);
  CHECK(r.out.find("8") != std::string::npos);
  CHECK(run("sweep --family blob --n 1..3").exit_code != 0);
}

TEST_CASE("play records and replays the identical transcript") {
  std::string rec = "/tmp/burngame_cli_game.json";
  RunResult live = run("play --family path:6 --side staller --starter burner --record " + rec,
                       "5\n");
  CHECK(live.exit_code == 0);
  CHECK(live.out.find("optimal value for this start: 3") != std::string::npos);

  RunResult replay = run("play --family path:6 --side staller --starter burner --replay " + rec);
  CHECK(replay.exit_code == 0);
  CHECK(replay.out == live.out);
  std::remove(rec.c_str());
}

TEST_CASE("play enforces the rules") {
  // burned and out-of-range selections are re-prompted, then 1 round on K_1 finishes
  RunResult r = run("play --family complete:1 --side burner --starter burner", "7\n0\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("game over after 1 rounds") != std::string::npos);

  // EOF mid-game aborts cleanly
  RunResult eof = run("play --family path:5 --side burner --starter burner");
  CHECK(eof.exit_code == 0);
  CHECK(eof.out.find("game aborted") != std::string::npos);
}
