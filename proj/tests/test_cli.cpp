#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "doctest.h"
#include "netcover/harness.hpp"

#ifndef NETCOVER_CLI_PATH
#error "NETCOVER_CLI_PATH must be defined by the build"
#endif

namespace {

std::string temp_path(const char* tag) {
  return std::string("/tmp/netcover_cli_") + tag + "_" + std::to_string(::getpid()) + ".csv";
}

int run(const std::string& args) {
  std::string cmd = std::string(NETCOVER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generate emits the ring edge list") {
  std::string out = temp_path("gen");
  REQUIRE(run("generate --model ring --n 5 --out " + out) == 0);
  std::string text = slurp(out);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 5);
  netcover::Graph g = netcover::load_edge_list(text);
  CHECK(g.node_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
  std::remove(out.c_str());
}

TEST_CASE("simulate output is byte-identical across invocations") {
  std::string gpath = temp_path("graph");
  REQUIRE(run("generate --model er --n 120 --q 0.05 --seed 3 --out " + gpath) == 0);
  std::string a = temp_path("sim_a"), b = temp_path("sim_b");
  std::string args = "simulate --graph " + gpath +
                     " --policy mod --budget 50 --runs 10 --seed 7 --out ";
  REQUIRE(run(args + a) == 0);
  REQUIRE(run(args + b) == 0);
  std::string text_a = slurp(a);
  CHECK(text_a == slurp(b));
  CHECK_FALSE(text_a.empty());

  // And bit-identical to the direct library invocation.
  netcover::Graph g = netcover::load_edge_list_file(gpath);
  netcover::TraceStats s = netcover::run_experiment(
      g, netcover::Policy{netcover::PolicyKind::Mod, nullptr}, 50, 10, 7);
  std::string direct = temp_path("sim_direct");
  netcover::export_csv_file(s, direct);
  CHECK(text_a == slurp(direct));

  std::remove(gpath.c_str());
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove(direct.c_str());
}

TEST_CASE("predict and compare chain matches the library") {
  std::string s_path = temp_path("emp"), p_path = temp_path("pred"), r_path = temp_path("rep");
  REQUIRE(run("simulate --graph model=ring,n=100 --policy uniform --budget 40 "
              "--runs 100 --seed 5 --out " + s_path) == 0);
  REQUIRE(run("predict --graph model=ring,n=100 --model uniform --horizon 40 --out " +
              p_path) == 0);
  REQUIRE(run("compare --empirical " + s_path + " --predicted " + p_path +
              " --n 100 --out " + r_path) == 0);

  auto stats = netcover::import_stats_csv(s_path);
  auto curve = netcover::import_curve_csv(p_path);
  auto report = netcover::compare_curves(stats, curve, 1, 1 << 30, 100.0);
  std::string direct = temp_path("rep_direct");
  netcover::export_csv_file(report, direct);
  CHECK(slurp(r_path) == slurp(direct));

  for (const std::string& p : {s_path, p_path, r_path, direct}) std::remove(p.c_str());
}

TEST_CASE("stats prints key=value lines") {
  std::string out = temp_path("stats_out");
  std::string cmd = std::string(NETCOVER_CLI_PATH) + " stats --model ring --n 8 > " + out;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::string text = slurp(out);
  CHECK(text.find("nodes=8") != std::string::npos);
  CHECK(text.find("edges=8") != std::string::npos);
  CHECK(text.find("mean_degree=2") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("bad invocations exit nonzero") {
  CHECK(run("conquer") != 0);
  CHECK(run("simulate --graph model=ring,n=10 --policy bfs --budget 5 --runs 1 "
            "--seed 1 --out /tmp/x.csv --frobnicate") != 0);
  CHECK(run("simulate --graph /nonexistent.txt --policy bfs --budget 5 --runs 1 "
            "--seed 1 --out /tmp/x.csv") != 0);
  CHECK(run("generate --model ring --n 5") == 0);  // stdout default is fine
}
