#include <cstdio>
#include <cstring>
#include <string>
#include <unistd.h>

#include "doctest.h"
#include "netcover/harness.hpp"
#include "netcover/netcover.h"

namespace {

std::string temp_path(const char* tag) {
  return std::string("/tmp/netcover_capi_") + tag + "_" + std::to_string(::getpid()) + ".csv";
}

}  // namespace

TEST_CASE("graph specs build the expected graphs") {
  nc_graph* g = nullptr;
  REQUIRE(nc_graph_from_spec("model=ring,n=50", 1, &g) == NC_OK);
  CHECK(nc_graph_node_count(g) == 50);
  CHECK(nc_graph_edge_count(g) == 50);
  nc_graph_free(g);

  REQUIRE(nc_graph_from_spec("model=lattice,dims=4x4,periodic=1", 1, &g) == NC_OK);
  CHECK(nc_graph_node_count(g) == 16);
  CHECK(nc_graph_edge_count(g) == 32);
  nc_graph_free(g);

  REQUIRE(nc_graph_from_spec("model=star,leaves=7", 1, &g) == NC_OK);
  CHECK(nc_graph_node_count(g) == 8);
  nc_graph_free(g);

  REQUIRE(nc_graph_from_spec("model=er,n=200,q=0.05", 9, &g) == NC_OK);
  CHECK(nc_graph_node_count(g) == 200);
  double mean = 0, second = 0, clus = 0;
  CHECK(nc_graph_stats(g, &mean, &second, &clus) == NC_OK);
  CHECK(mean > 5.0);
  CHECK(mean < 15.0);
  nc_graph_free(g);
}

TEST_CASE("spec errors surface as parse failures") {
  nc_graph* g = nullptr;
  CHECK(nc_graph_from_spec("n=10", 1, &g) == NC_ERR_PARSE);
  CHECK(std::strlen(nc_last_error()) > 0);
  CHECK(nc_graph_from_spec("model=moebius,n=10", 1, &g) == NC_ERR_PARSE);
  CHECK(nc_graph_from_spec("model=ring,n=abc", 1, &g) == NC_ERR_PARSE);
  CHECK(nc_graph_from_spec("model=ring", 1, &g) == NC_ERR_PARSE);
  CHECK(nc_graph_from_spec(nullptr, 1, &g) == NC_ERR_INVALID_ARGUMENT);
  CHECK(nc_graph_from_spec("model=ring,n=2", 1, &g) == NC_ERR_INTERNAL);
}

TEST_CASE("file io failures are reported") {
  nc_graph* g = nullptr;
  CHECK(nc_graph_load_file("/nonexistent/nowhere.txt", &g) != NC_OK);
  CHECK(std::strlen(nc_last_error()) > 0);
}

TEST_CASE("simulate matches the direct library call") {
  nc_graph* g = nullptr;
  REQUIRE(nc_graph_from_spec("model=ring,n=60", 1, &g) == NC_OK);
  nc_trace_stats* s = nullptr;
  REQUIRE(nc_simulate(g, "mod", 30, 15, 77, 1, &s) == NC_OK);
  CHECK(nc_stats_steps(s) == 30);

  netcover::Graph direct = netcover::ring(60);
  netcover::TraceStats expect = netcover::run_experiment(
      direct, netcover::Policy{netcover::PolicyKind::Mod, nullptr}, 30, 15, 77, 1);
  double mean = 0, sd = 0;
  REQUIRE(nc_stats_final(s, &mean, &sd) == NC_OK);
  CHECK(mean == expect.mean_cover.back());
  CHECK(sd == expect.std_cover.back());

  nc_trace_stats* bad = nullptr;
  CHECK(nc_simulate(g, "greedy", 30, 15, 77, 1, &bad) == NC_ERR_INVALID_ARGUMENT);
  CHECK(nc_simulate(g, "mod", 0, 15, 77, 1, &bad) == NC_ERR_INVALID_ARGUMENT);

  nc_stats_free(s);
  nc_graph_free(g);
}

TEST_CASE("predict compare pipeline is self-consistent") {
  nc_graph* g = nullptr;
  REQUIRE(nc_graph_from_spec("model=ring,n=100", 1, &g) == NC_OK);

  std::string s_path = temp_path("sim"), p_path = temp_path("pred");
  nc_trace_stats* s = nullptr;
  REQUIRE(nc_simulate(g, "uniform", 40, 200, 5, 1, &s) == NC_OK);
  REQUIRE(nc_stats_write_csv(s, s_path.c_str()) == NC_OK);

  nc_curve* c = nullptr;
  REQUIRE(nc_predict(g, "uniform", 40, &c) == NC_OK);
  CHECK(nc_curve_size(c) == 41);
  CHECK(nc_curve_value(c, 1) == doctest::Approx(3.0));
  REQUIRE(nc_curve_write_csv(c, p_path.c_str()) == NC_OK);

  nc_error_report* r = nullptr;
  REQUIRE(nc_compare_csv(s_path.c_str(), p_path.c_str(), 1, 40, 100.0, &r) == NC_OK);
  CHECK(nc_report_max_relative_error(r) < 0.05);  // 200 runs track the formula
  CHECK(nc_report_rmse(r) >= 0.0);

  // Same comparison through the C++ entry points.
  auto stats = netcover::import_stats_csv(s_path);
  auto curve = netcover::import_curve_csv(p_path);
  auto direct = netcover::compare_curves(stats, curve, 1, 40, 100.0);
  CHECK(nc_report_max_relative_error(r) == direct.max_relative_error);
  CHECK(nc_report_rmse(r) == direct.rmse);

  nc_report_free(r);
  nc_curve_free(c);
  nc_stats_free(s);
  nc_graph_free(g);
  std::remove(s_path.c_str());
  std::remove(p_path.c_str());
}

TEST_CASE("all predictor models are reachable") {
  nc_graph* g = nullptr;
  REQUIRE(nc_graph_from_spec("model=ring,n=30", 1, &g) == NC_OK);
  for (const char* model : {"uniform", "uniform-nr", "rw-exact", "rw-steady", "rwnr",
                            "rwnr-edges", "si", "si-frontier"}) {
    nc_curve* c = nullptr;
    REQUIRE_MESSAGE(nc_predict(g, model, 20, &c) == NC_OK, model);
    CHECK(nc_curve_size(c) >= 2);
    nc_curve_free(c);
  }
  nc_curve* c = nullptr;
  CHECK(nc_predict(g, "magic", 20, &c) == NC_ERR_INVALID_ARGUMENT);
  nc_graph_free(g);
}

TEST_CASE("largest component and rewire through the c layer") {
  nc_graph* g = nullptr;
  REQUIRE(nc_graph_from_spec("model=er,n=300,q=0.01,", 4, &g) == NC_OK);
  nc_graph* lc = nullptr;
  REQUIRE(nc_graph_largest_component(g, &lc) == NC_OK);
  CHECK(nc_graph_node_count(lc) <= nc_graph_node_count(g));
  CHECK(nc_graph_node_count(lc) > 100);
  nc_graph* rw = nullptr;
  REQUIRE(nc_graph_rewire(lc, 8, &rw) == NC_OK);
  CHECK(nc_graph_edge_count(rw) == nc_graph_edge_count(lc));
  nc_graph_free(rw);
  nc_graph_free(lc);
  nc_graph_free(g);
}
