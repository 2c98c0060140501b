#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "netcover/predictors.hpp"
#include "netcover/rng.hpp"

using namespace netcover;

namespace {

Graph path(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(edges);
}

Graph complete(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(edges);
}

DegreeDistribution random_distribution(Rng& rng) {
  int k_max = 2 + rng.index(10);
  DegreeDistribution dd;
  dd.mass.assign(k_max + 1, 0.0);
  dd.node_count = 100;
  double total = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    dd.mass[k] = rng.real() + 0.01;
    total += dd.mass[k];
  }
  for (double& m : dd.mass) m /= total;
  return dd;
}

}  // namespace

TEST_CASE("uniform with replacement matches the closed form on a ring") {
  int n = 1000;
  DegreeDistribution dd = degree_distribution(ring(n));
  PredictorCurve c = uniform_replace_curve(dd, n, 200);
  for (int t = 0; t <= 200; ++t) {
    double expect = n - n * std::pow(1.0 - 3.0 / n, t);
    CHECK(c.at(t) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(uniform_replace_linear(dd, n, 7) == doctest::Approx(21.0));
}

TEST_CASE("uniform without replacement dominates with replacement") {
  DegreeDistribution dd = degree_distribution(erdos_renyi(300, 0.02, 4));
  PredictorCurve nr = uniform_noreplace_curve(dd, 300, 300);
  PredictorCurve wr = uniform_replace_curve(dd, 300, 300);
  CHECK(nr.at(1) == doctest::Approx(wr.at(1)).epsilon(1e-12));
  for (int t = 1; t <= nr.horizon(); ++t) {
    CHECK(nr.at(t) >= wr.at(t) - 1e-9);
    CHECK(nr.at(t) >= nr.at(t - 1) - 1e-9);
    CHECK(nr.at(t) <= 300.0 + 1e-9);
  }
  CHECK_THROWS(uniform_noreplace_curve(dd, 300, 301));
}

TEST_CASE("walk cover on a 3-path at t=1 is 2.5") {
  Graph g = path(3);
  PredictorCurve exact = rw_exact_taboo(g, 3);
  PredictorCurve steady = rw_steady_curve(g, 3);
  CHECK(exact.at(0) == doctest::Approx(0.0));
  CHECK(exact.at(1) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(steady.at(1) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("exact and steady walk predictions agree at t=1") {
  for (const Graph& g : {ring(9), path(7), star(5), erdos_renyi(40, 0.2, 6)}) {
    PredictorCurve exact = rw_exact_taboo(g, 2);
    PredictorCurve steady = rw_steady_curve(g, 2);
    CHECK(exact.at(1) == doctest::Approx(steady.at(1)).epsilon(1e-12));
    CHECK(exact.at(2) <= g.node_count() + 1e-9);
    CHECK(exact.at(2) >= exact.at(1) - 1e-9);
  }
}

TEST_CASE("on a complete graph steady equals exact") {
  Graph g = complete(20);
  PredictorCurve exact = rw_exact_taboo(g, 10);
  PredictorCurve steady = rw_steady_curve(g, 10);
  CHECK(exact.at(0) == doctest::Approx(0.0));
  for (int t = 1; t <= 10; ++t) {
    CHECK(std::abs(exact.at(t) - steady.at(t)) / 20.0 <= 0.01);
    CHECK(exact.at(t) == doctest::Approx(20.0).epsilon(1e-9));
  }
}

TEST_CASE("walk linear form on a ring") {
  CHECK(rw_linear(ring(50), 1) == doctest::Approx(3.0));
  CHECK(rw_linear(ring(50), 5) == doctest::Approx(15.0));
}

TEST_CASE("no-replacement walk recursion on a 3-path") {
  RwnrPrediction p = rwnr_curve(path(3), 2);
  CHECK(p.undiscovered_edges.at(0) == doctest::Approx(2.0));
  CHECK(p.undiscovered_edges.at(1) == doctest::Approx(0.5).epsilon(1e-12));
  // Node survival: ends 1/4 each, middle 0.
  CHECK(p.cover.at(1) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("si mean field recruits exactly one node per step") {
  for (const Graph& g : {ring(200), erdos_renyi(200, 0.03, 2)}) {
    DegreeDistribution dd = degree_distribution(g);
    SiPrediction p = si_meanfield(dd, g.node_count(), 80);
    for (std::size_t t = 1; t < p.trajectory.size(); ++t) {
      double delta = p.trajectory[t].recruited_mean(dd) -
                     p.trajectory[t - 1].recruited_mean(dd);
      CHECK(delta == doctest::Approx(1.0).epsilon(1e-9));
    }
    for (int t = 0; t <= p.cover.horizon(); ++t) {
      CHECK(p.cover.at(t) == doctest::Approx(1.0 + t + p.frontier.at(t)));
      CHECK(p.frontier.at(t) >= -1e-9);
    }
  }
}

TEST_CASE("excess recursion on the worked two-point distribution") {
  DegreeDistribution dd;
  dd.mass = {0.0, 0.5, 0.5};
  dd.node_count = 10;
  ExcessTable table = excess_recursion(dd, 2);
  CHECK(table.zeta[1][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(table.zeta[1][2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(table.excess[0] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(table.excess[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(table.excess[2] == doctest::Approx(0.0));
}

TEST_CASE("recursion and moment ratio agree on random distributions") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    DegreeDistribution dd = random_distribution(rng);
    int d_max = dd.max_degree();
    ExcessTable table = excess_recursion(dd, d_max);
    int limit = table.truncated_at < 0 ? d_max : table.truncated_at - 1;
    for (int d = 0; d <= limit; ++d) {
      CHECK(table.excess[d] == doctest::Approx(excess_moment_ratio(dd, d)).epsilon(1e-9));
    }
  }
}

TEST_CASE("binomial excess closed form") {
  CHECK(er_excess(2000, 0.005, 0) == doctest::Approx(1999 * 0.005));
  CHECK(er_excess(2000, 0.005, 5) == doctest::Approx(1994 * 0.005));
  CHECK_THROWS(er_excess(10, 1.5, 0));
}

TEST_CASE("power-law excess closed form at tau=1") {
  for (double c : {0.2, 0.5, 0.8}) {
    for (int d : {1, 2, 5}) {
      CHECK(powerlaw_excess(c, 1.0, d) == doctest::Approx(c * d / (1 - c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tau=2 series value and bounds") {
  CHECK(gamma_d_tau2(0.5, 1) == doctest::Approx(1.258).epsilon(0.005));
  for (int d = 1; d <= 20; ++d) {
    for (int i = 1; i <= 9; ++i) {
      double c = i / 10.0;
      double scaled = gamma_d_tau2(c, d) * (1.0 - c) / c;
      CHECK(scaled > d / (1.0 + 1.0 / d));
      CHECK(scaled < d + 1.0);
    }
  }
}

TEST_CASE("polylog series") {
  CHECK(polylog(1.0, 0.3) == doctest::Approx(-std::log(0.7)).epsilon(1e-12));
  double li2_half = std::numbers::pi * std::numbers::pi / 12.0 -
                    std::log(2.0) * std::log(2.0) / 2.0;
  CHECK(polylog(2.0, 0.5) == doctest::Approx(li2_half).epsilon(1e-9));
  CHECK_THROWS(polylog(2.0, 1.0));
}

TEST_CASE("corrected conditional degree reduces sensibly") {
  DegreeDistribution dd;
  dd.mass = {0.0, 0.5, 0.5};
  dd.node_count = 10;
  ExcessTable table = excess_recursion(dd, 2);
  // With no d+1 population the correction is just <k> under zeta^(d).
  CHECK(corrected_conditional_degree(table, 0, 5.0, 0.0) ==
        doctest::Approx(table.mean_degree[0]));
  CHECK_THROWS(corrected_conditional_degree(table, 0, 1.0, 1.0));
}

TEST_CASE("grid yields") {
  CHECK(grid_bfs_yield(2, 4) == doctest::Approx(1.25));
  CHECK(grid_bfs_yield(3, 2) == doctest::Approx(19.0 / 9.0));
  CHECK_THROWS(grid_bfs_yield(4, 1));
  CHECK_THROWS(grid_bfs_yield(2, 0));
}

TEST_CASE("steady walk curve is concave") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = erdos_renyi(60, 0.1, rng.next());
    PredictorCurve c = rw_steady_curve(g, 50);
    for (int t = 1; t < 50; ++t) {
      CHECK(c.at(t + 1) - 2 * c.at(t) + c.at(t - 1) <= 1e-9);
    }
  }
}
