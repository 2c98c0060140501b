#include <set>
#include <vector>

#include "doctest.h"
#include "netcover/cover.hpp"
#include "netcover/graph.hpp"
#include "netcover/rng.hpp"

using namespace netcover;

TEST_CASE("hand trace on a 3-path") {
  Graph g = Graph::from_edges({{0, 1}, {1, 2}});
  CoverState s(g, 0);
  CHECK(s.step() == 1);
  CHECK(s.payments() == 1);
  CHECK(s.recruited_count() == 1);
  CHECK(s.frontier_count() == 1);
  CHECK(s.uncovered_count() == 1);
  CHECK(s.cover_size() == 2);
  CHECK(s.observed_degree(1) == 1);

  CHECK_THROWS(s.recruit(0));  // already recruited
  CHECK_THROWS(s.recruit(2));  // still uncovered

  RecruitDelta d = s.recruit(1);
  CHECK(d.newly_observed == std::vector<int>{2});
  CHECK(d.degree_incremented.empty());
  CHECK(s.cover_size() == 3);
  CHECK(s.uncovered_count() == 0);
  CHECK(s.step() == 2);
}

TEST_CASE("delta reports degree increments") {
  Graph g = ring(4);  // 0-1-2-3-0
  CoverState s(g, 0);
  RecruitDelta d = s.recruit(1);
  CHECK(d.newly_observed == std::vector<int>{2});
  CHECK(d.degree_incremented.empty());
  d = s.recruit(3);
  CHECK(d.newly_observed.empty());
  CHECK(d.degree_incremented == std::vector<int>{2});
  CHECK(s.observed_degree(2) == 2);
}

namespace {

// Recompute the partition from scratch given the recruited set.
struct Brute {
  std::set<int> recruited;
  std::set<int> frontier;
  std::vector<int> observed_degree;

  explicit Brute(const Graph& g) : observed_degree(g.node_count(), 0) {}

  void refresh(const Graph& g) {
    frontier.clear();
    std::fill(observed_degree.begin(), observed_degree.end(), 0);
    for (int r : recruited) {
      for (int u : g.neighbors(r)) {
        if (!recruited.count(u)) {
          frontier.insert(u);
          ++observed_degree[u];
        }
      }
    }
  }
};

}  // namespace

TEST_CASE("incremental state matches brute force on random sequences") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + rng.index(199);
    Graph g = erdos_renyi(n, 2.5 / n, rng.next());
    int start = rng.index(n);
    CoverState s(g, start);
    Brute brute(g);
    brute.recruited.insert(start);
    brute.refresh(g);

    while (s.frontier_count() > 0) {
      CHECK(s.recruited_count() == static_cast<int>(brute.recruited.size()));
      CHECK(s.frontier_count() == static_cast<int>(brute.frontier.size()));
      for (int v : brute.frontier) {
        CHECK(s.in_frontier(v));
        CHECK(s.observed_degree(v) == brute.observed_degree[v]);
      }
      CHECK(s.cover_size() ==
            static_cast<int>(brute.recruited.size() + brute.frontier.size()));

      const auto& f = s.frontier();
      int v = f[rng.index(f.size())];
      s.recruit(v);
      brute.recruited.insert(v);
      brute.refresh(g);
    }
    CHECK(s.frontier_view().empty());
  }
}
