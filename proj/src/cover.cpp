#include "netcover/cover.hpp"

#include <stdexcept>

namespace netcover {

CoverState::CoverState(const Graph& g, int start) : graph_(&g) {
  const int n = g.node_count();
  if (start < 0 || start >= n) throw std::runtime_error("start node out of range");
  recruited_.assign(n, 0);
  observed_degree_.assign(n, 0);
  frontier_pos_.assign(n, -1);

  recruited_[start] = 1;
  recruited_count_ = 1;
  uncovered_count_ = n - 1;
  t_ = 1;
  payments_ = 1;
  for (int u : g.neighbors(start)) {
    observed_degree_[u] = 1;
    frontier_pos_[u] = static_cast<int>(frontier_.size());
    frontier_.push_back(u);
    --uncovered_count_;
  }
  check_partition();
}

RecruitDelta CoverState::recruit(int v) {
  if (!in_frontier(v)) throw std::runtime_error("recruit: node not in frontier");

  // Swap-remove v from the frontier list.
  int pos = frontier_pos_[v];
  int last = frontier_.back();
  frontier_[pos] = last;
  frontier_pos_[last] = pos;
  frontier_.pop_back();
  frontier_pos_[v] = -1;

  recruited_[v] = 1;
  ++recruited_count_;
  ++t_;
  ++payments_;

  RecruitDelta delta;
  for (int u : graph_->neighbors(v)) {
    if (recruited_[u]) continue;
    if (frontier_pos_[u] < 0) {
      observed_degree_[u] = 1;
      frontier_pos_[u] = static_cast<int>(frontier_.size());
      frontier_.push_back(u);
      --uncovered_count_;
      delta.newly_observed.push_back(u);
    } else {
      ++observed_degree_[u];
      delta.degree_incremented.push_back(u);
    }
  }
  check_partition();
  return delta;
}

std::map<int, int> CoverState::frontier_view() const {
  std::map<int, int> view;
  for (int v : frontier_) view.emplace(v, observed_degree_[v]);
  return view;
}

void CoverState::check_partition() const {
  if (recruited_count_ + frontier_count() + uncovered_count_ != graph_->node_count()) {
    throw std::logic_error("cover partition identity violated");
  }
}

}  // namespace netcover
