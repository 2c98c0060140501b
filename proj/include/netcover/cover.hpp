#ifndef NETCOVER_COVER_HPP
#define NETCOVER_COVER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

// What one recruit changed, for policies that keep auxiliary state.
struct RecruitDelta {
  std::vector<int> newly_observed;      // entered the frontier with d = 1
  std::vector<int> degree_incremented;  // were already in the frontier
};

// Evolving partition of V into recruited B(t), frontier N(B(t)) and
// uncovered W(t), with per-node observed degrees d(v,t) maintained
// incrementally. The identity B + F + W = N is checked after every mutation.
class CoverState {
 public:
  CoverState(const Graph& g, int start);

  // v must be in the frontier. Advances t and payments by one.
  RecruitDelta recruit(int v);

  // Budget charge with no recruitment (RW revisits).
  void add_payment() { ++payments_; }

  int step() const { return t_; }
  int payments() const { return payments_; }
  int recruited_count() const { return recruited_count_; }
  int frontier_count() const { return static_cast<int>(frontier_.size()); }
  int uncovered_count() const { return uncovered_count_; }
  int cover_size() const { return recruited_count_ + frontier_count(); }

  bool is_recruited(int v) const { return recruited_[v] != 0; }
  bool in_frontier(int v) const { return frontier_pos_[v] >= 0; }
  int observed_degree(int v) const { return observed_degree_[v]; }

  // Live frontier in insertion order (deterministic given the recruit
  // sequence); use frontier_view() when id order matters.
  const std::vector<int>& frontier() const { return frontier_; }

  // Read-only snapshot ordered by node id.
  std::map<int, int> frontier_view() const;

  const Graph& graph() const { return *graph_; }

 private:
  void check_partition() const;

  const Graph* graph_;
  int t_ = 0;
  int payments_ = 0;
  int recruited_count_ = 0;
  int uncovered_count_ = 0;
  std::vector<std::uint8_t> recruited_;
  std::vector<int> observed_degree_;
  std::vector<int> frontier_;
  std::vector<int> frontier_pos_;  // index into frontier_, -1 if absent
};

// Per-step history of one run. For with-replacement walks the row index is
// the payment count, so all policies share the budget x-axis.
struct Trace {
  std::vector<int> step;            // t (recruit count) at each payment
  std::vector<int> recruited;       // B
  std::vector<int> frontier;        // N(B)
  std::vector<int> cover;           // B + N(B)
  std::vector<int> payments;       // running payment count (== row index + 1)
  std::vector<int> recruitment_order;
  std::vector<int> recruited_degree;  // true degree of the node paid at each row
};

}  // namespace netcover

#endif
