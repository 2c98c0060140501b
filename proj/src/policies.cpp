#include "netcover/policies.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <stdexcept>

#include "netcover/predictors.hpp"

namespace netcover {

std::optional<PolicyKind> policy_from_name(std::string_view name) {
  if (name == "bfs") return PolicyKind::Bfs;
  if (name == "dfs") return PolicyKind::Dfs;
  if (name == "rw") return PolicyKind::Rw;
  if (name == "rwnr") return PolicyKind::Rwnr;
  if (name == "si") return PolicyKind::Si;
  if (name == "mod") return PolicyKind::Mod;
  if (name == "meed") return PolicyKind::Meed;
  if (name == "oracle") return PolicyKind::OracleExcess;
  if (name == "maxdeg") return PolicyKind::MaxDegFrontier;
  if (name == "uniform") return PolicyKind::UniformReplace;
  if (name == "uniform-nr") return PolicyKind::UniformNoReplace;
  return std::nullopt;
}

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Bfs: return "bfs";
    case PolicyKind::Dfs: return "dfs";
    case PolicyKind::Rw: return "rw";
    case PolicyKind::Rwnr: return "rwnr";
    case PolicyKind::Si: return "si";
    case PolicyKind::Mod: return "mod";
    case PolicyKind::Meed: return "meed";
    case PolicyKind::OracleExcess: return "oracle";
    case PolicyKind::MaxDegFrontier: return "maxdeg";
    case PolicyKind::UniformReplace: return "uniform";
    case PolicyKind::UniformNoReplace: return "uniform-nr";
  }
  return "?";
}

bool is_link_tracing(PolicyKind kind) {
  return kind != PolicyKind::UniformReplace && kind != PolicyKind::UniformNoReplace;
}

bool is_with_replacement(PolicyKind kind) {
  return kind == PolicyKind::Rw || kind == PolicyKind::UniformReplace;
}

namespace {

constexpr long kRwnrHopCap = 100000000;  // diagnostic guard only

void append_row(Trace& trace, const CoverState& s, int paid_node, int degree) {
  trace.step.push_back(s.step());
  trace.recruited.push_back(s.recruited_count());
  trace.frontier.push_back(s.frontier_count());
  trace.cover.push_back(s.cover_size());
  trace.payments.push_back(s.payments());
  trace.recruitment_order.push_back(paid_node);
  trace.recruited_degree.push_back(degree);
}

// FIFO/LIFO queue of nodes keyed by first observation; newly observed
// neighbors enter in uniformly shuffled order.
class QueueState {
 public:
  void observe(std::vector<int> nodes, Rng& rng) {
    rng.shuffle(nodes);
    for (int v : nodes) queue_.push_back(v);
  }
  int pop(const CoverState& s, bool fifo) {
    while (!queue_.empty()) {
      int v = fifo ? queue_.front() : queue_.back();
      if (fifo) {
        queue_.pop_front();
      } else {
        queue_.pop_back();
      }
      if (s.in_frontier(v)) return v;
    }
    throw std::logic_error("queue exhausted with nonempty frontier");
  }

 private:
  std::deque<int> queue_;
};

// Frontier nodes bucketed by observed degree, with lazy invalidation: an
// entry is live iff the node is still in the frontier with that exact d.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(int max_degree) : buckets_(max_degree + 1) {}

  void add(int v, int d) {
    buckets_[d].push_back(v);
    max_d_ = std::max(max_d_, d);
  }

  void compact(int d, const CoverState& s) {
    auto& b = buckets_[d];
    std::erase_if(b, [&](int v) { return !s.in_frontier(v) || s.observed_degree(v) != d; });
  }

  // Highest d with a live entry; compacts as it descends.
  int max_live_d(const CoverState& s) {
    while (max_d_ >= 1) {
      compact(max_d_, s);
      if (!buckets_[max_d_].empty()) return max_d_;
      --max_d_;
    }
    throw std::logic_error("no live bucket with nonempty frontier");
  }

  int pick_uniform(int d, Rng& rng) { return buckets_[d][rng.index(buckets_[d].size())]; }

  int ceiling() const { return max_d_; }
  bool live_nonempty(int d, const CoverState& s) {
    compact(d, s);
    return !buckets_[d].empty();
  }

 private:
  std::vector<std::vector<int>> buckets_;
  int max_d_ = 0;
};

// One list entry per edge between B(t) and the frontier; uniform entry choice
// is exactly the SI d-weighted node choice. Entries of recruited nodes are
// dropped lazily.
class EdgeEntries {
 public:
  void push(int v) { entries_.push_back(v); }
  int sample(const CoverState& s, Rng& rng) {
    while (true) {
      std::size_t i = rng.below(entries_.size());
      int v = entries_[i];
      if (s.in_frontier(v)) return v;
      entries_[i] = entries_.back();
      entries_.pop_back();
    }
  }

 private:
  std::vector<int> entries_;
};

int scan_argmax(const CoverState& s, Rng& rng, auto score) {
  long best = -1;
  int chosen = -1;
  int ties = 0;
  for (int v : s.frontier()) {
    long sc = score(v);
    if (sc > best) {
      best = sc;
      chosen = v;
      ties = 1;
    } else if (sc == best) {
      // Uniform among the argmax set in one pass.
      ++ties;
      if (rng.below(ties) == 0) chosen = v;
    }
  }
  return chosen;
}

// MEED selection state: the analytic b_k recursion advanced once per recruit,
// re-deriving zeta_k(t) and the per-d expected excess on demand.
class MeedState {
 public:
  MeedState(const DegreeDistribution& dd, int n) : dd_(dd), n_(n) {
    b_.assign(dd.mass.size(), 1.0 / n);
  }

  void advance() {
    double denom = 0.0;
    for (std::size_t h = 1; h < b_.size(); ++h) denom += h * dd_.mass[h] * (1.0 - b_[h]);
    if (denom < 1e-12) return;  // depleted
    std::vector<double> next = b_;
    for (std::size_t k = 1; k < b_.size(); ++k) {
      next[k] = std::min(1.0, b_[k] + k * (1.0 - b_[k]) / (n_ * denom));
    }
    b_ = std::move(next);
  }

  // <k - d> under zeta^(d) for d = 0..d_max given current b.
  std::vector<double> excess_by_d(int d_max) const {
    DegreeDistribution zeta;
    zeta.node_count = n_;
    zeta.mass.assign(dd_.mass.size(), 0.0);
    double total = 0.0;
    for (std::size_t k = 1; k < b_.size(); ++k) {
      zeta.mass[k] = dd_.mass[k] * (1.0 - b_[k]);
      total += zeta.mass[k];
    }
    if (total <= 0.0) return std::vector<double>(d_max + 1, 0.0);
    for (double& m : zeta.mass) m /= total;
    ExcessTable table = excess_recursion(zeta, d_max);
    std::vector<double> out(d_max + 1, 0.0);
    for (int d = 0; d <= d_max && d < static_cast<int>(table.excess.size()); ++d) {
      out[d] = table.excess[d];
    }
    return out;
  }

 private:
  const DegreeDistribution& dd_;
  int n_;
  std::vector<double> b_;
};

Trace run_uniform(const Graph& g, bool with_replacement, int budget, Rng& rng) {
  const int n = g.node_count();
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<std::uint8_t> sampled(n, 0);
  std::vector<int> unsampled(n);
  for (int i = 0; i < n; ++i) unsampled[i] = i;
  int cover = 0;
  int sampled_count = 0;
  Trace trace;
  for (int t = 1; t <= budget; ++t) {
    int v;
    if (with_replacement) {
      v = rng.index(n);
    } else {
      if (unsampled.empty()) break;  // exhausted
      std::size_t i = rng.below(unsampled.size());
      v = unsampled[i];
      unsampled[i] = unsampled.back();
      unsampled.pop_back();
    }
    if (!sampled[v]) ++sampled_count;
    sampled[v] = 1;
    if (!covered[v]) {
      covered[v] = 1;
      ++cover;
    }
    for (int u : g.neighbors(v)) {
      if (!covered[u]) {
        covered[u] = 1;
        ++cover;
      }
    }
    trace.step.push_back(t);
    trace.recruited.push_back(sampled_count);
    trace.frontier.push_back(cover - sampled_count);
    trace.cover.push_back(cover);
    trace.payments.push_back(t);
    trace.recruitment_order.push_back(v);
    trace.recruited_degree.push_back(g.degree(v));
  }
  return trace;
}

}  // namespace

Trace run_policy(const Graph& g, const Policy& policy, int budget, std::uint64_t seed) {
  if (budget < 1) throw std::runtime_error("budget must be >= 1");
  const int n = g.node_count();
  if (n == 0) throw std::runtime_error("empty graph");
  Rng rng(seed);

  if (!is_link_tracing(policy.kind)) {
    return run_uniform(g, policy.kind == PolicyKind::UniformReplace, budget, rng);
  }

  const int start = rng.index(n);
  CoverState state(g, start);

  int max_degree = 1;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));

  QueueState queue;
  DegreeBuckets buckets(max_degree);
  EdgeEntries edges;
  int walker = start;

  DegreeDistribution meed_dd;
  std::unique_ptr<MeedState> meed;
  if (policy.kind == PolicyKind::Meed) {
    if (policy.side_info != nullptr) {
      meed = std::make_unique<MeedState>(*policy.side_info, n);
    } else {
      meed_dd = degree_distribution(g);
      meed = std::make_unique<MeedState>(meed_dd, n);
    }
    meed->advance();  // b(0) -> b(1): one node is recruited at t = 1
  }

  auto absorb = [&](const RecruitDelta& delta) {
    switch (policy.kind) {
      case PolicyKind::Bfs:
      case PolicyKind::Dfs:
        queue.observe(delta.newly_observed, rng);
        break;
      case PolicyKind::Si:
        for (int v : delta.newly_observed) edges.push(v);
        for (int v : delta.degree_incremented) edges.push(v);
        break;
      case PolicyKind::Mod:
      case PolicyKind::Meed:
        for (int v : delta.newly_observed) buckets.add(v, 1);
        for (int v : delta.degree_incremented) buckets.add(v, state.observed_degree(v));
        break;
      default:
        break;
    }
  };

  RecruitDelta initial;
  initial.newly_observed.assign(state.frontier().begin(), state.frontier().end());
  absorb(initial);

  Trace trace;
  append_row(trace, state, start, g.degree(start));

  while (state.payments() < budget && (state.frontier_count() > 0 || policy.kind == PolicyKind::Rw)) {
    int chosen = -1;
    switch (policy.kind) {
      case PolicyKind::Bfs:
        chosen = queue.pop(state, /*fifo=*/true);
        break;
      case PolicyKind::Dfs:
        chosen = queue.pop(state, /*fifo=*/false);
        break;
      case PolicyKind::Rw: {
        auto nb = g.neighbors(walker);
        int next = nb[rng.below(nb.size())];
        walker = next;
        if (state.is_recruited(next)) {
          state.add_payment();
          append_row(trace, state, next, g.degree(next));
          continue;
        }
        chosen = next;
        break;
      }
      case PolicyKind::Rwnr: {
        if (state.frontier_count() == 0) break;
        long hops = 0;
        int pos = walker;
        while (true) {
          auto nb = g.neighbors(pos);
          pos = nb[rng.below(nb.size())];
          if (!state.is_recruited(pos)) break;
          if (++hops > kRwnrHopCap) throw std::runtime_error("rwnr hop cap exceeded");
        }
        chosen = pos;
        walker = pos;
        break;
      }
      case PolicyKind::Si:
        chosen = edges.sample(state, rng);
        break;
      case PolicyKind::Mod:
        chosen = buckets.pick_uniform(buckets.max_live_d(state), rng);
        break;
      case PolicyKind::Meed: {
        int ceiling = buckets.max_live_d(state);
        std::vector<double> excess = meed->excess_by_d(ceiling);
        int best_d = ceiling;
        double best = -1.0;
        for (int d = 1; d <= ceiling; ++d) {
          if (!buckets.live_nonempty(d, state)) continue;
          if (excess[d] > best) {
            best = excess[d];
            best_d = d;
          }
        }
        chosen = buckets.pick_uniform(best_d, rng);
        break;
      }
      case PolicyKind::OracleExcess:
        chosen = scan_argmax(state, rng,
                             [&](int v) { return static_cast<long>(g.degree(v) - state.observed_degree(v)); });
        break;
      case PolicyKind::MaxDegFrontier:
        chosen = scan_argmax(state, rng, [&](int v) { return static_cast<long>(g.degree(v)); });
        break;
      default:
        throw std::logic_error("unhandled policy");
    }
    if (chosen < 0) break;
    absorb(state.recruit(chosen));
    if (policy.kind == PolicyKind::Rw || policy.kind == PolicyKind::Rwnr) walker = chosen;
    if (policy.kind == PolicyKind::Meed) meed->advance();
    append_row(trace, state, chosen, g.degree(chosen));
  }
  return trace;
}

}  // namespace netcover
