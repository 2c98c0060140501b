#ifndef NETCOVER_GRAPH_HPP
#define NETCOVER_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcover/rng.hpp"

namespace netcover {

// Immutable undirected simple graph in offset-indexed (CSR) adjacency form.
// Node ids are dense 0..N-1; the original ids seen at load time are kept in
// original_ids for reporting. Neighbor lists are sorted by id.
class Graph {
 public:
  Graph() = default;

  // edges may contain duplicates and self-loops; both are dropped.
  // Node ids are compacted to 0..N-1 preserving first-appearance order.
  static Graph from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

  // edges over an already-dense id space 0..n-1 (generators use this).
  static Graph from_dense_edges(int n, std::vector<std::pair<std::int32_t, std::int32_t>> edges);

  int node_count() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adjacency_.size()) / 2; }

  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  std::span<const std::int32_t> neighbors(int v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(int u, int v) const;
  bool connected() const;

  std::int64_t original_id(int v) const { return original_ids_[v]; }

  // Edge list text, one "u v" line per edge (original ids).
  std::string to_edge_list() const;

 private:
  static Graph build(int n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                     std::vector<std::int64_t> original_ids);

  std::vector<std::int64_t> offsets_{0};
  std::vector<std::int32_t> adjacency_;
  std::vector<std::int64_t> original_ids_;
};

// Normalized degree mass {p_k}, k >= 1. Degree-0 nodes are outside the
// support (an isolated node cannot be covered by link tracing).
struct DegreeDistribution {
  std::vector<double> mass;  // indexed by k, mass[0] == 0
  int node_count = 0;

  int max_degree() const { return static_cast<int>(mass.size()) - 1; }
  double mean() const;
  double second_moment() const;
  void validate() const;  // sums to 1 within 1e-12, no negative mass
};

struct GraphStats {
  int node_count = 0;
  std::int64_t edge_count = 0;
  double mean_degree = 0.0;
  double second_moment = 0.0;
  double clustering = 0.0;  // 3 * triangles / wedges
};

// Parsing; lines starting with '#' are ignored. Throws std::runtime_error
// with a line number on malformed input and on empty input.
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

// Induced subgraph on the largest connected component, ids recompacted.
// Size ties go to the component holding the smallest original id.
Graph largest_component(const Graph& g);

// Generators.
Graph ring(int n);                  // cycle, n >= 3
Graph star(int leaves);             // hub id 0, leaves >= 1
Graph lattice(const std::vector<int>& dims, bool periodic);  // 2 or 3 dims, sides >= 3
Graph erdos_renyi(int n, double q, std::uint64_t seed);
// Erased configuration model: random stub matching, then self-loops and
// multi-edges removed.
Graph configuration_model(std::vector<int> degrees, std::uint64_t seed);

// Degree sequence sampled from p_k ∝ k^(-tau), 1 <= k <= k_max, with the sum
// forced even. k_max <= 0 picks floor(sqrt(n)).
std::vector<int> powerlaw_degrees(int n, double tau, int k_max, std::uint64_t seed);

// Degree-preserving randomization via double edge swaps. Swaps are applied in
// batches; a batch that breaks connectivity is rolled back and retried with a
// smaller window, so the result is always connected and simple. Targets
// 10*M accepted swaps within a 1e4*M attempt budget; degree sequences with
// few or no alternative connected realizations (e.g. a star) come back
// unchanged when the attempts run out.
Graph rewire(const Graph& g, std::uint64_t seed);

DegreeDistribution degree_distribution(const Graph& g);
GraphStats stats(const Graph& g);

}  // namespace netcover

#endif
