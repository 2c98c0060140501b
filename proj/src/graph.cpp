#include "netcover/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace netcover {

namespace {

std::uint64_t edge_key(std::int32_t u, std::int32_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph Graph::from_dense_edges(int n, std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::pair<std::int32_t, std::int32_t>> unique;
  unique.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) continue;
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::runtime_error("edge endpoint out of range");
    if (seen.insert(edge_key(u, v)).second) unique.emplace_back(u, v);
  }
  std::vector<std::int64_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return build(n, unique, std::move(ids));
}

Graph Graph::from_edges(const std::vector<std::pair<std::int64_t, std::int64_t>>& edges) {
  std::unordered_map<std::int64_t, std::int32_t> remap;
  std::vector<std::int64_t> ids;
  auto compact = [&](std::int64_t raw) {
    auto [it, inserted] = remap.emplace(raw, static_cast<std::int32_t>(ids.size()));
    if (inserted) ids.push_back(raw);
    return it->second;
  };
  std::vector<std::pair<std::int32_t, std::int32_t>> dense;
  dense.reserve(edges.size());
  for (auto [a, b] : edges) {
    // Sequence the two lookups; argument evaluation order is unspecified and
    // ids must follow first appearance.
    std::int32_t u = compact(a);
    std::int32_t v = compact(b);
    dense.emplace_back(u, v);
  }

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<std::int32_t, std::int32_t>> unique;
  for (auto [u, v] : dense) {
    if (u == v) continue;
    if (seen.insert(edge_key(u, v)).second) unique.emplace_back(u, v);
  }
  const int n = static_cast<int>(ids.size());
  return build(n, unique, std::move(ids));
}

Graph Graph::build(int n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges,
                   std::vector<std::int64_t> original_ids) {
  std::vector<std::int64_t> offsets(n + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<std::int32_t> adjacency(offsets[n]);
  std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    adjacency[cursor[u]++] = v;
    adjacency[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency.begin() + offsets[v], adjacency.begin() + offsets[v + 1]);
  }

  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  g.original_ids_ = std::move(original_ids);

  // Construction-time invariants: simple, symmetric, degree sum = 2M.
  for (int v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) throw std::logic_error("self-loop survived construction");
      if (i > 0 && nb[i] == nb[i - 1]) throw std::logic_error("duplicate neighbor");
    }
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
  const int n = node_count();
  if (n == 0) return false;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  std::size_t head = 0;
  int visited = 1;
  while (head < queue.size()) {
    int v = queue[head++];
    for (int u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        queue.push_back(u);
      }
    }
  }
  return visited == n;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  for (int v = 0; v < node_count(); ++v) {
    for (int u : neighbors(v)) {
      if (v < u) out << original_ids_[v] << ' ' << original_ids_[u] << '\n';
    }
  }
  return out.str();
}

double DegreeDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 1; k < mass.size(); ++k) m += static_cast<double>(k) * mass[k];
  return m;
}

double DegreeDistribution::second_moment() const {
  double m = 0.0;
  for (std::size_t k = 1; k < mass.size(); ++k) m += static_cast<double>(k) * k * mass[k];
  return m;
}

void DegreeDistribution::validate() const {
  double total = 0.0;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    if (mass[k] < 0.0) throw std::runtime_error("negative degree mass");
    if (k == 0 && mass[k] != 0.0) throw std::runtime_error("degree-0 mass is not supported");
    total += mass[k];
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::runtime_error("degree mass does not sum to 1");
}

Graph load_edge_list(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream in{std::string(line)};
    std::int64_t u, v;
    std::string trailing;
    if (!(in >> u >> v) || (in >> trailing)) {
      throw std::runtime_error("malformed edge list line " + std::to_string(line_no));
    }
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::runtime_error("empty edge list");
  return Graph::from_edges(edges);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

Graph largest_component(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw std::runtime_error("empty graph");
  std::vector<int> component(n, -1);
  int best = -1;
  int best_size = 0;
  std::int64_t best_min_id = 0;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    int c = count++;
    std::vector<int> queue{s};
    component[s] = c;
    int size = 0;
    std::int64_t min_id = g.original_id(s);
    std::size_t head = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      ++size;
      min_id = std::min(min_id, g.original_id(v));
      for (int u : g.neighbors(v)) {
        if (component[u] < 0) {
          component[u] = c;
          queue.push_back(u);
        }
      }
    }
    if (size > best_size || (size == best_size && min_id < best_min_id)) {
      best = c;
      best_size = size;
      best_min_id = min_id;
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (int v = 0; v < n; ++v) {
    if (component[v] != best) continue;
    for (int u : g.neighbors(v)) {
      if (v < u) edges.emplace_back(g.original_id(v), g.original_id(u));
    }
  }
  if (edges.empty()) throw std::runtime_error("largest component is an isolated node");
  return Graph::from_edges(edges);
}

Graph ring(int n) {
  if (n < 3) throw std::runtime_error("ring requires n >= 3");
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_dense_edges(n, std::move(edges));
}

Graph star(int leaves) {
  if (leaves < 1) throw std::runtime_error("star requires at least one leaf");
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_dense_edges(leaves + 1, std::move(edges));
}

Graph lattice(const std::vector<int>& dims, bool periodic) {
  if (dims.size() < 2 || dims.size() > 3) throw std::runtime_error("lattice takes 2 or 3 side lengths");
  for (int side : dims) {
    if (side < 3) throw std::runtime_error("lattice sides must be >= 3");
  }
  std::vector<int> sides = dims;
  if (sides.size() == 2) sides.push_back(1);
  const int nx = sides[0], ny = sides[1], nz = sides[2];
  auto id = [&](int x, int y, int z) { return (z * ny + y) * nx + x; };
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x) {
        int v = id(x, y, z);
        if (x + 1 < nx) edges.emplace_back(v, id(x + 1, y, z));
        else if (periodic) edges.emplace_back(v, id(0, y, z));
        if (y + 1 < ny) edges.emplace_back(v, id(x, y + 1, z));
        else if (periodic) edges.emplace_back(v, id(x, 0, z));
        if (nz > 1) {
          if (z + 1 < nz) edges.emplace_back(v, id(x, y, z + 1));
          else if (periodic) edges.emplace_back(v, id(x, y, 0));
        }
      }
    }
  }
  return Graph::from_dense_edges(nx * ny * nz, std::move(edges));
}

Graph erdos_renyi(int n, double q, std::uint64_t seed) {
  if (!(q > 0.0 && q < 1.0)) throw std::runtime_error("erdos_renyi requires 0 < q < 1");
  Rng rng(seed);
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  // Geometric skipping over the lexicographic pair order.
  const double log1q = std::log1p(-q);
  std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t idx = -1;
  // Invert idx -> (a, b), a < b; idx is monotone so the row cursor only
  // ever advances.
  int a = 0;
  std::int64_t row_start = 0;
  while (true) {
    double u = 1.0 - rng.real();  // (0, 1]
    idx += 1 + static_cast<std::int64_t>(std::floor(std::log(u) / log1q));
    if (idx >= total) break;
    while (idx - row_start >= n - 1 - a) {
      row_start += n - 1 - a;
      ++a;
    }
    int b = a + 1 + static_cast<int>(idx - row_start);
    edges.emplace_back(a, b);
  }
  return Graph::from_dense_edges(n, std::move(edges));
}

Graph configuration_model(std::vector<int> degrees, std::uint64_t seed) {
  std::int64_t sum = 0;
  for (int d : degrees) {
    if (d < 1) throw std::runtime_error("configuration model degrees must be >= 1");
    sum += d;
  }
  if (sum % 2 != 0) throw std::runtime_error("degree sum must be even");
  std::vector<std::int32_t> stubs;
  stubs.reserve(sum);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (int i = 0; i < degrees[v]; ++i) stubs.push_back(static_cast<std::int32_t>(v));
  }
  Rng rng(seed);
  rng.shuffle(stubs);
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
  return Graph::from_dense_edges(static_cast<int>(degrees.size()), std::move(edges));
}

std::vector<int> powerlaw_degrees(int n, double tau, int k_max, std::uint64_t seed) {
  if (n < 2) throw std::runtime_error("need at least two nodes");
  if (k_max <= 0) k_max = std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)))));
  std::vector<double> cdf(k_max + 1, 0.0);
  double total = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    total += std::pow(static_cast<double>(k), -tau);
    cdf[k] = total;
  }
  for (int k = 1; k <= k_max; ++k) cdf[k] /= total;
  Rng rng(seed);
  std::vector<int> degrees(n);
  for (int v = 0; v < n; ++v) {
    double u = rng.real();
    int k = static_cast<int>(std::lower_bound(cdf.begin() + 1, cdf.end(), u) - cdf.begin());
    degrees[v] = std::min(k, k_max);
  }
  std::int64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
  if (sum % 2 != 0) ++degrees[rng.index(degrees.size())];
  return degrees;
}

Graph rewire(const Graph& g, std::uint64_t seed) {
  if (!g.connected()) throw std::runtime_error("rewire requires a connected graph");
  const int n = g.node_count();
  const std::int64_t m = g.edge_count();

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) {
      if (v < u) {
        edges.emplace_back(v, u);
        present.insert(edge_key(v, u));
      }
    }
  }

  auto is_connected = [&]() {
    Graph cand = Graph::from_dense_edges(n, edges);
    return cand.connected();
  };

  Rng rng(seed);
  const std::int64_t target = 10 * m;
  const std::int64_t attempt_cap = 10000 * m;
  std::int64_t accepted = 0;
  std::int64_t attempts = 0;

  // Swaps are validated for simplicity one at a time, but connectivity is
  // checked per batch: a batch that disconnects the graph is rolled back and
  // the window shrinks.
  std::int64_t batch = std::max<std::int64_t>(1, m / 4);
  while (accepted < target && attempts < attempt_cap) {
    std::vector<std::pair<std::size_t, std::size_t>> applied;  // edge indices swapped
    std::vector<std::pair<std::pair<std::int32_t, std::int32_t>,
                          std::pair<std::int32_t, std::int32_t>>> before;
    std::int64_t done = 0;
    while (done < batch && accepted + done < target && attempts < attempt_cap) {
      ++attempts;
      std::size_t i = rng.below(edges.size());
      std::size_t j = rng.below(edges.size());
      if (i == j) continue;
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (rng.bernoulli(0.5)) std::swap(c, d);
      // (a,b),(c,d) -> (a,c),(b,d)
      if (a == c || a == d || b == c || b == d) continue;
      if (present.count(edge_key(a, c)) || present.count(edge_key(b, d))) continue;
      present.erase(edge_key(a, b));
      present.erase(edge_key(c, d));
      present.insert(edge_key(a, c));
      present.insert(edge_key(b, d));
      before.push_back({edges[i], edges[j]});
      edges[i] = {a, c};
      edges[j] = {b, d};
      applied.push_back({i, j});
      ++done;
    }
    if (applied.empty()) break;  // no simple swap found within the budget
    if (is_connected()) {
      accepted += done;
      batch = std::min<std::int64_t>(batch * 2, std::max<std::int64_t>(1, m / 2));
    } else {
      for (std::size_t k = applied.size(); k-- > 0;) {
        auto [i, j] = applied[k];
        auto [e1, e2] = before[k];
        present.erase(edge_key(edges[i].first, edges[i].second));
        present.erase(edge_key(edges[j].first, edges[j].second));
        edges[i] = e1;
        edges[j] = e2;
        present.insert(edge_key(e1.first, e1.second));
        present.insert(edge_key(e2.first, e2.second));
      }
      if (batch == 1) {
        // This particular swap disconnects; resample.
        continue;
      }
      batch = std::max<std::int64_t>(1, batch / 4);
    }
  }
  return Graph::from_dense_edges(n, std::move(edges));
}

DegreeDistribution degree_distribution(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) throw std::runtime_error("empty graph");
  int k_max = 0;
  for (int v = 0; v < n; ++v) k_max = std::max(k_max, g.degree(v));
  DegreeDistribution dd;
  dd.node_count = n;
  dd.mass.assign(k_max + 1, 0.0);
  int supported = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 1) {
      dd.mass[g.degree(v)] += 1.0;
      ++supported;
    }
  }
  if (supported == 0) throw std::runtime_error("graph has no edges");
  for (double& p : dd.mass) p /= supported;
  dd.validate();
  return dd;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  double k1 = 0.0, k2 = 0.0;
  std::int64_t triangles = 0;  // counted 3x (once per corner pair scan)
  std::int64_t wedges = 0;
  for (int v = 0; v < s.node_count; ++v) {
    double k = g.degree(v);
    k1 += k;
    k2 += k * k;
    wedges += g.degree(v) * static_cast<std::int64_t>(g.degree(v) - 1) / 2;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) ++triangles;
      }
    }
  }
  s.mean_degree = k1 / s.node_count;
  s.second_moment = k2 / s.node_count;
  s.clustering = wedges > 0 ? static_cast<double>(triangles) / static_cast<double>(wedges) : 0.0;
  return s;
}

}  // namespace netcover
