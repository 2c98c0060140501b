#include "netcover/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netcover {

namespace {

constexpr double kSeriesTolerance = 1e-10;
constexpr long kSeriesTermCap = 1000000;

}  // namespace

double MeanFieldState::recruited_mean(const DegreeDistribution& dd) const {
  double total = 0.0;
  for (std::size_t k = 1; k < b.size(); ++k) total += dd.node_count * dd.mass[k] * b[k];
  return total;
}

PredictorCurve uniform_replace_curve(const DegreeDistribution& dd, int n, int horizon) {
  if (horizon < 1) throw std::runtime_error("horizon must be >= 1");
  for (std::size_t k = 1; k < dd.mass.size(); ++k) {
    if (dd.mass[k] > 0.0 && static_cast<int>(k) + 1 > n) {
      throw std::runtime_error("degree distribution inconsistent with N");
    }
  }
  PredictorCurve curve{"uniform", std::vector<double>(horizon + 1)};
  // <W(t)> = N sum_k p_k (1 - (k+1)/N)^t; report cover N - <W(t)>.
  std::vector<double> factor_pow(dd.mass.size(), 1.0);
  for (int t = 0; t <= horizon; ++t) {
    double w = 0.0;
    for (std::size_t k = 1; k < dd.mass.size(); ++k) {
      if (dd.mass[k] <= 0.0) continue;
      w += n * dd.mass[k] * factor_pow[k];
    }
    curve.values[t] = n - w;
    for (std::size_t k = 1; k < dd.mass.size(); ++k) {
      factor_pow[k] *= 1.0 - (static_cast<double>(k) + 1.0) / n;
    }
  }
  return curve;
}

double uniform_replace_linear(const DegreeDistribution& dd, int n, int t) {
  (void)n;
  return (dd.mean() + 1.0) * t;
}

PredictorCurve uniform_noreplace_curve(const DegreeDistribution& dd, int n, int horizon) {
  if (horizon > n) throw std::runtime_error("horizon exceeds N without replacement");
  PredictorCurve curve{"uniform-nr", {}};
  // Product recursion driven by <W(h)>; factors clamped to [0,1], halted on
  // depletion.
  std::vector<double> product(dd.mass.size(), 1.0);
  double w = n;
  curve.values.push_back(0.0);  // t = 0: nothing covered
  for (int t = 1; t <= horizon; ++t) {
    double next_w = 0.0;
    for (std::size_t k = 1; k < dd.mass.size(); ++k) {
      if (dd.mass[k] <= 0.0) continue;
      double factor = 1.0 - (static_cast<double>(k) + 1.0) / w;
      factor = std::clamp(factor, 0.0, 1.0);
      product[k] *= factor;
      next_w += n * dd.mass[k] * product[k];
    }
    w = next_w;
    curve.values.push_back(n - w);
    if (w < 1.0) break;
  }
  return curve;
}

PredictorCurve rw_exact_taboo(const Graph& g, int horizon) {
  const int n = g.node_count();
  if (n > 500) throw std::runtime_error("rw_exact_taboo guarded to N <= 500; use rw_steady_curve");
  const double two_m = 2.0 * static_cast<double>(g.edge_count());

  PredictorCurve curve{"rw-exact", std::vector<double>(horizon + 1, 0.0)};
  std::vector<double> uncovered_at(horizon + 1, 0.0);
  uncovered_at[0] = n;

  // For each v: survival(t) = q * (taboo P)^(t-1) * 1 with q the stationary
  // distribution restricted outside the closed neighborhood of v. Payments
  // index the walk positions X_0..X_{t-1}.
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint8_t> taboo(n, 0);
    taboo[v] = 1;
    for (int u : g.neighbors(v)) taboo[u] = 1;
    std::vector<double> w(n, 0.0);
    for (int u = 0; u < n; ++u) {
      if (!taboo[u]) w[u] = g.degree(u) / two_m;
    }
    for (int t = 1; t <= horizon; ++t) {
      double survive = 0.0;
      for (int u = 0; u < n; ++u) survive += w[u];
      uncovered_at[t] += survive;
      if (t == horizon) break;
      std::vector<double> next(n, 0.0);
      for (int u = 0; u < n; ++u) {
        if (w[u] == 0.0) continue;
        double share = w[u] / g.degree(u);
        for (int x : g.neighbors(u)) {
          if (!taboo[x]) next[x] += share;
        }
      }
      w = std::move(next);
    }
  }
  for (int t = 0; t <= horizon; ++t) curve.values[t] = n - uncovered_at[t];
  return curve;
}

PredictorCurve rw_steady_curve(const Graph& g, int horizon) {
  const int n = g.node_count();
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> alpha(n);
  for (int v = 0; v < n; ++v) {
    double second = g.degree(v);
    for (int u : g.neighbors(v)) second += g.degree(u);
    alpha[v] = std::min(1.0, second / two_m);
  }
  PredictorCurve curve{"rw-steady", std::vector<double>(horizon + 1)};
  std::vector<double> pow(n, 1.0);
  for (int t = 0; t <= horizon; ++t) {
    double uncovered = 0.0;
    for (int v = 0; v < n; ++v) uncovered += pow[v];
    curve.values[t] = n - uncovered;
    for (int v = 0; v < n; ++v) pow[v] *= 1.0 - alpha[v];
  }
  return curve;
}

double rw_linear(const Graph& g, int t) {
  GraphStats s = stats(g);
  return t * (s.second_moment + s.mean_degree) / s.mean_degree;
}

RwnrPrediction rwnr_curve(const Graph& g, int horizon) {
  const int n = g.node_count();
  const std::int64_t m = g.edge_count();

  std::vector<double> node_weight(n);  // k_v + sum of neighbor degrees
  for (int v = 0; v < n; ++v) {
    double w = g.degree(v);
    for (int u : g.neighbors(v)) w += g.degree(u);
    node_weight[v] = w;
  }
  std::vector<double> edge_weight;  // k_u + k_v per edge
  edge_weight.reserve(m);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) {
      if (v < u) edge_weight.push_back(g.degree(v) + g.degree(u));
    }
  }

  RwnrPrediction out;
  out.cover.model = "rwnr";
  out.undiscovered_edges.model = "rwnr-edges";
  std::vector<double> node_prod(n, 1.0);
  std::vector<double> edge_prod(edge_weight.size(), 1.0);
  double z = static_cast<double>(m);
  out.undiscovered_edges.values.push_back(z);
  out.cover.values.push_back(0.0);
  for (int t = 1; t <= horizon; ++t) {
    // Apply the factor with Z(t-1), then read off Z(t) and cover(t).
    double next_z = 0.0;
    for (std::size_t e = 0; e < edge_prod.size(); ++e) {
      double factor = std::clamp(1.0 - edge_weight[e] / (2.0 * z), 0.0, 1.0);
      edge_prod[e] *= factor;
      next_z += edge_prod[e];
    }
    double uncovered = 0.0;
    for (int v = 0; v < n; ++v) {
      double factor = std::clamp(1.0 - node_weight[v] / (2.0 * z), 0.0, 1.0);
      node_prod[v] *= factor;
      uncovered += node_prod[v];
    }
    z = next_z;
    out.undiscovered_edges.values.push_back(z);
    out.cover.values.push_back(n - uncovered);
    if (z < 1.0) break;
  }
  return out;
}

SiPrediction si_meanfield(const DegreeDistribution& dd, int n, int horizon) {
  if (horizon > n - 1) throw std::runtime_error("horizon exceeds N - 1");
  const int k_max = dd.max_degree();
  const double two_m = n * dd.mean();

  // p_kh = 1 - (1 - h/2M)^k: probability that a degree-k node touches a
  // given random degree-h node.
  std::vector<std::vector<double>> p_kh(k_max + 1, std::vector<double>(k_max + 1, 0.0));
  for (int k = 1; k <= k_max; ++k) {
    for (int h = 1; h <= k_max; ++h) {
      p_kh[k][h] = 1.0 - std::pow(1.0 - h / two_m, k);
    }
  }

  SiPrediction out;
  out.frontier.model = "si-frontier";
  out.cover.model = "si";

  MeanFieldState state;
  state.t = 0;
  state.b.assign(k_max + 1, 1.0 / n);
  state.b[0] = 0.0;

  std::vector<double> frontier(horizon + 1, 0.0);
  // Eq. for the observed set yields the frontier at index t+1 from b(t).
  auto frontier_from = [&](const std::vector<double>& b) {
    double total = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      if (dd.mass[k] <= 0.0) continue;
      double log_none = 0.0;
      for (int h = 1; h <= k_max; ++h) {
        if (dd.mass[h] <= 0.0) continue;
        log_none += n * dd.mass[h] * std::log1p(-std::min(1.0, b[h] * p_kh[k][h]));
      }
      double upsilon = (1.0 - b[k]) * (1.0 - std::exp(log_none));
      total += n * dd.mass[k] * upsilon;
    }
    return total;
  };

  out.trajectory.push_back(state);
  for (int t = 0; t < horizon; ++t) {
    frontier[t + 1] = frontier_from(state.b);
    double denom = 0.0;
    for (int h = 1; h <= k_max; ++h) denom += h * dd.mass[h] * (1.0 - state.b[h]);
    if (denom < 1e-12) {
      frontier.resize(t + 2);
      break;
    }
    MeanFieldState next = state;
    next.t = t + 1;
    for (int k = 1; k <= k_max; ++k) {
      next.b[k] = state.b[k] + k * (1.0 - state.b[k]) / (n * denom);
    }
    state = std::move(next);
    out.trajectory.push_back(state);
  }

  const int steps = static_cast<int>(frontier.size()) - 1;
  out.frontier.values.assign(frontier.begin(), frontier.end());
  out.cover.values.resize(steps + 1);
  for (int t = 0; t <= steps; ++t) {
    double recruited = 1.0 + t;  // the recursion adds exactly one per step
    out.cover.values[t] = recruited + frontier[t];
  }
  return out;
}

ExcessTable excess_recursion(const DegreeDistribution& zeta, int d_max) {
  zeta.validate();
  if (d_max < 1) throw std::runtime_error("d_max must be >= 1");
  constexpr double kEps = 1e-12;

  ExcessTable table;
  table.zeta.push_back(zeta.mass);
  for (int d = 0; d <= d_max; ++d) {
    const auto& cur = table.zeta[d];
    double mean = 0.0;
    for (std::size_t k = 0; k < cur.size(); ++k) mean += static_cast<double>(k) * cur[k];
    table.mean_degree.push_back(mean);
    table.excess.push_back(std::max(0.0, mean - d));
    if (d == d_max) break;
    double denom = mean - d;
    if (denom <= kEps) {
      table.truncated_at = d + 1;
      break;
    }
    std::vector<double> next(cur.size(), 0.0);
    double total = 0.0;
    for (std::size_t k = d; k < cur.size(); ++k) {
      next[k] = (static_cast<double>(k) - d) * cur[k] / denom;
      total += next[k];
    }
    // Guard against drift; the recursion is normalized analytically.
    if (std::abs(total - 1.0) > 1e-9) throw std::logic_error("excess recursion lost mass");
    for (double& x : next) x /= total;
    table.zeta.push_back(std::move(next));
  }
  return table;
}

double excess_moment_ratio(const DegreeDistribution& zeta, int d) {
  if (d < 0) throw std::runtime_error("d must be >= 0");
  double f_d = 0.0, f_d1 = 0.0;
  for (std::size_t k = 0; k < zeta.mass.size(); ++k) {
    double falling = 1.0;
    for (int i = 0; i < d; ++i) falling *= static_cast<double>(k) - i;
    if (static_cast<int>(k) >= d) f_d += falling * zeta.mass[k];
    if (static_cast<int>(k) >= d + 1) f_d1 += falling * (static_cast<double>(k) - d) * zeta.mass[k];
  }
  if (f_d <= 0.0) throw std::runtime_error("falling-factorial moment F_d vanishes");
  return f_d1 / f_d;
}

double er_excess(int n, double q, int d) {
  if (!(q > 0.0 && q < 1.0)) throw std::runtime_error("q out of range");
  if (d >= n - 1) throw std::runtime_error("d too large");
  return (n - d - 1) * q;
}

double powerlaw_excess(double c_t, double tau, int d) {
  if (!(c_t > 0.0 && c_t < 1.0)) throw std::runtime_error("requires 0 < C_t < 1");
  if (tau == 1.0) return c_t * d / (1.0 - c_t);
  // Truncated zeta_k ∝ k^(-tau) C_t^k, cut where terms drop below 1e-14.
  std::vector<double> mass{0.0};
  double total = 0.0;
  for (long k = 1; k <= kSeriesTermCap; ++k) {
    double term = std::pow(static_cast<double>(k), -tau) * std::pow(c_t, static_cast<double>(k));
    mass.push_back(term);
    total += term;
    if (term < 1e-14 && k > d + 1) break;
  }
  for (double& m : mass) m /= total;
  DegreeDistribution zeta{std::move(mass), 1};
  return excess_moment_ratio(zeta, d);
}

double gamma_d_tau2(double c_t, int d) {
  if (!(c_t > 0.0 && c_t < 1.0)) throw std::runtime_error("requires 0 < C_t < 1");
  // Direct summation; term ratios avoid explicit factorials.
  double num_term = c_t * std::tgamma(static_cast<double>(d + 2)) / (d + 2);  // m = 0
  double den_term = std::tgamma(static_cast<double>(d + 1)) / (d + 1);
  double num = num_term, den = den_term;
  for (long m = 0; m < kSeriesTermCap; ++m) {
    double md = static_cast<double>(m + d);
    num_term *= c_t * (md + 2.0) * (md + 2.0) / ((md + 3.0) * (m + 1.0));
    den_term *= c_t * (md + 1.0) * (md + 1.0) / ((md + 2.0) * (m + 1.0));
    num += num_term;
    den += den_term;
    if (num_term < kSeriesTolerance * num && den_term < kSeriesTolerance * den) {
      return num / den;
    }
  }
  throw std::runtime_error("Gamma_d series did not converge");
}

double polylog(double s, double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::runtime_error("polylog requires |x| < 1");
  if (s == 1.0) return -std::log1p(-x);
  double total = 0.0;
  double xk = 1.0;
  for (long k = 1; k <= kSeriesTermCap; ++k) {
    xk *= x;
    double term = xk / std::pow(static_cast<double>(k), s);
    total += term;
    if (std::abs(term) < kSeriesTolerance) return total;
  }
  throw std::runtime_error("polylog series did not converge");
}

double corrected_conditional_degree(const ExcessTable& table, int d,
                                    double n_d, double n_d_plus_1) {
  if (d + 1 >= static_cast<int>(table.mean_degree.size())) {
    throw std::runtime_error("table truncated before d + 1");
  }
  double gap = n_d - n_d_plus_1;
  if (gap <= 0.0) throw std::runtime_error("N_d must exceed N_{d+1}");
  return (n_d / gap) * table.mean_degree[d] - (n_d_plus_1 / gap) * table.mean_degree[d + 1];
}

double grid_bfs_yield(int dim, int t) {
  if (t < 1) throw std::runtime_error("t must be >= 1");
  if (dim == 2) return 1.0 + 1.0 / t;
  if (dim == 3) {
    double tt = static_cast<double>(t);
    return (1.0 + 2.0 * (tt + 1.0) * (tt + 1.0)) / (1.0 + 2.0 * tt * tt);
  }
  throw std::runtime_error("dim must be 2 or 3");
}

}  // namespace netcover
