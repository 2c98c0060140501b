#ifndef NETCOVER_PREDICTORS_HPP
#define NETCOVER_PREDICTORS_HPP

#include <string>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

// Analytically computed sequence over t = 0..T.
struct PredictorCurve {
  std::string model;
  std::vector<double> values;  // values[t]

  int horizon() const { return static_cast<int>(values.size()) - 1; }
  double at(int t) const { return values.at(t); }
};

// b_k(t) trajectory of the SI mean-field recursion.
struct MeanFieldState {
  int t = 0;
  std::vector<double> b;  // indexed by degree k

  double recruited_mean(const DegreeDistribution& dd) const;  // sum N p_k b_k
};

struct SiPrediction {
  std::vector<MeanFieldState> trajectory;
  PredictorCurve frontier;  // <N(B(t))>
  PredictorCurve cover;     // <B(t)> + <N(B(t))>, same-index pairing
};

// Degree distributions of nodes with at least d recruited neighbors, built by
// the stub-promotion recursion. Truncated where the denominator <k> - d is no
// longer positive.
struct ExcessTable {
  std::vector<std::vector<double>> zeta;   // zeta[d][k]
  std::vector<double> mean_degree;         // <k> under zeta[d]
  std::vector<double> excess;              // <k - d> under zeta[d], clamped >= 0
  int truncated_at = -1;                   // first invalid d, or -1
};

// --- Uniform node sampling ---------------------------------------------

// Cover curve N - N * sum_k p_k (1 - (k+1)/N)^t.
PredictorCurve uniform_replace_curve(const DegreeDistribution& dd, int n, int horizon);
// Taylor form: expected cover ≈ (<k>+1) t.
double uniform_replace_linear(const DegreeDistribution& dd, int n, int t);
// Without replacement: product recursion driven by <W(h)>.
PredictorCurve uniform_noreplace_curve(const DegreeDistribution& dd, int n, int horizon);

// --- Random walks --------------------------------------------------------

// Exact cover via taboo transition matrices; t payments are the walk
// positions X_0..X_{t-1} from a stationary start. Guarded to N <= 500.
PredictorCurve rw_exact_taboo(const Graph& g, int horizon);
// Stationary i.i.d. approximation with alpha_v = (k_v + sum_j k_j) / 2M.
PredictorCurve rw_steady_curve(const Graph& g, int horizon);
// Small-t linear form t (<k^2> + <k>) / <k>.
double rw_linear(const Graph& g, int t);

struct RwnrPrediction {
  PredictorCurve cover;
  PredictorCurve undiscovered_edges;  // <Z(t)>
};
RwnrPrediction rwnr_curve(const Graph& g, int horizon);

// --- SI mean field -------------------------------------------------------

SiPrediction si_meanfield(const DegreeDistribution& dd, int n, int horizon);

// --- Excess degrees ------------------------------------------------------

ExcessTable excess_recursion(const DegreeDistribution& zeta, int d_max);

// Falling-factorial moment ratio F_{d+1}/F_d == <k - d> under zeta^(d).
// Throws when F_d vanishes.
double excess_moment_ratio(const DegreeDistribution& zeta, int d);

// Binomial closed form (N - d - 1) q.
double er_excess(int n, double q, int d);

// zeta_k ∝ k^(-tau) C_t^k. tau == 1 uses the closed form C_t d / (1 - C_t);
// other tau fall back to the moment ratio on the truncated series.
double powerlaw_excess(double c_t, double tau, int d);
// tau == 2 series Gamma_d, summed directly.
double gamma_d_tau2(double c_t, int d);
// Li_s(x) by series; Li_1 via -log(1-x).
double polylog(double s, double x);

// Diagnostic only: the N_d-ratio corrected <k | d> from observed frontier
// counts. MEED itself uses the simplified <k - d> form.
double corrected_conditional_degree(const ExcessTable& table, int d,
                                    double n_d, double n_d_plus_1);

// --- Grid BFS ------------------------------------------------------------

// Per-boundary-node new-node yield at BFS ring t: 1 + 1/t in 2D,
// (1 + 2(t+1)^2) / (1 + 2 t^2) in 3D.
double grid_bfs_yield(int dim, int t);

}  // namespace netcover

#endif
