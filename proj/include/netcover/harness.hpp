#ifndef NETCOVER_HARNESS_HPP
#define NETCOVER_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "netcover/policies.hpp"
#include "netcover/predictors.hpp"

namespace netcover {

// Per-step aggregates over R seeded runs. Runs that exhaust the graph early
// are padded with their terminal values so the table stays rectangular.
struct TraceStats {
  int runs = 0;
  std::uint64_t base_seed = 0;
  int node_count = 0;
  std::vector<double> mean_cover;             // index t-1, t = 1..budget
  std::vector<double> std_cover;              // sample std, R-1 denominator
  std::vector<double> mean_frontier;
  std::vector<double> mean_recruited_degree;

  int steps() const { return static_cast<int>(mean_cover.size()); }
};

struct ErrorReport {
  double max_relative_error = 0.0;  // normalized by N
  double rmse = 0.0;
  std::vector<std::pair<int, double>> residuals;  // (t, predicted - empirical)
  int t_lo = 0;
  int t_hi = 0;
};

// R independent runs with seeds base_seed + i. `jobs` <= 0 picks the
// available hardware parallelism; the result does not depend on jobs.
TraceStats run_experiment(const Graph& g, const Policy& policy, int budget,
                          int runs, std::uint64_t base_seed, int jobs = 0);

ErrorReport compare_curves(const TraceStats& empirical, const PredictorCurve& predicted,
                           int t_lo, int t_hi, double n_norm);

// CSV, 6 significant digits, newline-terminated.
void export_csv(const TraceStats& stats, std::ostream& out);
void export_csv(const PredictorCurve& curve, std::ostream& out);
void export_csv(const ErrorReport& report, std::ostream& out);
void export_csv_file(const TraceStats& stats, const std::string& path);
void export_csv_file(const PredictorCurve& curve, const std::string& path);
void export_csv_file(const ErrorReport& report, const std::string& path);

// Parse back files written by export_csv (used by `compare`).
TraceStats import_stats_csv(const std::string& path);
PredictorCurve import_curve_csv(const std::string& path);

}  // namespace netcover

#endif
