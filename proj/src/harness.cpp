#include "netcover/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace netcover {

namespace {

std::string format6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void pad_to(std::vector<double>& column, int budget) {
  if (column.empty()) throw std::logic_error("empty trace column");
  column.resize(budget, column.back());
}

}  // namespace

TraceStats run_experiment(const Graph& g, const Policy& policy, int budget,
                          int runs, std::uint64_t base_seed, int jobs) {
  if (runs < 1) throw std::runtime_error("runs must be >= 1");
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, runs);

  struct RunColumns {
    std::vector<double> cover, frontier, degree;
  };
  std::vector<RunColumns> per_run(runs);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= runs || failed.load()) return;
      try {
        Trace trace = run_policy(g, policy, budget, base_seed + static_cast<std::uint64_t>(i));
        RunColumns cols;
        cols.cover.assign(trace.cover.begin(), trace.cover.end());
        cols.frontier.assign(trace.frontier.begin(), trace.frontier.end());
        cols.degree.assign(trace.recruited_degree.begin(), trace.recruited_degree.end());
        pad_to(cols.cover, budget);
        pad_to(cols.frontier, budget);
        pad_to(cols.degree, budget);
        per_run[i] = std::move(cols);
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        failed.store(true);
        failure = "run " + std::to_string(i) + ": " + e.what();
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error(failure);

  TraceStats out;
  out.runs = runs;
  out.base_seed = base_seed;
  out.node_count = g.node_count();
  out.mean_cover.assign(budget, 0.0);
  out.std_cover.assign(budget, 0.0);
  out.mean_frontier.assign(budget, 0.0);
  out.mean_recruited_degree.assign(budget, 0.0);
  for (int t = 0; t < budget; ++t) {
    double sum = 0.0, sum2 = 0.0, fsum = 0.0, dsum = 0.0;
    for (int i = 0; i < runs; ++i) {
      double c = per_run[i].cover[t];
      sum += c;
      sum2 += c * c;
      fsum += per_run[i].frontier[t];
      dsum += per_run[i].degree[t];
    }
    double mean = sum / runs;
    out.mean_cover[t] = mean;
    out.mean_frontier[t] = fsum / runs;
    out.mean_recruited_degree[t] = dsum / runs;
    if (runs > 1) {
      double var = (sum2 - runs * mean * mean) / (runs - 1);
      out.std_cover[t] = std::sqrt(std::max(0.0, var));
    }
  }
  return out;
}

ErrorReport compare_curves(const TraceStats& empirical, const PredictorCurve& predicted,
                           int t_lo, int t_hi, double n_norm) {
  int lo = std::max(t_lo, 1);
  int hi = std::min({t_hi, empirical.steps(), predicted.horizon()});
  if (lo > hi) throw std::runtime_error("empty comparison range");
  if (n_norm <= 0.0) throw std::runtime_error("normalization must be positive");

  ErrorReport report;
  report.t_lo = lo;
  report.t_hi = hi;
  double sq = 0.0;
  for (int t = lo; t <= hi; ++t) {
    double residual = predicted.at(t) - empirical.mean_cover[t - 1];
    report.residuals.emplace_back(t, residual);
    report.max_relative_error = std::max(report.max_relative_error, std::abs(residual) / n_norm);
    sq += residual * residual;
  }
  report.rmse = std::sqrt(sq / report.residuals.size());
  return report;
}

void export_csv(const TraceStats& stats, std::ostream& out) {
  out << "t,mean_cover,std_cover,mean_frontier,mean_recruited_degree\n";
  for (int t = 1; t <= stats.steps(); ++t) {
    out << t << ',' << format6(stats.mean_cover[t - 1]) << ','
        << format6(stats.std_cover[t - 1]) << ',' << format6(stats.mean_frontier[t - 1]) << ','
        << format6(stats.mean_recruited_degree[t - 1]) << '\n';
  }
}

void export_csv(const PredictorCurve& curve, std::ostream& out) {
  out << "t,value\n";
  for (int t = 0; t <= curve.horizon(); ++t) {
    out << t << ',' << format6(curve.at(t)) << '\n';
  }
}

void export_csv(const ErrorReport& report, std::ostream& out) {
  out << "t,residual\n";
  for (auto [t, r] : report.residuals) out << t << ',' << format6(r) << '\n';
}

namespace {

template <typename T>
void write_file(const T& value, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  export_csv(value, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::vector<double>> parse_csv(const std::string& path, std::size_t columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != columns) throw std::runtime_error("bad csv row in " + path);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void export_csv_file(const TraceStats& stats, const std::string& path) { write_file(stats, path); }
void export_csv_file(const PredictorCurve& curve, const std::string& path) { write_file(curve, path); }
void export_csv_file(const ErrorReport& report, const std::string& path) { write_file(report, path); }

TraceStats import_stats_csv(const std::string& path) {
  TraceStats stats;
  for (const auto& row : parse_csv(path, 5)) {
    stats.mean_cover.push_back(row[1]);
    stats.std_cover.push_back(row[2]);
    stats.mean_frontier.push_back(row[3]);
    stats.mean_recruited_degree.push_back(row[4]);
  }
  if (stats.mean_cover.empty()) throw std::runtime_error("no rows in " + path);
  return stats;
}

PredictorCurve import_curve_csv(const std::string& path) {
  PredictorCurve curve;
  curve.model = "csv";
  auto rows = parse_csv(path, 2);
  if (rows.empty()) throw std::runtime_error("no rows in " + path);
  // Rows are t = first..last contiguous; shift to values[t].
  int first = static_cast<int>(rows.front()[0]);
  curve.values.assign(first, rows.front()[1]);
  for (const auto& row : rows) curve.values.push_back(row[1]);
  return curve;
}

}  // namespace netcover
