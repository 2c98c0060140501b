// netcover command-line front end. Talks to the library only through the C
// interface so it doubles as a smoke test for the shared-library boundary.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netcover/netcover.h"

namespace {

[[noreturn]] void die(const char* context, nc_status st) {
  std::fprintf(stderr, "error: %s: %s (status %d)\n", context, nc_last_error(), int(st));
  std::exit(1);
}

void check(nc_status st, const char* context) {
  if (st != NC_OK) die(context, st);
}

// Options shared by the subcommands that need a graph.
struct GraphSource {
  std::string graph;  // file path, or inline spec if it contains '='
  std::string model;  // model name, or full spec if it contains '='
  std::int64_t n = 0;
  double q = 0.0;
  double tau = 0.0;
  std::string dims;
  bool periodic = false;
  std::uint64_t seed = 1;
  bool lcc = false;
  bool do_rewire = false;

  std::string spec() const {
    if (model.find('=') != std::string::npos) return model;
    std::string s = "model=" + model;
    if (model == "star") {
      s += ",leaves=" + std::to_string(n);
    } else if (n > 0) {
      s += ",n=" + std::to_string(n);
    }
    if (model == "er") s += ",q=" + std::to_string(q);
    if (model == "powerlaw") s += ",tau=" + std::to_string(tau);
    if (model == "lattice") {
      s += ",dims=" + dims;
      if (periodic) s += ",periodic=1";
    }
    return s;
  }

  nc_graph* open() const {
    nc_graph* g = nullptr;
    if (!graph.empty()) {
      if (graph.find('=') != std::string::npos) {
        check(nc_graph_from_spec(graph.c_str(), seed, &g), "graph spec");
      } else {
        check(nc_graph_load_file(graph.c_str(), &g), graph.c_str());
      }
    } else if (!model.empty()) {
      check(nc_graph_from_spec(spec().c_str(), seed, &g), "graph spec");
    } else {
      std::fprintf(stderr, "error: no graph given (use --graph or --model)\n");
      std::exit(1);
    }
    if (lcc) {
      nc_graph* sub = nullptr;
      check(nc_graph_largest_component(g, &sub), "largest component");
      nc_graph_free(g);
      g = sub;
    }
    if (do_rewire) {
      nc_graph* rw = nullptr;
      check(nc_graph_rewire(g, seed + 0x9e3779b9u, &rw), "rewire");
      nc_graph_free(g);
      g = rw;
    }
    return g;
  }
};

void add_graph_flags(CLI::App* cmd, GraphSource* src, bool with_seed = true,
                     bool with_model = true) {
  cmd->add_option("--graph", src->graph, "edge-list file, or inline spec like model=ring,n=1000");
  if (with_model) {
    cmd->add_option("--model", src->model,
                    "generator name (ring star er lattice powerlaw) or full spec");
  }
  cmd->add_option("--n", src->n, "node count (leaf count for star)");
  cmd->add_option("--q", src->q, "edge probability (er)");
  cmd->add_option("--tau", src->tau, "degree exponent (powerlaw)");
  cmd->add_option("--dims", src->dims, "lattice sides, e.g. 100x100 or 22x22x22");
  cmd->add_flag("--periodic", src->periodic, "wrap lattice edges (torus)");
  cmd->add_flag("--lcc", src->lcc, "restrict to the largest connected component");
  cmd->add_flag("--rewire", src->do_rewire, "degree-preserving randomization after generation");
  if (with_seed) cmd->add_option("--seed", src->seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network covering laboratory"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flag defaults from a key=value file");

  GraphSource gen_src, stats_src, sim_src, pred_src;
  std::string out;

  auto* generate = app.add_subcommand("generate", "emit an edge list from a generator spec");
  add_graph_flags(generate, &gen_src);
  generate->add_option("--out", out, "output path (default stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "print graph statistics as key=value lines");
  add_graph_flags(stats_cmd, &stats_src);

  std::string policy = "bfs";
  std::int64_t budget = 100, runs = 1;
  std::uint64_t sim_seed = 1;
  int jobs = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo runs of a covering policy");
  add_graph_flags(simulate, &sim_src, /*with_seed=*/false);
  simulate->add_option("--policy", policy,
                       "bfs dfs rw rwnr si mod meed oracle maxdeg uniform uniform-nr");
  simulate->add_option("--budget", budget, "payment budget per run")->check(CLI::PositiveNumber);
  simulate->add_option("--runs", runs, "independent runs")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed, "base seed; run i uses seed+i");
  simulate->add_option("--jobs", jobs, "worker threads (<=0: all cores)");
  simulate->add_option("--out", out, "CSV output path")->required();

  std::string model;
  std::int64_t horizon = 100;
  auto* predict = app.add_subcommand("predict", "analytic cover-size curve");
  add_graph_flags(predict, &pred_src, /*with_seed=*/true, /*with_model=*/false);
  predict->add_option("--model,--predictor", model,
                      "uniform uniform-nr rw-exact rw-steady rwnr rwnr-edges si si-frontier")
      ->required();
  predict->add_option("--horizon", horizon, "steps to predict")->check(CLI::PositiveNumber);
  predict->add_option("--out", out, "CSV output path")->required();

  std::string empirical, predicted;
  std::int64_t t_lo = 1, t_hi = 1 << 30;
  double n_norm = 0.0;
  auto* compare = app.add_subcommand("compare", "prediction vs simulation residuals");
  compare->add_option("--empirical", empirical, "CSV from simulate")->required();
  compare->add_option("--predicted", predicted, "CSV from predict")->required();
  compare->add_option("--t-lo", t_lo, "first step to compare");
  compare->add_option("--t-hi", t_hi, "last step to compare");
  compare->add_option("--n", n_norm, "normalization for relative error (default: max empirical cover)");
  compare->add_option("--out", out, "residual CSV output path");

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    // predict reuses --model for the predictor; generate owns the generator.
    nc_graph* g = gen_src.open();
    const char* path = out.empty() ? "/dev/stdout" : out.c_str();
    check(nc_graph_write_edge_list(g, path), path);
    nc_graph_free(g);
    return 0;
  }

  if (stats_cmd->parsed()) {
    nc_graph* g = stats_src.open();
    double mean = 0, second = 0, clustering = 0;
    check(nc_graph_stats(g, &mean, &second, &clustering), "stats");
    std::printf("nodes=%" PRId64 "\n", nc_graph_node_count(g));
    std::printf("edges=%" PRId64 "\n", nc_graph_edge_count(g));
    std::printf("mean_degree=%.6g\n", mean);
    std::printf("second_moment=%.6g\n", second);
    std::printf("clustering=%.6g\n", clustering);
    nc_graph_free(g);
    return 0;
  }

  if (simulate->parsed()) {
    nc_graph* g = sim_src.open();
    nc_trace_stats* st = nullptr;
    check(nc_simulate(g, policy.c_str(), budget, runs, sim_seed, jobs, &st), "simulate");
    check(nc_stats_write_csv(st, out.c_str()), out.c_str());
    double mean = 0, sd = 0;
    check(nc_stats_final(st, &mean, &sd), "stats");
    std::printf("final cover %.6g +- %.6g over %" PRId64 " runs (%" PRId64 " steps)\n",
                mean, sd, runs, nc_stats_steps(st));
    nc_stats_free(st);
    nc_graph_free(g);
    return 0;
  }

  if (predict->parsed()) {
    nc_graph* g = pred_src.open();
    nc_curve* c = nullptr;
    check(nc_predict(g, model.c_str(), horizon, &c), "predict");
    check(nc_curve_write_csv(c, out.c_str()), out.c_str());
    nc_curve_free(c);
    nc_graph_free(g);
    return 0;
  }

  // compare
  if (n_norm <= 0.0) {
    // No graph at hand here; scale relative error by the largest empirical
    // cover, which equals N once the run covers the graph.
    FILE* f = std::fopen(empirical.c_str(), "rb");
    if (!f) {
      std::fprintf(stderr, "error: cannot open %s\n", empirical.c_str());
      return 1;
    }
    char line[512];
    double best = 0.0;
    if (std::fgets(line, sizeof line, f)) {
      while (std::fgets(line, sizeof line, f)) {
        double cover = 0.0;
        if (std::sscanf(line, "%*d,%lf", &cover) == 1 && cover > best) best = cover;
      }
    }
    std::fclose(f);
    n_norm = best > 0.0 ? best : 1.0;
  }
  nc_error_report* report = nullptr;
  check(nc_compare_csv(empirical.c_str(), predicted.c_str(), t_lo, t_hi, n_norm, &report),
        "compare");
  if (!out.empty()) check(nc_report_write_csv(report, out.c_str()), out.c_str());
  std::printf("max_relative_error=%.6g rmse=%.6g (norm %.6g)\n",
              nc_report_max_relative_error(report), nc_report_rmse(report), n_norm);
  nc_report_free(report);
  return 0;
}
