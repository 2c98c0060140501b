#include "netcover/netcover.h"

#include <cstdio>
#include <cstring>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "netcover/graph.hpp"
#include "netcover/harness.hpp"
#include "netcover/policies.hpp"
#include "netcover/predictors.hpp"

using netcover::Graph;

struct nc_graph {
  Graph g;
};
struct nc_trace_stats {
  netcover::TraceStats s;
};
struct nc_curve {
  netcover::PredictorCurve c;
};
struct nc_error_report {
  netcover::ErrorReport r;
};

namespace {

thread_local std::string g_last_error = "no error";

struct capi_error : std::runtime_error {
  nc_status status;
  capi_error(nc_status st, const std::string& msg) : std::runtime_error(msg), status(st) {}
};

// Runs fn, translating exceptions into status codes + nc_last_error().
template <typename Fn>
nc_status guarded(Fn&& fn) {
  try {
    fn();
    return NC_OK;
  } catch (const capi_error& e) {
    g_last_error = e.what();
    return e.status;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return NC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw capi_error(NC_ERR_INVALID_ARGUMENT, what);
}

std::map<std::string, std::string> parse_spec(const std::string& spec) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw capi_error(NC_ERR_PARSE, "bad spec item '" + item + "' (want key=value)");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  if (!kv.count("model")) throw capi_error(NC_ERR_PARSE, "spec missing model=");
  return kv;
}

long spec_long(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw capi_error(NC_ERR_PARSE, "spec missing " + key + "=");
  try {
    std::size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw capi_error(NC_ERR_PARSE, "spec: bad integer for " + key);
  }
}

double spec_double(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw capi_error(NC_ERR_PARSE, "spec missing " + key + "=");
  try {
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw capi_error(NC_ERR_PARSE, "spec: bad number for " + key);
  }
}

Graph graph_from_spec(const std::string& spec, std::uint64_t seed) {
  auto kv = parse_spec(spec);
  const std::string& model = kv.at("model");
  if (model == "ring") {
    return netcover::ring(static_cast<int>(spec_long(kv, "n")));
  }
  if (model == "star") {
    return netcover::star(static_cast<int>(spec_long(kv, "leaves")));
  }
  if (model == "er") {
    return netcover::erdos_renyi(static_cast<int>(spec_long(kv, "n")),
                                 spec_double(kv, "q"), seed);
  }
  if (model == "lattice") {
    auto it = kv.find("dims");
    if (it == kv.end()) throw capi_error(NC_ERR_PARSE, "spec missing dims=");
    std::vector<int> dims;
    std::stringstream ss(it->second);
    std::string side;
    while (std::getline(ss, side, 'x')) {
      try {
        dims.push_back(std::stoi(side));
      } catch (...) {
        throw capi_error(NC_ERR_PARSE, "spec: bad dims '" + it->second + "'");
      }
    }
    bool periodic = kv.count("periodic") && spec_long(kv, "periodic") != 0;
    return netcover::lattice(dims, periodic);
  }
  if (model == "powerlaw") {
    int n = static_cast<int>(spec_long(kv, "n"));
    double tau = spec_double(kv, "tau");
    int k_max = kv.count("kmax") ? static_cast<int>(spec_long(kv, "kmax")) : 0;
    auto degrees = netcover::powerlaw_degrees(n, tau, k_max, seed);
    return netcover::configuration_model(std::move(degrees), seed + 1);
  }
  throw capi_error(NC_ERR_PARSE, "unknown model '" + model + "'");
}

}  // namespace

extern "C" {

const char* nc_last_error(void) { return g_last_error.c_str(); }

nc_status nc_graph_load_file(const char* path, nc_graph** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new nc_graph{netcover::load_edge_list_file(path)};
  });
}

nc_status nc_graph_from_spec(const char* spec, uint64_t seed, nc_graph** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new nc_graph{graph_from_spec(spec, seed)};
  });
}

nc_status nc_graph_largest_component(const nc_graph* g, nc_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new nc_graph{netcover::largest_component(g->g)};
  });
}

nc_status nc_graph_rewire(const nc_graph* g, uint64_t seed, nc_graph** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new nc_graph{netcover::rewire(g->g, seed)};
  });
}

void nc_graph_free(nc_graph* g) { delete g; }

int64_t nc_graph_node_count(const nc_graph* g) { return g ? g->g.node_count() : 0; }
int64_t nc_graph_edge_count(const nc_graph* g) { return g ? g->g.edge_count() : 0; }

nc_status nc_graph_stats(const nc_graph* g, double* mean_degree,
                         double* second_moment, double* clustering) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    auto st = netcover::stats(g->g);
    if (mean_degree) *mean_degree = st.mean_degree;
    if (second_moment) *second_moment = st.second_moment;
    if (clustering) *clustering = st.clustering;
  });
}

nc_status nc_graph_write_edge_list(const nc_graph* g, const char* path) {
  return guarded([&] {
    require(g && path, "null argument");
    std::string text = g->g.to_edge_list();
    FILE* f = std::fopen(path, "wb");
    if (!f) throw capi_error(NC_ERR_IO, std::string("cannot write ") + path);
    std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
    int rc = std::fclose(f);
    if (written != text.size() || rc != 0) {
      throw capi_error(NC_ERR_IO, std::string("write failed: ") + path);
    }
  });
}

nc_status nc_simulate(const nc_graph* g, const char* policy, int64_t budget,
                      int64_t runs, uint64_t seed, int jobs, nc_trace_stats** out) {
  return guarded([&] {
    require(g && policy && out, "null argument");
    require(budget >= 1, "budget must be >= 1");
    require(runs >= 1, "runs must be >= 1");
    auto kind = netcover::policy_from_name(policy);
    if (!kind) throw capi_error(NC_ERR_INVALID_ARGUMENT, std::string("unknown policy '") + policy + "'");
    netcover::Policy p{*kind, nullptr};
    *out = new nc_trace_stats{netcover::run_experiment(
        g->g, p, static_cast<int>(budget), static_cast<int>(runs), seed, jobs)};
  });
}

int64_t nc_stats_steps(const nc_trace_stats* s) { return s ? s->s.steps() : 0; }

nc_status nc_stats_final(const nc_trace_stats* s, double* mean_cover, double* std_cover) {
  return guarded([&] {
    require(s && s->s.steps() > 0, "empty stats");
    if (mean_cover) *mean_cover = s->s.mean_cover.back();
    if (std_cover) *std_cover = s->s.std_cover.back();
  });
}

nc_status nc_stats_write_csv(const nc_trace_stats* s, const char* path) {
  return guarded([&] {
    require(s && path, "null argument");
    netcover::export_csv_file(s->s, path);
  });
}

void nc_stats_free(nc_trace_stats* s) { delete s; }

nc_status nc_predict(const nc_graph* g, const char* model, int64_t horizon,
                     nc_curve** out) {
  return guarded([&] {
    require(g && model && out, "null argument");
    require(horizon >= 1, "horizon must be >= 1");
    const int h = static_cast<int>(horizon);
    std::string m = model;
    netcover::PredictorCurve curve;
    if (m == "uniform") {
      curve = netcover::uniform_replace_curve(netcover::degree_distribution(g->g),
                                              g->g.node_count(), h);
    } else if (m == "uniform-nr") {
      curve = netcover::uniform_noreplace_curve(netcover::degree_distribution(g->g),
                                                g->g.node_count(), h);
    } else if (m == "rw-exact") {
      curve = netcover::rw_exact_taboo(g->g, h);
    } else if (m == "rw-steady") {
      curve = netcover::rw_steady_curve(g->g, h);
    } else if (m == "rwnr") {
      curve = netcover::rwnr_curve(g->g, h).cover;
    } else if (m == "rwnr-edges") {
      curve = netcover::rwnr_curve(g->g, h).undiscovered_edges;
    } else if (m == "si") {
      curve = netcover::si_meanfield(netcover::degree_distribution(g->g),
                                     g->g.node_count(), h).cover;
    } else if (m == "si-frontier") {
      curve = netcover::si_meanfield(netcover::degree_distribution(g->g),
                                     g->g.node_count(), h).frontier;
    } else {
      throw capi_error(NC_ERR_INVALID_ARGUMENT, "unknown model '" + m + "'");
    }
    *out = new nc_curve{std::move(curve)};
  });
}

int64_t nc_curve_size(const nc_curve* c) {
  return c ? static_cast<int64_t>(c->c.values.size()) : 0;
}

double nc_curve_value(const nc_curve* c, int64_t t) {
  if (!c || t < 0 || t >= static_cast<int64_t>(c->c.values.size())) return 0.0;
  return c->c.values[static_cast<std::size_t>(t)];
}

nc_status nc_curve_write_csv(const nc_curve* c, const char* path) {
  return guarded([&] {
    require(c && path, "null argument");
    netcover::export_csv_file(c->c, path);
  });
}

void nc_curve_free(nc_curve* c) { delete c; }

nc_status nc_compare_csv(const char* empirical_path, const char* predicted_path,
                         int64_t t_lo, int64_t t_hi, double n_norm,
                         nc_error_report** out) {
  return guarded([&] {
    require(empirical_path && predicted_path && out, "null argument");
    auto stats = netcover::import_stats_csv(empirical_path);
    auto curve = netcover::import_curve_csv(predicted_path);
    *out = new nc_error_report{netcover::compare_curves(
        stats, curve, static_cast<int>(t_lo), static_cast<int>(t_hi), n_norm)};
  });
}

double nc_report_max_relative_error(const nc_error_report* r) {
  return r ? r->r.max_relative_error : 0.0;
}

double nc_report_rmse(const nc_error_report* r) { return r ? r->r.rmse : 0.0; }

nc_status nc_report_write_csv(const nc_error_report* r, const char* path) {
  return guarded([&] {
    require(r && path, "null argument");
    netcover::export_csv_file(r->r, path);
  });
}

void nc_report_free(nc_error_report* r) { delete r; }

}  // extern "C"
