/* C interface to the netcover shared library. All objects are opaque
 * handles; every fallible call returns an nc_status and reports detail via
 * nc_last_error(), which is thread-local. */
#ifndef NETCOVER_NETCOVER_H
#define NETCOVER_NETCOVER_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nc_graph nc_graph;
typedef struct nc_trace_stats nc_trace_stats;
typedef struct nc_curve nc_curve;
typedef struct nc_error_report nc_error_report;

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_INVALID_ARGUMENT = 1,
  NC_ERR_PARSE = 2,
  NC_ERR_IO = 3,
  NC_ERR_INTERNAL = 4
} nc_status;

/* Message of the most recent failure on this thread; never NULL. */
const char* nc_last_error(void);

/* --- graphs ----------------------------------------------------------- */

/* Edge-list text file: "u v" per line, '#' comments. */
nc_status nc_graph_load_file(const char* path, nc_graph** out);

/* Generator spec, comma-separated key=value, e.g.
 *   "model=ring,n=1000"
 *   "model=star,leaves=5"
 *   "model=er,n=2000,q=0.005"
 *   "model=lattice,dims=100x100,periodic=1"
 *   "model=powerlaw,n=10000,tau=2.5"     (configuration model)
 */
nc_status nc_graph_from_spec(const char* spec, uint64_t seed, nc_graph** out);

nc_status nc_graph_largest_component(const nc_graph* g, nc_graph** out);
nc_status nc_graph_rewire(const nc_graph* g, uint64_t seed, nc_graph** out);
void nc_graph_free(nc_graph* g);

int64_t nc_graph_node_count(const nc_graph* g);
int64_t nc_graph_edge_count(const nc_graph* g);
nc_status nc_graph_stats(const nc_graph* g, double* mean_degree,
                         double* second_moment, double* clustering);
nc_status nc_graph_write_edge_list(const nc_graph* g, const char* path);

/* --- simulation -------------------------------------------------------- */

/* policy: bfs dfs rw rwnr si mod meed oracle maxdeg uniform uniform-nr.
 * jobs <= 0 uses the available parallelism; results are independent of it. */
nc_status nc_simulate(const nc_graph* g, const char* policy, int64_t budget,
                      int64_t runs, uint64_t seed, int jobs, nc_trace_stats** out);

int64_t nc_stats_steps(const nc_trace_stats* s);
nc_status nc_stats_final(const nc_trace_stats* s, double* mean_cover, double* std_cover);
nc_status nc_stats_write_csv(const nc_trace_stats* s, const char* path);
void nc_stats_free(nc_trace_stats* s);

/* --- predictors -------------------------------------------------------- */

/* model: uniform uniform-nr rw-exact rw-steady rwnr rwnr-edges si si-frontier */
nc_status nc_predict(const nc_graph* g, const char* model, int64_t horizon,
                     nc_curve** out);

int64_t nc_curve_size(const nc_curve* c);
double nc_curve_value(const nc_curve* c, int64_t t);
nc_status nc_curve_write_csv(const nc_curve* c, const char* path);
void nc_curve_free(nc_curve* c);

/* --- comparison -------------------------------------------------------- */

/* Both paths are CSV files produced by nc_stats_write_csv /
 * nc_curve_write_csv. Residuals on mean cover, relative error normalized by
 * n_norm; t range clipped to the overlap of [t_lo, t_hi] with both inputs. */
nc_status nc_compare_csv(const char* empirical_path, const char* predicted_path,
                         int64_t t_lo, int64_t t_hi, double n_norm,
                         nc_error_report** out);

double nc_report_max_relative_error(const nc_error_report* r);
double nc_report_rmse(const nc_error_report* r);
nc_status nc_report_write_csv(const nc_error_report* r, const char* path);
void nc_report_free(nc_error_report* r);

#ifdef __cplusplus
}
#endif

#endif
