/* epifuse C API: epidemic surveillance feed fusion and death forecasting.
 *
 * The library is driven by an INI-style run configuration (see README). All
 * entry points return a status code; on failure epf_last_error() carries a
 * human-readable message for the calling thread. Handles are opaque and
 * owned by the caller via the matching _free function.
 */
#ifndef EPIFUSE_EPIFUSE_H
#define EPIFUSE_EPIFUSE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI uses them directly as exit codes. */
#define EPF_OK 0
#define EPF_ERR_INTERNAL 1
#define EPF_ERR_CONFIG 2
#define EPF_ERR_DATA 3
#define EPF_ERR_NUMERIC 4

typedef int epf_status;

typedef struct epf_config epf_config;

const char* epf_version(void);

/* Message from the most recent failing call on this thread ("" if none). */
const char* epf_last_error(void);

/* Parses an INI run configuration. On success *out owns the new handle. */
epf_status epf_config_load(const char* path, epf_config** out);

/* Creates a configuration holding only built-in defaults. */
epf_status epf_config_create(epf_config** out);

/* Applies one "section.key" = value override (e.g. "sampler.chains", "6"). */
epf_status epf_config_set(epf_config* config, const char* key, const char* value);

void epf_config_free(epf_config* config);

/* Tweet pipeline: train from the labeled corpus, classify the stream, write
 * the tweet-counts JSON named by classify.out. */
epf_status epf_classify(const epf_config* config);

/* Generate a synthetic feed bundle from true parameters (JSON file). */
epf_status epf_simulate(const epf_config* config, const char* params_json_path);

/* Load + align feeds, run the Markov chains, write posterior.csv,
 * diagnostics.json and manifest.json under run.out_dir. */
epf_status epf_fit(const epf_config* config);

/* Posterior-predictive death forecast from a stored posterior CSV. */
epf_status epf_forecast(const epf_config* config, const char* posterior_csv);

/* Evaluate candidate forecasts against realized deaths. names/paths are
 * parallel arrays of n candidate forecasts compared to the baseline. */
epf_status epf_evaluate(const epf_config* config, const char* truth_csv,
                        const char* baseline_forecast_csv, const char* const* names,
                        const char* const* paths, size_t n);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EPIFUSE_EPIFUSE_H */
