#include "epifuse/epifuse.h"

#include "epifuse/core/errors.hpp"
#include "epifuse/ingest/config.hpp"
#include "runner/run.hpp"

#include <exception>
#include <string>
#include <utility>
#include <vector>

struct epf_config {
    epifuse::ingest::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

epf_status fail(epf_status code, const std::string& message)
{
    g_last_error = message;
    return code;
}

template <typename Fn>
epf_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return EPF_OK;
    } catch (const epifuse::ConfigError& e) {
        return fail(EPF_ERR_CONFIG, e.what());
    } catch (const epifuse::DataError& e) {
        return fail(EPF_ERR_DATA, e.what());
    } catch (const epifuse::NumericError& e) {
        return fail(EPF_ERR_NUMERIC, e.what());
    } catch (const std::exception& e) {
        return fail(EPF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EPF_ERR_INTERNAL, "unknown error");
    }
}

} // namespace

extern "C" {

const char* epf_version(void)
{
    return "0.1.0";
}

const char* epf_last_error(void)
{
    return g_last_error.c_str();
}

epf_status epf_config_load(const char* path, epf_config** out)
{
    if (path == nullptr || out == nullptr) return fail(EPF_ERR_CONFIG, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto handle = new epf_config{epifuse::ingest::RunConfig::load(path)};
        *out = handle;
    });
}

epf_status epf_config_create(epf_config** out)
{
    if (out == nullptr) return fail(EPF_ERR_CONFIG, "null argument");
    *out = new epf_config{};
    g_last_error.clear();
    return EPF_OK;
}

epf_status epf_config_set(epf_config* config, const char* key, const char* value)
{
    if (config == nullptr || key == nullptr || value == nullptr) {
        return fail(EPF_ERR_CONFIG, "null argument");
    }
    return guarded([&] { config->cfg.set(key, value); });
}

void epf_config_free(epf_config* config)
{
    delete config;
}

epf_status epf_classify(const epf_config* config)
{
    if (config == nullptr) return fail(EPF_ERR_CONFIG, "null config");
    return guarded([&] { epifuse::runner::run_classify(config->cfg); });
}

epf_status epf_simulate(const epf_config* config, const char* params_json_path)
{
    if (config == nullptr || params_json_path == nullptr) {
        return fail(EPF_ERR_CONFIG, "null argument");
    }
    return guarded([&] { epifuse::runner::run_simulate(config->cfg, params_json_path); });
}

epf_status epf_fit(const epf_config* config)
{
    if (config == nullptr) return fail(EPF_ERR_CONFIG, "null config");
    return guarded([&] { epifuse::runner::run_fit(config->cfg); });
}

epf_status epf_forecast(const epf_config* config, const char* posterior_csv)
{
    if (config == nullptr || posterior_csv == nullptr) {
        return fail(EPF_ERR_CONFIG, "null argument");
    }
    return guarded([&] { epifuse::runner::run_forecast(config->cfg, posterior_csv); });
}

epf_status epf_evaluate(const epf_config* config, const char* truth_csv,
                        const char* baseline_forecast_csv, const char* const* names,
                        const char* const* paths, size_t n)
{
    if (config == nullptr || truth_csv == nullptr || baseline_forecast_csv == nullptr) {
        return fail(EPF_ERR_CONFIG, "null argument");
    }
    if (n > 0 && (names == nullptr || paths == nullptr)) {
        return fail(EPF_ERR_CONFIG, "null candidate arrays");
    }
    return guarded([&] {
        std::vector<std::pair<std::string, std::string>> candidates;
        candidates.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (names[i] == nullptr || paths[i] == nullptr) {
                throw epifuse::ConfigError("null candidate entry");
            }
            candidates.emplace_back(names[i], paths[i]);
        }
        epifuse::runner::run_evaluate(config->cfg, truth_csv, baseline_forecast_csv, candidates);
    });
}

} // extern "C"
