// epifuse command-line front end. Talks to the library exclusively through
// the C API in epifuse/epifuse.h; exit codes are the library status codes
// (0 ok, 2 config error, 3 data error, 4 numerical failure).

#include <epifuse/epifuse.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct ConfigDeleter {
    void operator()(epf_config* c) const { epf_config_free(c); }
};
using ConfigHandle = std::unique_ptr<epf_config, ConfigDeleter>;

struct CommonOptions {
    std::string config_path;
    std::string feeds;
    std::string out_dir;
    std::string end_date;
    int chains = -1;
    int draws = -1;
    int burn_in = -1;
    int horizon = -1;
    int jobs = -1;
    long long seed = -1;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--config", opts.config_path, "Run configuration file (INI)")->required();
    cmd->add_option("--feeds", opts.feeds, "Active feeds, e.g. deaths,tests,twitter");
    cmd->add_option("--chains", opts.chains, "Number of Markov chains");
    cmd->add_option("--draws", opts.draws, "Draws per chain (including burn-in)");
    cmd->add_option("--burn-in", opts.burn_in, "Burn-in draws discarded per chain");
    cmd->add_option("--seed", opts.seed, "Root random seed");
    cmd->add_option("--jobs", opts.jobs, "Max parallel chains");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--end-date", opts.end_date, "Analysis end date (YYYY-MM-DD)");
    cmd->add_option("--horizon", opts.horizon, "Forecast horizon in days");
}

int check(epf_status status)
{
    if (status != EPF_OK) {
        std::fprintf(stderr, "epifuse: error: %s\n", epf_last_error());
    }
    return status;
}

ConfigHandle load_config(const CommonOptions& opts, epf_status& status)
{
    epf_config* raw = nullptr;
    status = epf_config_load(opts.config_path.c_str(), &raw);
    ConfigHandle config(raw);
    if (status != EPF_OK) return config;

    auto set = [&](const char* key, const std::string& value) {
        if (status == EPF_OK) status = epf_config_set(config.get(), key, value.c_str());
    };
    if (!opts.feeds.empty()) set("run.feeds", opts.feeds);
    if (!opts.out_dir.empty()) set("run.out_dir", opts.out_dir);
    if (!opts.end_date.empty()) set("run.end_date", opts.end_date);
    if (opts.horizon >= 0) set("run.horizon", std::to_string(opts.horizon));
    if (opts.seed >= 0) set("run.seed", std::to_string(opts.seed));
    if (opts.chains >= 0) set("sampler.chains", std::to_string(opts.chains));
    if (opts.draws >= 0) set("sampler.draws", std::to_string(opts.draws));
    if (opts.burn_in >= 0) set("sampler.burn_in", std::to_string(opts.burn_in));
    if (opts.jobs >= 0) set("sampler.jobs", std::to_string(opts.jobs));
    return config;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"epifuse: fuse low-latency epidemic surveillance feeds with death data "
                 "for Bayesian 7-day death forecasts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(epf_version()));

    CommonOptions opts;
    std::string params_path;
    std::string posterior_path;
    std::string truth_path;
    std::vector<std::string> candidate_specs;
    std::string baseline_path;

    CLI::App* classify = app.add_subcommand("classify", "Run the tweet symptom pipeline");
    add_common_flags(classify, opts);

    CLI::App* simulate = app.add_subcommand("simulate", "Generate a synthetic feed bundle");
    add_common_flags(simulate, opts);
    simulate->add_option("--params", params_path, "True-parameter JSON file")->required();

    CLI::App* fit = app.add_subcommand("fit", "Calibrate the model by MCMC");
    add_common_flags(fit, opts);

    CLI::App* forecast = app.add_subcommand("forecast", "Posterior-predictive death forecast");
    add_common_flags(forecast, opts);
    forecast->add_option("--posterior", posterior_path, "posterior.csv from fit")->required();

    CLI::App* evaluate = app.add_subcommand("evaluate", "Score forecasts against truth");
    add_common_flags(evaluate, opts);
    evaluate->add_option("--truth", truth_path, "Realized deaths CSV (region,date,count)")
        ->required();
    evaluate->add_option("--baseline", baseline_path, "Baseline (deaths-only) forecast CSV")
        ->required();
    evaluate->add_option("--forecast", candidate_specs,
                         "Candidate forecast as name=path (repeatable)");

    CLI11_PARSE(app, argc, argv);

    epf_status status = EPF_OK;
    const ConfigHandle config = load_config(opts, status);
    if (status != EPF_OK) return check(status);

    if (classify->parsed()) return check(epf_classify(config.get()));
    if (simulate->parsed()) return check(epf_simulate(config.get(), params_path.c_str()));
    if (fit->parsed()) return check(epf_fit(config.get()));
    if (forecast->parsed()) return check(epf_forecast(config.get(), posterior_path.c_str()));
    if (evaluate->parsed()) {
        std::vector<std::string> names, paths;
        for (const std::string& spec : candidate_specs) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos) {
                std::fprintf(stderr, "epifuse: error: --forecast expects name=path, got '%s'\n",
                             spec.c_str());
                return EPF_ERR_CONFIG;
            }
            names.push_back(spec.substr(0, eq));
            paths.push_back(spec.substr(eq + 1));
        }
        std::vector<const char*> name_ptrs, path_ptrs;
        for (const auto& n : names) name_ptrs.push_back(n.c_str());
        for (const auto& p : paths) path_ptrs.push_back(p.c_str());
        return check(epf_evaluate(config.get(), truth_path.c_str(), baseline_path.c_str(),
                                  name_ptrs.data(), path_ptrs.data(), name_ptrs.size()));
    }
    return EPF_ERR_CONFIG;
}
