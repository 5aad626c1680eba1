#include "epifuse/ingest/config.hpp"

#include "epifuse/core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace epifuse::ingest {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value)
{
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
        throw ConfigError(key + ": expected a number, got '" + value + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value)
{
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError(key + ": expected an integer, got '" + value + "'");
    }
    return i;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value)
{
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || end != value.c_str() + value.size()) {
        throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
    }
    return v;
}

} // namespace

RunConfig RunConfig::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    RunConfig cfg;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of(";#");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(path + ":" + std::to_string(line_no) + ": unterminated section");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
        }
        cfg.set(section.empty() ? key : section + "." + key, value);
    }
    return cfg;
}

void RunConfig::set(const std::string& dotted_key, const std::string& value)
{
    const auto dot = dotted_key.find('.');
    const std::string section = dot == std::string::npos ? "run" : dotted_key.substr(0, dot);
    const std::string key = dot == std::string::npos ? dotted_key : dotted_key.substr(dot + 1);

    if (section == "run") {
        if (key == "profile") profile = value;
        else if (key == "region") region = value;
        else if (key == "population") population = parse_double(dotted_key, value);
        else if (key == "epoch") epoch = Date::parse(value);
        else if (key == "end_date") end_date = Date::parse(value);
        else if (key == "horizon") horizon = parse_int(dotted_key, value);
        else if (key == "seed") seed = parse_u64(dotted_key, value);
        else if (key == "out_dir") out_dir = value;
        else if (key == "feeds") active_feeds = split_list(value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    if (section == "sampler") {
        if (key == "chains") sampler.n_chains = parse_int(dotted_key, value);
        else if (key == "draws") sampler.n_draws = parse_int(dotted_key, value);
        else if (key == "burn_in") sampler.n_burn_in = parse_int(dotted_key, value);
        else if (key == "jobs") sampler.jobs = parse_int(dotted_key, value);
        else if (key == "target_accept") sampler.target_accept = parse_double(dotted_key, value);
        else if (key == "initial_scale") sampler.initial_scale = parse_double(dotted_key, value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    if (section == "model") {
        if (key == "feed_lag_max") feed_lag_max = parse_int(dotted_key, value);
        else if (key == "death_delay_mean") death_delay_mean = parse_double(dotted_key, value);
        else if (key == "death_delay_sd") death_delay_sd = parse_double(dotted_key, value);
        else if (key == "death_delay_max") death_delay_max = parse_int(dotted_key, value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    if (section == "priors") {
        if (key == "log_beta0_mean") priors.log_beta0_mean = parse_double(dotted_key, value);
        else if (key == "log_beta0_sd") priors.log_beta0_sd = parse_double(dotted_key, value);
        else if (key == "log_beta_walk_sd") priors.log_beta_walk_sd = parse_double(dotted_key, value);
        else if (key == "latent_mean") priors.latent_mean = parse_double(dotted_key, value);
        else if (key == "latent_sd") priors.latent_sd = parse_double(dotted_key, value);
        else if (key == "infectious_mean") priors.infectious_mean = parse_double(dotted_key, value);
        else if (key == "infectious_sd") priors.infectious_sd = parse_double(dotted_key, value);
        else if (key == "ifr_mean") priors.ifr_mean = parse_double(dotted_key, value);
        else if (key == "ifr_concentration") priors.ifr_concentration = parse_double(dotted_key, value);
        else if (key == "seed_log_mean") priors.seed_log_mean = parse_double(dotted_key, value);
        else if (key == "seed_log_sd") priors.seed_log_sd = parse_double(dotted_key, value);
        else if (key == "kappa_log_mean") priors.kappa_log_mean = parse_double(dotted_key, value);
        else if (key == "kappa_log_sd") priors.kappa_log_sd = parse_double(dotted_key, value);
        else if (key == "phi_mean") priors.phi_mean = parse_double(dotted_key, value);
        else if (key == "lag_dirichlet_alpha") priors.lag_dirichlet_alpha = parse_double(dotted_key, value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    if (section == "classify") {
        if (key == "tweets") classify.tweets_path = value;
        else if (key == "labeled_corpus") classify.labeled_corpus_path = value;
        else if (key == "lexicon_dir") classify.lexicon_dir = value;
        else if (key == "polygons") classify.polygons_path = value;
        else if (key == "gazetteer") classify.gazetteer_path = value;
        else if (key == "out") classify.out_path = value;
        else if (key == "embedding_dim") classify.embedding_dim = parse_int(dotted_key, value);
        else if (key == "window") classify.window = parse_int(dotted_key, value);
        else if (key == "negatives") classify.negatives = parse_int(dotted_key, value);
        else if (key == "epochs") classify.epochs = parse_int(dotted_key, value);
        else if (key == "min_count") classify.min_count = parse_int(dotted_key, value);
        else if (key == "svm_epochs") classify.svm_epochs = parse_int(dotted_key, value);
        else if (key == "svm_lambda") classify.svm_lambda = parse_double(dotted_key, value);
        else if (key == "balance_target") classify.balance_target = parse_int(dotted_key, value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    if (section.rfind("feeds.", 0) == 0) {
        const std::string feed = section.substr(6);
        if (feed.empty()) throw ConfigError("empty feed name in section [" + section + "]");
        FeedFileConfig& fc = feed_files[feed];
        if (key == "path") fc.path = value;
        else if (key == "format") fc.format = value;
        else if (key == "start_date") fc.start_date = Date::parse(value);
        else throw ConfigError("unknown config key: " + dotted_key);
        return;
    }
    throw ConfigError("unknown config section: " + section);
}

void RunConfig::validate() const
{
    if (std::find(active_feeds.begin(), active_feeds.end(), "deaths") == active_feeds.end()) {
        throw ConfigError("the deaths feed must always be active");
    }
    if (horizon < 1) throw ConfigError("horizon must be >= 1");
    if (end_date < epoch) throw ConfigError("end_date is before the epoch");
    if (region.empty()) throw ConfigError("run.region is required");
}

} // namespace epifuse::ingest
