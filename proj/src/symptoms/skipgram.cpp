#include "epifuse/symptoms/skipgram.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/rng.hpp"
#include "epifuse/core/stats.hpp"
#include "epifuse/symptoms/text.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace epifuse::symptoms {

int SkipGramModel::lookup(std::string_view token) const
{
    const auto it = vocab.find(std::string(token));
    return it == vocab.end() ? -1 : it->second;
}

namespace {

// Cumulative unigram^0.75 table for negative sampling.
struct NegativeTable {
    std::vector<double> cumulative;

    explicit NegativeTable(const std::vector<std::int64_t>& counts)
    {
        cumulative.reserve(counts.size());
        double acc = 0.0;
        for (const auto c : counts) {
            acc += std::pow(static_cast<double>(c), 0.75);
            cumulative.push_back(acc);
        }
    }

    int sample(RngStream& rng) const
    {
        const double u = rng.uniform() * cumulative.back();
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        return static_cast<int>(std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                                         static_cast<std::ptrdiff_t>(
                                                             cumulative.size()) -
                                                             1));
    }
};

} // namespace

SkipGramModel train_skipgram(const std::vector<std::vector<std::string>>& corpus,
                             const SkipGramConfig& config)
{
    if (corpus.empty()) throw DataError("train_skipgram requires a non-empty corpus");
    if (config.dim < 2) throw DataError("train_skipgram requires dim >= 2");
    if (config.window < 1 || config.negatives < 1 || config.epochs < 1) {
        throw DataError("train_skipgram requires window, negatives, epochs >= 1");
    }

    // Deterministic vocabulary: count desc, token asc.
    std::map<std::string, std::int64_t> raw_counts;
    std::int64_t corpus_tokens = 0;
    for (const auto& sentence : corpus) {
        for (const auto& token : sentence) {
            ++raw_counts[token];
            ++corpus_tokens;
        }
    }
    std::vector<std::pair<std::string, std::int64_t>> sorted;
    for (const auto& [token, count] : raw_counts) {
        if (count >= config.min_count) sorted.emplace_back(token, count);
    }
    if (sorted.empty()) throw DataError("train_skipgram: no token meets min_count");
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });

    SkipGramModel model;
    model.dim = config.dim;
    std::vector<std::int64_t> counts;
    counts.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        model.vocab.emplace(sorted[i].first, static_cast<int>(i));
        counts.push_back(sorted[i].second);
    }

    const auto vocab_size = sorted.size();
    const auto dim = static_cast<std::size_t>(config.dim);
    RngStream rng(config.seed, rng_domain::kSymptoms, 0);

    model.input_vectors.resize(vocab_size * dim);
    model.output_vectors.assign(vocab_size * dim, 0.0);
    for (double& v : model.input_vectors) {
        v = (rng.uniform() - 0.5) / static_cast<double>(config.dim);
    }

    const NegativeTable neg_table(counts);
    std::vector<int> sentence_ids;
    std::vector<double> grad_accum(dim);

    const double lr0 = config.learning_rate;
    const double total_tokens =
        static_cast<double>(corpus_tokens) * static_cast<double>(config.epochs);
    std::int64_t processed = 0;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        for (const auto& sentence : corpus) {
            sentence_ids.clear();
            for (const auto& token : sentence) {
                const int id = model.lookup(token);
                if (id >= 0) sentence_ids.push_back(id);
            }
            processed += static_cast<std::int64_t>(sentence.size());
            const double progress = static_cast<double>(processed) / total_tokens;
            const double lr = std::max(lr0 * (1.0 - progress), lr0 * 1e-4);

            const int n = static_cast<int>(sentence_ids.size());
            for (int i = 0; i < n; ++i) {
                const int span =
                    1 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(config.window)));
                const int center = sentence_ids[static_cast<std::size_t>(i)];
                double* v_c = model.input_vectors.data() + static_cast<std::size_t>(center) * dim;

                for (int j = std::max(0, i - span); j <= std::min(n - 1, i + span); ++j) {
                    if (j == i) continue;
                    const int context = sentence_ids[static_cast<std::size_t>(j)];
                    std::fill(grad_accum.begin(), grad_accum.end(), 0.0);

                    for (int s = 0; s <= config.negatives; ++s) {
                        int target;
                        double label;
                        if (s == 0) {
                            target = context;
                            label = 1.0;
                        } else {
                            target = neg_table.sample(rng);
                            if (target == context) continue;
                            label = 0.0;
                        }
                        double* u_t =
                            model.output_vectors.data() + static_cast<std::size_t>(target) * dim;
                        double dot = 0.0;
                        for (std::size_t d = 0; d < dim; ++d) dot += u_t[d] * v_c[d];
                        const double g = lr * (label - stats::inv_logit(dot));
                        for (std::size_t d = 0; d < dim; ++d) {
                            grad_accum[d] += g * u_t[d];
                            u_t[d] += g * v_c[d];
                        }
                    }
                    for (std::size_t d = 0; d < dim; ++d) v_c[d] += grad_accum[d];
                }
            }
        }
    }
    return model;
}

std::vector<double> vectorize(std::string_view text, const SkipGramModel& model)
{
    std::vector<double> out(static_cast<std::size_t>(model.dim), 0.0);
    int found = 0;
    for (const std::string& token : tokenize(text)) {
        const int id = model.lookup(token);
        if (id < 0) continue;
        const auto emb = model.embedding(id);
        for (std::size_t d = 0; d < out.size(); ++d) out[d] += emb[d];
        ++found;
    }
    if (found > 0) {
        for (double& v : out) v /= static_cast<double>(found);
    }
    return out;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b)
{
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

} // namespace epifuse::symptoms
