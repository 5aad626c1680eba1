#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace epifuse::symptoms {

struct SkipGramConfig {
    int dim = 50;
    int window = 5;
    int negatives = 5;
    int epochs = 5;
    int min_count = 1;
    double learning_rate = 0.025;
    std::uint64_t seed = 0;
};

/// Word embeddings trained with skip-gram negative sampling.
struct SkipGramModel {
    int dim = 0;
    std::unordered_map<std::string, int> vocab;
    std::vector<double> input_vectors;  // vocab x dim, row-major
    std::vector<double> output_vectors; // vocab x dim

    std::span<const double> embedding(int word_index) const
    {
        return {input_vectors.data() + static_cast<std::size_t>(word_index) * dim,
                static_cast<std::size_t>(dim)};
    }

    /// -1 when the token is out of vocabulary.
    int lookup(std::string_view token) const;
};

/// Single-threaded SGD on negative-sampling skip-gram pairs; deterministic
/// given the seed. Throws DataError on an empty corpus.
SkipGramModel train_skipgram(const std::vector<std::vector<std::string>>& corpus,
                             const SkipGramConfig& config);

/// Mean of in-vocabulary token embeddings; all-zero vector when none.
std::vector<double> vectorize(std::string_view text, const SkipGramModel& model);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

} // namespace epifuse::symptoms
