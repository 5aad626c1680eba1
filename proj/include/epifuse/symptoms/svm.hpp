#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace epifuse::symptoms {

struct SvmConfig {
    double lambda = 1e-4; // L2 regularization strength
    int epochs = 30;
    std::uint64_t seed = 0;
};

/// One-vs-rest linear SVM over tweet vectors; classes are 1..5.
struct SvmModel {
    int dim = 0;
    std::vector<std::vector<double>> weights; // one per class
    std::vector<double> bias;                 // one per class

    double score(int class_index, std::span<const double> x) const;
};

/// Subgradient descent (Pegasos) on the hinge loss, one binary problem per
/// class; deterministic given the seed. Throws DataError when fewer than two
/// distinct labels are present.
SvmModel train_svm(const std::vector<std::vector<double>>& vectors,
                   const std::vector<int>& labels, const SvmConfig& config);

/// Highest-scoring class; ties resolve to the lowest class index.
int classify(const SvmModel& model, std::span<const double> x);

} // namespace epifuse::symptoms
