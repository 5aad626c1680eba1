#include "epifuse/symptoms/svm.hpp"

#include "epifuse/core/errors.hpp"
#include "epifuse/core/rng.hpp"
#include "epifuse/symptoms/tweet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace epifuse::symptoms {

double SvmModel::score(int class_index, std::span<const double> x) const
{
    const auto& w = weights[static_cast<std::size_t>(class_index)];
    double s = bias[static_cast<std::size_t>(class_index)];
    for (std::size_t d = 0; d < w.size(); ++d) s += w[d] * x[d];
    return s;
}

SvmModel train_svm(const std::vector<std::vector<double>>& vectors,
                   const std::vector<int>& labels, const SvmConfig& config)
{
    if (vectors.empty() || vectors.size() != labels.size()) {
        throw DataError("train_svm requires matching non-empty vectors and labels");
    }
    if (std::set<int>(labels.begin(), labels.end()).size() < 2) {
        throw DataError("train_svm requires at least 2 distinct labels");
    }
    for (int label : labels) {
        if (label < 1 || label > kNumClasses) {
            throw DataError("train_svm labels must lie in 1..5");
        }
    }

    const std::size_t dim = vectors.front().size();
    const std::size_t n = vectors.size();

    SvmModel model;
    model.dim = static_cast<int>(dim);
    model.weights.assign(kNumClasses, std::vector<double>(dim, 0.0));
    model.bias.assign(kNumClasses, 0.0);

    RngStream rng(config.seed, rng_domain::kSymptoms, 1);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (int c = 0; c < kNumClasses; ++c) {
        auto& w = model.weights[static_cast<std::size_t>(c)];
        double& b = model.bias[static_cast<std::size_t>(c)];
        long t = 0;
        for (int epoch = 0; epoch < config.epochs; ++epoch) {
            std::shuffle(order.begin(), order.end(), rng.engine());
            for (const std::size_t idx : order) {
                ++t;
                const double eta = 1.0 / (config.lambda * static_cast<double>(t));
                const double y = labels[idx] == c + 1 ? 1.0 : -1.0;
                const auto& x = vectors[idx];

                double margin = b;
                for (std::size_t d = 0; d < dim; ++d) margin += w[d] * x[d];
                margin *= y;

                const double shrink = 1.0 - eta * config.lambda;
                for (double& wd : w) wd *= shrink;
                if (margin < 1.0) {
                    for (std::size_t d = 0; d < dim; ++d) w[d] += eta * y * x[d];
                    b += 0.1 * eta * y; // unregularized bias, damped
                }
            }
        }
    }
    return model;
}

int classify(const SvmModel& model, std::span<const double> x)
{
    int best = 1;
    double best_score = model.score(0, x);
    for (int c = 1; c < kNumClasses; ++c) {
        const double s = model.score(c, x);
        if (s > best_score) {
            best_score = s;
            best = c + 1;
        }
    }
    return best;
}

} // namespace epifuse::symptoms
