#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entityrank/feature_matrix.hpp"
#include "entityrank/ingest.hpp"

namespace entityrank {

struct WeightVector {
  std::array<double, kFeatureCount> weights{};
  double intercept = 0.0;
};

struct TrainTestSplit {
  std::vector<std::string> train_ids;  // sorted
  std::vector<std::string> test_ids;   // sorted
  std::uint64_t seed = 0;
  double train_fraction = 0.8;
};

// Deterministic shuffle split of the labeled kb ids. The shuffle is a
// hand-rolled Fisher-Yates over mt19937_64 draws, so the split depends only
// on the seed, never on the standard library implementation.
// Requires at least 5 labels.
TrainTestSplit split_labels(const LabelSet& labels, std::uint64_t seed,
                            double train_fraction = 0.8);

// Ordinary least squares with intercept over the active feature columns,
// solved via the normal equations with a ridge term for rank-deficiency
// safety. Weights of inactive features stay 0. Throws InputError when the
// system is singular even with the ridge, or when inputs are empty/ragged.
WeightVector fit_least_squares(
    const std::vector<std::array<double, kFeatureCount>>& rows,
    const std::vector<double>& targets,
    const std::vector<std::size_t>& active_features, double ridge = 1e-8);

inline std::vector<std::size_t> all_features() {
  std::vector<std::size_t> active(kFeatureCount);
  for (std::size_t i = 0; i < kFeatureCount; ++i) active[i] = i;
  return active;
}

// S(e): intercept plus the dot product of the weight vector with the
// normalized feature row.
double score(const WeightVector& weights, const std::array<double, kFeatureCount>& row);

// Normalized rows and labels of the given entities, using each entity's
// training row. Throws InputError when an entity has no matrix row.
struct TrainingData {
  std::vector<std::string> kb_ids;
  std::vector<std::array<double, kFeatureCount>> rows;
  std::vector<double> targets;
};
TrainingData gather_training_data(const FeatureMatrix& raw, const NormalizedMatrix& norm,
                                  const LabelSet& labels,
                                  const std::vector<std::string>& ids);

}  // namespace entityrank
