#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/feature_matrix.hpp"
#include "entityrank/ranking.hpp"
#include "entityrank/regression.hpp"

namespace entityrank {

// Half-up rounding clamped to the label scale [1,5]; predicted scores are
// rounded to integers before they are compared against labels.
int round_half_up_clamped(double value);

struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double rmse = 0.0;
};

// Binary precision/recall/F1 with the positive class defined as a (rounded)
// value >= positive_threshold, plus RMSE of rounded predictions against
// labels. Zero predicted positives yields precision 0, not NaN.
// Throws InputError on an empty or mismatched test set.
Metrics evaluate(std::span<const double> predictions, std::span<const int> labels,
                 int positive_threshold = 4);

// Fraction of catalog entities whose training row has the feature present
// and nonzero.
std::array<double, kFeatureCount> feature_coverage(const FeatureMatrix& raw);
// Fraction of entities with at least one feature present and nonzero; the
// coverage reported for the combined model.
double any_feature_coverage(const FeatureMatrix& raw);

struct TypeDistribution {
  // Indexed PERSON, LOCATION, ORGANIZATION, MISC; each array sums to 1.
  std::array<double, kEntityTypeCount> global_fractions{};
  std::array<double, kEntityTypeCount> top_fractions{};
  std::size_t global_population = 0;
  std::size_t top_population = 0;
};

// Entity-type makeup of the language's full catalog slice versus the top-N
// rows of its ranked list. Throws InputError when top_n is 0 or exceeds the
// list length.
TypeDistribution type_distribution(const EntityCatalog& catalog,
                                   const RankedList& ranked, std::size_t top_n);

inline constexpr std::string_view kAllFeaturesVariant = "all_features";

struct VariantModel {
  std::string variant;  // feature name, or "all_features"
  std::vector<std::size_t> active_features;
  WeightVector weights;
};

struct Prediction {
  std::string variant;
  std::string kb_id;
  double raw_score = 0.0;
  int rounded = 0;
  int label = 0;
};

struct EvalRow {
  std::string variant;
  Metrics metrics;
  double coverage = 0.0;
};

struct EvalOutcome {
  std::vector<EvalRow> rows;          // feature order, then all_features
  std::vector<VariantModel> models;   // same order
  std::vector<Prediction> predictions;
};

// Trains one single-feature regression per feature plus the combined model
// on the train split, and evaluates each on the test split.
EvalOutcome single_feature_eval(const FeatureMatrix& raw, const NormalizedMatrix& norm,
                                const LabelSet& labels, const TrainTestSplit& split,
                                int positive_threshold = 4);

// Evaluates already-trained variant models on the split's test ids.
EvalOutcome evaluate_variants(std::vector<VariantModel> models, const FeatureMatrix& raw,
                              const NormalizedMatrix& norm, const LabelSet& labels,
                              const TrainTestSplit& split, int positive_threshold = 4);

}  // namespace entityrank
