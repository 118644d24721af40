#include "entityrank/evaluation.hpp"

#include <algorithm>
#include <cmath>

namespace entityrank {

int round_half_up_clamped(double value) {
  double rounded = std::floor(value + 0.5);
  return static_cast<int>(std::clamp(rounded, 1.0, 5.0));
}

Metrics evaluate(std::span<const double> predictions, std::span<const int> labels,
                 int positive_threshold) {
  if (predictions.empty() || predictions.size() != labels.size()) {
    throw InputError("evaluate needs a non-empty prediction/label set of equal size");
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  double squared_error = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    int rounded = round_half_up_clamped(predictions[i]);
    bool predicted_positive = rounded >= positive_threshold;
    bool actual_positive = labels[i] >= positive_threshold;
    if (predicted_positive && actual_positive) ++tp;
    if (predicted_positive && !actual_positive) ++fp;
    if (!predicted_positive && actual_positive) ++fn;
    double diff = static_cast<double>(rounded - labels[i]);
    squared_error += diff * diff;
  }
  Metrics metrics;
  metrics.precision = (tp + fp) == 0 ? 0.0
                                     : static_cast<double>(tp) /
                                           static_cast<double>(tp + fp);
  metrics.recall = (tp + fn) == 0 ? 0.0
                                  : static_cast<double>(tp) /
                                        static_cast<double>(tp + fn);
  metrics.f1 = (metrics.precision + metrics.recall) > 0.0
                   ? 2.0 * metrics.precision * metrics.recall /
                         (metrics.precision + metrics.recall)
                   : 0.0;
  metrics.rmse =
      std::sqrt(squared_error / static_cast<double>(predictions.size()));
  return metrics;
}

namespace {

// Presence over an entity's training row, counted per distinct kb_id.
template <typename Fn>
double entity_fraction(const FeatureMatrix& raw, Fn&& predicate) {
  std::vector<std::string> ids = raw.kb_ids();
  if (ids.empty()) throw InputError("coverage over an empty matrix");
  std::size_t hits = 0;
  for (const std::string& kb_id : ids) {
    auto index = raw.training_row_index(kb_id);
    if (index && predicate(raw.rows()[*index])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(ids.size());
}

bool present_nonzero(const FeatureRow& row, std::size_t k) {
  return row.raw[k].has_value() && *row.raw[k] != 0.0;
}

}  // namespace

std::array<double, kFeatureCount> feature_coverage(const FeatureMatrix& raw) {
  std::array<double, kFeatureCount> coverage{};
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    coverage[k] = entity_fraction(
        raw, [k](const FeatureRow& row) { return present_nonzero(row, k); });
  }
  return coverage;
}

double any_feature_coverage(const FeatureMatrix& raw) {
  return entity_fraction(raw, [](const FeatureRow& row) {
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      if (present_nonzero(row, k)) return true;
    }
    return false;
  });
}

TypeDistribution type_distribution(const EntityCatalog& catalog,
                                   const RankedList& ranked, std::size_t top_n) {
  if (top_n == 0) throw InputError("type distribution needs top_n >= 1");
  if (top_n > ranked.rows.size()) {
    throw InputError("top_n exceeds the ranked list length");
  }
  TypeDistribution dist;
  std::array<std::size_t, kEntityTypeCount> global_counts{};
  std::array<std::size_t, kEntityTypeCount> top_counts{};

  for (const EntityRecord* record : catalog.records_in_language(ranked.language)) {
    ++global_counts[static_cast<std::size_t>(record->entity_type)];
    ++dist.global_population;
  }
  for (std::size_t i = 0; i < top_n; ++i) {
    const EntityRecord* record = catalog.find(ranked.rows[i].kb_id, ranked.language);
    if (record == nullptr) {
      throw InputError("ranked entity " + ranked.rows[i].kb_id +
                       " missing from catalog for language " + ranked.language);
    }
    ++top_counts[static_cast<std::size_t>(record->entity_type)];
    ++dist.top_population;
  }
  if (dist.global_population == 0) {
    throw InputError("no catalog entries for language " + ranked.language);
  }
  for (std::size_t t = 0; t < kEntityTypeCount; ++t) {
    dist.global_fractions[t] = static_cast<double>(global_counts[t]) /
                               static_cast<double>(dist.global_population);
    dist.top_fractions[t] = static_cast<double>(top_counts[t]) /
                            static_cast<double>(dist.top_population);
  }
  return dist;
}

namespace {

std::vector<VariantModel> train_variants(const FeatureMatrix& raw,
                                         const NormalizedMatrix& norm,
                                         const LabelSet& labels,
                                         const TrainTestSplit& split) {
  TrainingData train_data = gather_training_data(raw, norm, labels, split.train_ids);
  std::vector<VariantModel> models;
  models.reserve(kFeatureCount + 1);
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    VariantModel model;
    model.variant = std::string(kFeatureNames[k]);
    model.active_features = {k};
    model.weights = fit_least_squares(train_data.rows, train_data.targets, {k});
    models.push_back(std::move(model));
  }
  VariantModel combined;
  combined.variant = std::string(kAllFeaturesVariant);
  combined.active_features = all_features();
  combined.weights =
      fit_least_squares(train_data.rows, train_data.targets, combined.active_features);
  models.push_back(std::move(combined));
  return models;
}

}  // namespace

EvalOutcome evaluate_variants(std::vector<VariantModel> models, const FeatureMatrix& raw,
                              const NormalizedMatrix& norm, const LabelSet& labels,
                              const TrainTestSplit& split, int positive_threshold) {
  TrainingData test_data = gather_training_data(raw, norm, labels, split.test_ids);
  std::array<double, kFeatureCount> coverage = feature_coverage(raw);
  double combined_coverage = any_feature_coverage(raw);

  EvalOutcome outcome;
  for (VariantModel& model : models) {
    std::vector<double> predictions;
    predictions.reserve(test_data.rows.size());
    std::vector<int> test_labels;
    test_labels.reserve(test_data.rows.size());
    for (std::size_t i = 0; i < test_data.rows.size(); ++i) {
      double raw_score = score(model.weights, test_data.rows[i]);
      predictions.push_back(raw_score);
      test_labels.push_back(static_cast<int>(test_data.targets[i]));
      outcome.predictions.push_back({model.variant, test_data.kb_ids[i], raw_score,
                                     round_half_up_clamped(raw_score),
                                     static_cast<int>(test_data.targets[i])});
    }
    EvalRow row;
    row.variant = model.variant;
    row.metrics = evaluate(predictions, test_labels, positive_threshold);
    row.coverage = model.active_features.size() == 1
                       ? coverage[model.active_features.front()]
                       : combined_coverage;
    outcome.rows.push_back(std::move(row));
  }
  outcome.models = std::move(models);
  return outcome;
}

EvalOutcome single_feature_eval(const FeatureMatrix& raw, const NormalizedMatrix& norm,
                                const LabelSet& labels, const TrainTestSplit& split,
                                int positive_threshold) {
  return evaluate_variants(train_variants(raw, norm, labels, split), raw, norm,
                           labels, split, positive_threshold);
}

}  // namespace entityrank
