#include "entityrank/regression.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace entityrank {

TrainTestSplit split_labels(const LabelSet& labels, std::uint64_t seed,
                            double train_fraction) {
  if (labels.size() < 5) {
    throw InputError("need at least 5 labels to split, got " +
                     std::to_string(labels.size()));
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie in (0,1)");
  }

  std::vector<std::string> ids;
  ids.reserve(labels.size());
  for (const auto& [kb_id, _] : labels) ids.push_back(kb_id);

  std::mt19937_64 gen(seed);
  for (std::size_t i = ids.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
    std::swap(ids[i], ids[j]);
  }

  auto train_size = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(ids.size())));
  train_size = std::clamp<std::size_t>(train_size, 1, ids.size() - 1);

  TrainTestSplit split;
  split.seed = seed;
  split.train_fraction = train_fraction;
  split.train_ids.assign(ids.begin(), ids.begin() + train_size);
  split.test_ids.assign(ids.begin() + train_size, ids.end());
  std::sort(split.train_ids.begin(), split.train_ids.end());
  std::sort(split.test_ids.begin(), split.test_ids.end());
  return split;
}

namespace {

// Gaussian elimination with partial pivoting on an n x n system.
std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-300) {
      throw InputError("normal equations are singular; features are degenerate");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t row = n; row-- > 0;) {
    double value = b[row];
    for (std::size_t k = row + 1; k < n; ++k) value -= a[row][k] * x[k];
    x[row] = value / a[row][row];
  }
  return x;
}

}  // namespace

WeightVector fit_least_squares(
    const std::vector<std::array<double, kFeatureCount>>& rows,
    const std::vector<double>& targets,
    const std::vector<std::size_t>& active_features, double ridge) {
  if (rows.empty() || rows.size() != targets.size()) {
    throw InputError("least squares needs matching non-empty rows and targets");
  }
  const std::size_t m = active_features.size();
  const std::size_t dim = m + 1;  // active columns plus intercept

  // Gram matrix of [X 1] plus the ridge on the diagonal, and X^T y.
  std::vector<std::vector<double>> gram(dim, std::vector<double>(dim, 0.0));
  std::vector<double> rhs(dim, 0.0);
  std::vector<double> design(dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) design[j] = rows[i][active_features[j]];
    design[m] = 1.0;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r; c < dim; ++c) gram[r][c] += design[r] * design[c];
      rhs[r] += design[r] * targets[i];
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < r; ++c) gram[r][c] = gram[c][r];
    gram[r][r] += ridge;
  }

  std::vector<double> solution = solve_dense(std::move(gram), std::move(rhs));
  WeightVector weights;
  for (std::size_t j = 0; j < m; ++j) weights.weights[active_features[j]] = solution[j];
  weights.intercept = solution[m];
  return weights;
}

double score(const WeightVector& weights, const std::array<double, kFeatureCount>& row) {
  double value = weights.intercept;
  for (std::size_t k = 0; k < kFeatureCount; ++k) value += weights.weights[k] * row[k];
  return value;
}

TrainingData gather_training_data(const FeatureMatrix& raw, const NormalizedMatrix& norm,
                                  const LabelSet& labels,
                                  const std::vector<std::string>& ids) {
  TrainingData data;
  data.kb_ids.reserve(ids.size());
  for (const std::string& kb_id : ids) {
    auto row_index = raw.training_row_index(kb_id);
    if (!row_index) {
      throw InputError("labeled entity " + kb_id + " has no feature row");
    }
    auto label_it = labels.find(kb_id);
    if (label_it == labels.end()) {
      throw InputError("entity " + kb_id + " is not labeled");
    }
    data.kb_ids.push_back(kb_id);
    data.rows.push_back(norm.values[*row_index]);
    data.targets.push_back(static_cast<double>(label_it->second));
  }
  return data;
}

}  // namespace entityrank
