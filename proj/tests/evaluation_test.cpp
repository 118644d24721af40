#include <doctest.h>

#include <cmath>
#include <random>

#include "entityrank/evaluation.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace entityrank;

TEST_CASE("rounding is half-up with clamping to the label scale") {
  CHECK(round_half_up_clamped(3.49) == 3);
  CHECK(round_half_up_clamped(3.5) == 4);
  CHECK(round_half_up_clamped(4.5) == 5);
  CHECK(round_half_up_clamped(0.2) == 1);
  CHECK(round_half_up_clamped(-2.0) == 1);
  CHECK(round_half_up_clamped(6.7) == 5);
  CHECK(round_half_up_clamped(5.0) == 5);
}

TEST_CASE("the worked confusion-matrix example holds") {
  std::vector<double> predictions{5, 4, 1};
  std::vector<int> labels{5, 5, 1};
  Metrics m = evaluate(predictions, labels, 4);
  CHECK(m.precision == doctest::Approx(1.0));
  CHECK(m.recall == doctest::Approx(1.0));
  CHECK(m.f1 == doctest::Approx(1.0));
  CHECK(m.rmse == doctest::Approx(std::sqrt(1.0 / 3.0)));
}

TEST_CASE("perfect predictions give perfect metrics") {
  std::vector<double> predictions{5, 4, 3, 2, 1};
  std::vector<int> labels{5, 4, 3, 2, 1};
  Metrics m = evaluate(predictions, labels, 4);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
  CHECK(m.rmse == 0.0);
}

TEST_CASE("no predicted positives defines precision as zero") {
  std::vector<double> predictions{1, 1, 1};
  std::vector<int> labels{5, 5, 1};
  Metrics m = evaluate(predictions, labels, 4);
  CHECK(m.precision == 0.0);
  CHECK(m.recall == 0.0);
  CHECK(m.f1 == 0.0);
  CHECK(m.rmse == doctest::Approx(std::sqrt(32.0 / 3.0)));
}

TEST_CASE("evaluate rejects empty or ragged input") {
  CHECK_THROWS_AS(evaluate({}, {}, 4), InputError);
  std::vector<double> predictions{1.0};
  std::vector<int> labels{1, 2};
  CHECK_THROWS_AS(evaluate(predictions, labels, 4), InputError);
}

TEST_CASE("metrics stay in range and agree with an independent tally") {
  std::mt19937 gen(89);
  std::uniform_real_distribution<double> prediction(0.0, 6.0);
  std::uniform_int_distribution<int> label(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> predictions(30);
    std::vector<int> labels(30);
    std::vector<int> rounded(30);
    bool all_equal = true;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
      predictions[i] = prediction(gen);
      labels[i] = label(gen);
      rounded[i] = round_half_up_clamped(predictions[i]);
      all_equal = all_equal && rounded[i] == labels[i];
    }
    Metrics m = evaluate(predictions, labels, 4);
    oracles::ReferenceMetrics expected = oracles::confusion_metrics(rounded, labels, 4);
    CHECK(m.precision == doctest::Approx(expected.precision));
    CHECK(m.recall == doctest::Approx(expected.recall));
    CHECK(m.f1 == doctest::Approx(expected.f1));
    CHECK(m.rmse == doctest::Approx(expected.rmse));

    CHECK(m.precision >= 0.0);
    CHECK(m.precision <= 1.0);
    CHECK(m.recall >= 0.0);
    CHECK(m.recall <= 1.0);
    CHECK(m.f1 <= std::max(m.precision, m.recall) + 1e-12);
    CHECK((m.rmse == 0.0) == all_equal);
  }
}

namespace {

FeatureRow row_with(std::string kb_id, std::string language,
                    std::optional<double> social) {
  FeatureRow row;
  row.kb_id = std::move(kb_id);
  row.language = std::move(language);
  row.raw[static_cast<std::size_t>(Feature::SocialScore)] = social;
  return row;
}

}  // namespace

TEST_CASE("feature coverage counts entities with present nonzero values") {
  FeatureMatrix matrix({
      row_with("A", "en", 90.0),
      row_with("B", "en", std::nullopt),
      row_with("C", "en", std::nullopt),
      row_with("D", "en", 0.0),  // present but zero does not count
  });
  auto coverage = feature_coverage(matrix);
  CHECK(coverage[static_cast<std::size_t>(Feature::SocialScore)] ==
        doctest::Approx(0.25));
  CHECK(coverage[static_cast<std::size_t>(Feature::PageRank)] == 0.0);
  CHECK(any_feature_coverage(matrix) == doctest::Approx(0.25));

  FeatureMatrix full({row_with("A", "en", 5.0), row_with("B", "en", 9.0)});
  CHECK(feature_coverage(full)[static_cast<std::size_t>(Feature::SocialScore)] == 1.0);
}

namespace {

EntityCatalog typed_catalog() {
  EntityCatalog catalog;
  auto add = [&](int i, EntityType type) {
    catalog.add({"Q" + std::to_string(i), "en", static_cast<PageId>(i),
                 "T" + std::to_string(i), type});
  };
  add(0, EntityType::Person);
  for (int i = 1; i < 10; ++i) add(i, EntityType::Misc);
  return catalog;
}

RankedList list_for(const std::vector<std::string>& ids) {
  RankedList list;
  list.language = "en";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    list.rows.push_back({i + 1, ids[i], "", 10.0 - static_cast<double>(i)});
  }
  return list;
}

}  // namespace

TEST_CASE("type distribution contrasts the top of the list with the catalog") {
  EntityCatalog catalog = typed_catalog();
  // Person Q0 ranked first; top-1 is 100% person while the catalog has 10%.
  RankedList list = list_for({"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8",
                              "Q9"});
  TypeDistribution dist = type_distribution(catalog, list, 1);
  auto person = static_cast<std::size_t>(EntityType::Person);
  CHECK(dist.global_fractions[person] == doctest::Approx(0.10));
  CHECK(dist.top_fractions[person] == doctest::Approx(1.0));

  double global_sum = 0.0, top_sum = 0.0;
  for (std::size_t t = 0; t < kEntityTypeCount; ++t) {
    global_sum += dist.global_fractions[t];
    top_sum += dist.top_fractions[t];
  }
  CHECK(global_sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(top_sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("identical populations yield identical distributions") {
  EntityCatalog catalog = typed_catalog();
  RankedList list = list_for({"Q0", "Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8",
                              "Q9"});
  TypeDistribution dist = type_distribution(catalog, list, list.rows.size());
  CHECK(dist.global_fractions == dist.top_fractions);
}

TEST_CASE("type distribution rejects a zero or oversized top_n") {
  EntityCatalog catalog = typed_catalog();
  RankedList list = list_for({"Q0", "Q1"});
  CHECK_THROWS_AS(type_distribution(catalog, list, 0), InputError);
  CHECK_THROWS_AS(type_distribution(catalog, list, 3), InputError);
}

namespace {

// Synthetic labeled population whose labels follow one designated feature.
struct SyntheticEval {
  FeatureMatrix raw{std::vector<FeatureRow>{}};
  NormalizedMatrix norm;
  LabelSet labels;
};

SyntheticEval make_synthetic(std::size_t n, std::size_t driving_feature,
                             unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> value(2.0, 2000.0);
  std::vector<FeatureRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureRow row;
    row.kb_id = "E" + std::to_string(i);
    row.language = "en";
    for (std::size_t k = 0; k < kFeatureCount; ++k) row.raw[k] = value(gen);
    // make two features identical to check the symmetry property
    row.raw[7] = row.raw[8];
    rows.push_back(std::move(row));
  }
  SyntheticEval data;
  data.raw = FeatureMatrix(std::move(rows));
  data.norm = normalize(data.raw);
  for (std::size_t i = 0; i < data.raw.size(); ++i) {
    double driver = data.norm.values[i][driving_feature];
    data.labels[data.raw.rows()[i].kb_id] =
        round_half_up_clamped(1.0 + 4.0 * driver);
  }
  return data;
}

}  // namespace

TEST_CASE("the driving feature wins the single-feature comparison") {
  SyntheticEval data = make_synthetic(80, 1, 97);
  TrainTestSplit split = split_labels(data.labels, 5);
  EvalOutcome outcome = single_feature_eval(data.raw, data.norm, data.labels, split, 4);

  REQUIRE(outcome.rows.size() == kFeatureCount + 1);
  CHECK(outcome.rows.back().variant == "all_features");
  double driver_f1 = outcome.rows[1].metrics.f1;
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    if (k == 1) continue;
    CHECK(driver_f1 > outcome.rows[k].metrics.f1);
  }
  // identical features produce identical single-feature rows
  CHECK(outcome.rows[7].metrics.f1 == outcome.rows[8].metrics.f1);
  CHECK(outcome.rows[7].metrics.rmse == outcome.rows[8].metrics.rmse);
  CHECK(outcome.rows[7].coverage == outcome.rows[8].coverage);

  // predictions cover every variant and every test entity
  CHECK(outcome.predictions.size() ==
        (kFeatureCount + 1) * split.test_ids.size());
}
