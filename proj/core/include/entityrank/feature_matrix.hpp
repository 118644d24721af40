#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/kb_features.hpp"
#include "entityrank/wiki_features.hpp"

namespace entityrank {

inline constexpr std::size_t kFeatureCount = 10;

// Fixed feature order, identical across train, test and scoring.
enum class Feature : std::size_t {
  PageRank = 0,
  OutlinkCount,
  InlinkCount,
  InOutRatio,
  CategoryCount,
  SubjectCount,
  SubjectTypeCount,
  ObjectCount,
  ObjectTypeCount,
  SocialScore,
};

inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "pagerank",      "outlink_count",      "inlink_count",
    "in_out_ratio",  "category_count",     "subject_count",
    "subject_type_count", "object_count",  "object_type_count",
    "social_score",
};

std::optional<std::size_t> feature_index(std::string_view name);

// One scored unit: an entity's page in one language. An entity present in k
// languages yields k rows sharing its kb_id.
struct FeatureRow {
  std::string kb_id;
  std::string language;
  std::array<std::optional<double>, kFeatureCount> raw;
};

// Raw per-entity feature values. Rows are kept sorted by (kb_id, language);
// duplicates are fatal. Immutable once constructed.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::vector<FeatureRow> rows);

  const std::vector<FeatureRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::optional<std::size_t> row_index(std::string_view kb_id,
                                       std::string_view language) const;
  // Indices of all rows of one entity, ordered by language.
  std::vector<std::size_t> rows_of(std::string_view kb_id) const;
  // Sorted distinct kb ids.
  std::vector<std::string> kb_ids() const;

  // The row used when fitting and evaluating against labels: the English row
  // when present, otherwise the row with the most present-and-nonzero
  // features (ties broken by ascending language code).
  std::optional<std::size_t> training_row_index(std::string_view kb_id) const;

 private:
  std::vector<FeatureRow> rows_;
};

// Normalized values parallel to the raw matrix rows. Normalization follows
//   f_hat = log(max(raw, 1)) / log_max      with  log_max = max over rows,
// absent values map to exactly 0, and the arg-max row of each feature maps
// to exactly 1. Features with no value above 1 anywhere are degenerate and
// contribute 0 everywhere.
struct NormalizedMatrix {
  std::vector<std::array<double, kFeatureCount>> values;
  std::array<double, kFeatureCount> log_max{};
  std::array<bool, kFeatureCount> degenerate{};
};

NormalizedMatrix normalize(const FeatureMatrix& matrix);

// Normalizes a single raw value with a stored denominator, for scoring
// entities that were not part of the normalization population.
double normalize_value(std::optional<double> raw, double log_max);

// Builds the raw matrix: one row per catalog record; link-graph features come
// from the record's language, triple features are shared across an entity's
// rows, and the pagerank probability is pre-scaled by the graph's node count
// so that typical values exceed 1 (the log normalization clamps at 1).
FeatureMatrix assemble(const EntityCatalog& catalog,
                       const std::map<std::string, WikiFeatureTable>& wiki,
                       const std::map<std::string, TripleFeatureRow>& kb_rows);

}  // namespace entityrank
