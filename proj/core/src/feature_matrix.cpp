#include "entityrank/feature_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace entityrank {

namespace {

bool row_key_less(const FeatureRow& a, const FeatureRow& b) {
  return std::tie(a.kb_id, a.language) < std::tie(b.kb_id, b.language);
}

std::size_t present_nonzero_count(const FeatureRow& row) {
  std::size_t n = 0;
  for (const auto& value : row.raw) {
    if (value.has_value() && *value != 0.0) ++n;
  }
  return n;
}

}  // namespace

std::optional<std::size_t> feature_index(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (kFeatureNames[i] == name) return i;
  }
  return std::nullopt;
}

FeatureMatrix::FeatureMatrix(std::vector<FeatureRow> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(), row_key_less);
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i - 1].kb_id == rows_[i].kb_id &&
        rows_[i - 1].language == rows_[i].language) {
      throw InputError("duplicate feature row for kb_id=" + rows_[i].kb_id +
                       " language=" + rows_[i].language);
    }
  }
}

std::optional<std::size_t> FeatureMatrix::row_index(std::string_view kb_id,
                                                    std::string_view language) const {
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), std::make_pair(kb_id, language),
      [](const FeatureRow& row, const std::pair<std::string_view, std::string_view>& key) {
        return std::tie(row.kb_id, row.language) < std::tie(key.first, key.second);
      });
  if (it == rows_.end() || it->kb_id != kb_id || it->language != language) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - rows_.begin());
}

std::vector<std::size_t> FeatureMatrix::rows_of(std::string_view kb_id) const {
  std::vector<std::size_t> out;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), kb_id,
                             [](const FeatureRow& row, std::string_view key) {
                               return row.kb_id < key;
                             });
  for (; it != rows_.end() && it->kb_id == kb_id; ++it) {
    out.push_back(static_cast<std::size_t>(it - rows_.begin()));
  }
  return out;
}

std::vector<std::string> FeatureMatrix::kb_ids() const {
  std::vector<std::string> out;
  for (const FeatureRow& row : rows_) {
    if (out.empty() || out.back() != row.kb_id) out.push_back(row.kb_id);
  }
  return out;
}

std::optional<std::size_t> FeatureMatrix::training_row_index(
    std::string_view kb_id) const {
  std::vector<std::size_t> candidates = rows_of(kb_id);
  if (candidates.empty()) return std::nullopt;
  for (std::size_t index : candidates) {
    if (rows_[index].language == "en") return index;
  }
  std::size_t best = candidates.front();
  for (std::size_t index : candidates) {
    if (present_nonzero_count(rows_[index]) > present_nonzero_count(rows_[best])) {
      best = index;  // candidates are ordered by language, so ties keep the first
    }
  }
  return best;
}

double normalize_value(std::optional<double> raw, double log_max) {
  if (!raw.has_value() || log_max <= 0.0) return 0.0;
  double clamped = std::max(*raw, 1.0);
  return std::log(clamped) / log_max;
}

NormalizedMatrix normalize(const FeatureMatrix& matrix) {
  NormalizedMatrix out;
  out.values.resize(matrix.size());
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    double log_max = 0.0;
    for (const FeatureRow& row : matrix.rows()) {
      if (!row.raw[k].has_value()) continue;
      log_max = std::max(log_max, std::log(std::max(*row.raw[k], 1.0)));
    }
    out.log_max[k] = log_max;
    out.degenerate[k] = (log_max <= 0.0);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      out.values[i][k] = normalize_value(matrix.rows()[i].raw[k], log_max);
    }
  }
  return out;
}

FeatureMatrix assemble(const EntityCatalog& catalog,
                       const std::map<std::string, WikiFeatureTable>& wiki,
                       const std::map<std::string, TripleFeatureRow>& kb_rows) {
  std::vector<FeatureRow> rows;
  rows.reserve(catalog.size());
  for (const EntityRecord& record : catalog.entries()) {
    FeatureRow row;
    row.kb_id = record.kb_id;
    row.language = record.language;

    auto table_it = wiki.find(record.language);
    if (table_it != wiki.end()) {
      const WikiFeatureTable& table = table_it->second;
      std::size_t node = table.index_of(record.page_id);
      double scale = static_cast<double>(table.page_ids.size());
      row.raw[static_cast<std::size_t>(Feature::PageRank)] = table.pagerank[node] * scale;
      row.raw[static_cast<std::size_t>(Feature::OutlinkCount)] = table.outlinks[node];
      row.raw[static_cast<std::size_t>(Feature::InlinkCount)] = table.inlinks[node];
      row.raw[static_cast<std::size_t>(Feature::InOutRatio)] = table.ratio[node];
      row.raw[static_cast<std::size_t>(Feature::CategoryCount)] = table.categories[node];
    }

    auto kb_it = kb_rows.find(record.kb_id);
    if (kb_it != kb_rows.end()) {
      const TripleFeatureRow& kb = kb_it->second;
      row.raw[static_cast<std::size_t>(Feature::SubjectCount)] = kb.subject_count;
      row.raw[static_cast<std::size_t>(Feature::SubjectTypeCount)] = kb.subject_type_count;
      row.raw[static_cast<std::size_t>(Feature::ObjectCount)] = kb.object_count;
      row.raw[static_cast<std::size_t>(Feature::ObjectTypeCount)] = kb.object_type_count;
      if (kb.social_score.has_value()) {
        row.raw[static_cast<std::size_t>(Feature::SocialScore)] = *kb.social_score;
      }
    }
    rows.push_back(std::move(row));
  }
  return FeatureMatrix(std::move(rows));
}

}  // namespace entityrank
