#include "entityrank/store_io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <fstream>

#include "entityrank/tsv.hpp"

namespace entityrank::store {

namespace {

class TableWriter {
 public:
  TableWriter(const std::string& path, const StageHeader& header,
              std::string_view columns)
      : path_(path),
        out_(path, std::ios::binary | std::ios::trunc),
        uncaught_(std::uncaught_exceptions()) {
    if (!out_) throw InputError("cannot write file: " + path);
    out_ << header_line(header) << '\n';
    out_ << "# columns: " << columns << '\n';
  }

  void row(const std::string& line) { out_ << line << '\n'; }

  // Surfaces write failures unless the writer is being unwound already.
  ~TableWriter() noexcept(false) {
    out_.flush();
    if (!out_ && std::uncaught_exceptions() == uncaught_) {
      throw InputError("write failed: " + path_);
    }
  }

 private:
  std::string path_;
  std::ofstream out_;
  int uncaught_;
};

ParseReport reject_free(ParseReport report, const std::string& path) {
  if (report.rejected() != 0) {
    throw InputError("corrupt store file (rejected rows): " + path);
  }
  return report;
}

std::string join(std::initializer_list<std::string> fields) {
  std::string line;
  for (const std::string& field : fields) {
    if (!line.empty()) line += '\t';
    line += field;
  }
  return line;
}

}  // namespace

std::string header_line(const StageHeader& header) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "# entityrank stage=%s stage_version=%d config_hash=%016" PRIx64,
                header.stage.c_str(), header.version, header.config_hash);
  return buf;
}

void write_catalog(const std::string& path, const StageHeader& header,
                   const EntityCatalog& catalog) {
  TableWriter out(path, header, "kb_id\tlanguage\tpage_id\ttitle\tentity_type");
  std::vector<const EntityRecord*> records;
  records.reserve(catalog.size());
  for (const EntityRecord& record : catalog.entries()) records.push_back(&record);
  std::sort(records.begin(), records.end(),
            [](const EntityRecord* a, const EntityRecord* b) {
              return std::tie(a->kb_id, a->language) < std::tie(b->kb_id, b->language);
            });
  for (const EntityRecord* record : records) {
    out.row(join({record->kb_id, record->language, std::to_string(record->page_id),
                  record->title, to_string(record->entity_type)}));
  }
}

EntityCatalog read_catalog(const std::string& path) {
  ParseReport report;
  EntityCatalog catalog = parse_pages(path, report);
  reject_free(report, path);
  return catalog;
}

void write_links(const std::string& path, const StageHeader& header,
                 const LinkEdgeList& links) {
  TableWriter out(path, header, "language\tsrc_page_id\tdst_page_id");
  for (const auto& [language, edges] : links.by_language) {
    std::vector<LinkEdge> sorted(edges);
    std::sort(sorted.begin(), sorted.end());
    for (const LinkEdge& edge : sorted) {
      out.row(join({language, std::to_string(edge.src), std::to_string(edge.dst)}));
    }
  }
}

LinkEdgeList read_links(const std::string& path, const EntityCatalog& catalog) {
  ParseReport report;
  LinkEdgeList links = parse_links(path, catalog, report);
  reject_free(report, path);
  return links;
}

void write_categories(const std::string& path, const StageHeader& header,
                      const CategoryMap& categories) {
  TableWriter out(path, header, "language\tpage_id\tcategory_name");
  for (const auto& [key, names] : categories) {
    for (const std::string& name : names) {
      out.row(join({key.first, std::to_string(key.second), name}));
    }
  }
}

CategoryMap read_categories(const std::string& path, const EntityCatalog& catalog) {
  ParseReport report;
  CategoryMap categories = parse_categories(path, catalog, report);
  reject_free(report, path);
  return categories;
}

void write_triples(const std::string& path, const StageHeader& header,
                   const TripleStore& store) {
  TableWriter out(path, header, "subject_kb_id\tpredicate\tobject");
  std::vector<const Triple*> triples;
  triples.reserve(store.size());
  for (const Triple& triple : store.triples()) triples.push_back(&triple);
  std::sort(triples.begin(), triples.end(), [](const Triple* a, const Triple* b) {
    return std::tie(a->subject, a->predicate, a->object.is_entity, a->object.value) <
           std::tie(b->subject, b->predicate, b->object.is_entity, b->object.value);
  });
  for (const Triple* triple : triples) {
    std::string object = triple->object.is_entity ? "kb:" + triple->object.value
                                                  : triple->object.value;
    out.row(join({triple->subject, triple->predicate, object}));
  }
}

TripleStore read_triples(const std::string& path) {
  ParseReport report;
  TripleStore store = parse_triples(path, report);
  reject_free(report, path);
  return store;
}

void write_labels(const std::string& path, const StageHeader& header,
                  const LabelSet& labels) {
  TableWriter out(path, header, "kb_id\tlabel");
  for (const auto& [kb_id, label] : labels) {
    out.row(join({kb_id, std::to_string(label)}));
  }
}

LabelSet read_labels(const std::string& path, const EntityCatalog& catalog) {
  ParseReport report;
  LabelSet labels = parse_labels(path, catalog, report);
  reject_free(report, path);
  return labels;
}

void write_social_scores(const std::string& path, const StageHeader& header,
                         const SocialScoreMap& scores) {
  TableWriter out(path, header, "social_id\tscore");
  for (const auto& [social_id, score] : scores) {
    out.row(join({social_id, tsv::format_real17(score)}));
  }
}

SocialScoreMap read_social_scores(const std::string& path) {
  ParseReport report;
  SocialScoreMap scores = parse_external_scores(path, report);
  reject_free(report, path);
  return scores;
}

void write_ingest_report(const std::string& path, const StageHeader& header,
                         std::span<const ParseReport> reports) {
  TableWriter out(
      path, header,
      "source\tdata_lines\taccepted\tmalformed\tout_of_range\tunknown_ref\tself_loops");
  for (const ParseReport& report : reports) {
    out.row(join({report.source, std::to_string(report.data_lines),
                  std::to_string(report.accepted), std::to_string(report.malformed),
                  std::to_string(report.out_of_range),
                  std::to_string(report.unknown_ref),
                  std::to_string(report.self_loops)}));
  }
}

void write_wiki_features(const std::string& path, const StageHeader& header,
                         const std::map<std::string, WikiFeatureTable>& tables) {
  TableWriter out(path, header,
                  "language\tpage_id\tpagerank\tinlinks\toutlinks\tin_out_ratio\t"
                  "category_count");
  for (const auto& [language, table] : tables) {
    for (std::size_t i = 0; i < table.page_ids.size(); ++i) {
      out.row(join({language, std::to_string(table.page_ids[i]),
                    tsv::format_real17(table.pagerank[i]),
                    std::to_string(table.inlinks[i]), std::to_string(table.outlinks[i]),
                    tsv::format_real17(table.ratio[i]),
                    std::to_string(table.categories[i])}));
    }
  }
}

void write_kb_features(const std::string& path, const StageHeader& header,
                       const std::map<std::string, TripleFeatureRow>& rows) {
  TableWriter out(path, header,
                  "kb_id\tsubject_count\tsubject_type_count\tobject_count\t"
                  "object_type_count\tsocial_score");
  for (const auto& [kb_id, row] : rows) {
    out.row(join({kb_id, std::to_string(row.subject_count),
                  std::to_string(row.subject_type_count),
                  std::to_string(row.object_count),
                  std::to_string(row.object_type_count),
                  row.social_score ? tsv::format_real17(*row.social_score)
                                   : std::string("-")}));
  }
}

namespace {

std::string matrix_columns() {
  std::string columns = "kb_id\tlanguage";
  for (std::string_view name : kFeatureNames) {
    columns += '\t';
    columns += name;
  }
  return columns;
}

}  // namespace

void write_raw_matrix(const std::string& path, const StageHeader& header,
                      const FeatureMatrix& matrix) {
  TableWriter out(path, header, matrix_columns());
  for (const FeatureRow& row : matrix.rows()) {
    std::string line = row.kb_id + '\t' + row.language;
    for (const auto& value : row.raw) {
      line += '\t';
      line += value ? tsv::format_real17(*value) : std::string("-");
    }
    out.row(line);
  }
}

FeatureMatrix read_raw_matrix(const std::string& path) {
  std::vector<FeatureRow> rows;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    auto fields = tsv::split_fields(line);
    if (fields.size() != 2 + kFeatureCount) {
      throw InputError("corrupt matrix row at " + path + ":" +
                       std::to_string(line_number));
    }
    FeatureRow row;
    row.kb_id = std::string(fields[0]);
    row.language = std::string(fields[1]);
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      std::string_view field = fields[2 + k];
      if (field == "-") continue;
      auto value = tsv::parse_real(field);
      if (!value) {
        throw InputError("corrupt matrix value at " + path + ":" +
                         std::to_string(line_number));
      }
      row.raw[k] = *value;
    }
    rows.push_back(std::move(row));
  });
  return FeatureMatrix(std::move(rows));
}

void write_normalized_matrix(const std::string& path, const StageHeader& header,
                             const FeatureMatrix& raw, const NormalizedMatrix& norm) {
  TableWriter out(path, header, matrix_columns());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string line = raw.rows()[i].kb_id + '\t' + raw.rows()[i].language;
    for (double value : norm.values[i]) {
      line += '\t';
      line += tsv::format_real17(value);
    }
    out.row(line);
  }
}

void write_normalization(const std::string& path, const StageHeader& header,
                         const NormalizedMatrix& norm) {
  TableWriter out(path, header, "feature_name\tlog_max_denominator");
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    out.row(join({std::string(kFeatureNames[k]), tsv::format_real17(norm.log_max[k])}));
  }
}

NormalizedMatrix read_normalized_matrix(const std::string& matrix_path,
                                        const std::string& normalization_path,
                                        const FeatureMatrix& raw) {
  NormalizedMatrix norm;
  norm.values.reserve(raw.size());
  std::size_t next_row = 0;
  tsv::for_each_data_line(matrix_path, [&](std::size_t line_number,
                                           std::string_view line) {
    auto fields = tsv::split_fields(line);
    if (fields.size() != 2 + kFeatureCount || next_row >= raw.size() ||
        fields[0] != raw.rows()[next_row].kb_id ||
        fields[1] != raw.rows()[next_row].language) {
      throw InputError("normalized matrix does not align with the raw matrix at " +
                       matrix_path + ":" + std::to_string(line_number));
    }
    std::array<double, kFeatureCount> values{};
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      auto value = tsv::parse_real(fields[2 + k]);
      if (!value) {
        throw InputError("corrupt normalized value at " + matrix_path + ":" +
                         std::to_string(line_number));
      }
      values[k] = *value;
    }
    norm.values.push_back(values);
    ++next_row;
  });
  if (next_row != raw.size()) {
    throw InputError("normalized matrix is shorter than the raw matrix: " + matrix_path);
  }

  std::size_t features_seen = 0;
  tsv::for_each_data_line(normalization_path, [&](std::size_t line_number,
                                                  std::string_view line) {
    auto fields = tsv::split_fields(line);
    auto index = fields.size() == 2 ? feature_index(fields[0]) : std::nullopt;
    auto value = fields.size() == 2 ? tsv::parse_real(fields[1]) : std::nullopt;
    if (!index || !value) {
      throw InputError("corrupt normalization entry at " + normalization_path + ":" +
                       std::to_string(line_number));
    }
    norm.log_max[*index] = *value;
    norm.degenerate[*index] = (*value <= 0.0);
    ++features_seen;
  });
  if (features_seen != kFeatureCount) {
    throw InputError("normalization file misses features: " + normalization_path);
  }
  return norm;
}

namespace {
constexpr std::string_view kInterceptTerm = "__intercept__";
}

void write_weights(const std::string& path, const StageHeader& header,
                   const WeightVector& weights) {
  TableWriter out(path, header, "feature_name\tweight");
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    out.row(join({std::string(kFeatureNames[k]), tsv::format_real17(weights.weights[k])}));
  }
  out.row(join({std::string(kInterceptTerm), tsv::format_real17(weights.intercept)}));
}

WeightVector read_weights(const std::string& path) {
  WeightVector weights;
  bool intercept_seen = false;
  std::size_t features_seen = 0;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    auto fields = tsv::split_fields(line);
    auto value = fields.size() == 2 ? tsv::parse_real(fields[1]) : std::nullopt;
    if (fields.size() != 2 || !value) {
      throw InputError("corrupt weights entry at " + path + ":" +
                       std::to_string(line_number));
    }
    if (fields[0] == kInterceptTerm) {
      weights.intercept = *value;
      intercept_seen = true;
      return;
    }
    auto index = feature_index(fields[0]);
    if (!index) {
      throw InputError("unknown feature in weights file: " + std::string(fields[0]));
    }
    weights.weights[*index] = *value;
    ++features_seen;
  });
  if (!intercept_seen || features_seen != kFeatureCount) {
    throw InputError("incomplete weights file: " + path);
  }
  return weights;
}

void write_variants(const std::string& path, const StageHeader& header,
                    std::span<const VariantModel> models) {
  TableWriter out(path, header, "variant\tterm\tvalue");
  for (const VariantModel& model : models) {
    for (std::size_t k : model.active_features) {
      out.row(join({model.variant, std::string(kFeatureNames[k]),
                    tsv::format_real17(model.weights.weights[k])}));
    }
    out.row(join({model.variant, std::string(kInterceptTerm),
                  tsv::format_real17(model.weights.intercept)}));
  }
}

std::vector<VariantModel> read_variants(const std::string& path) {
  std::vector<VariantModel> models;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    auto fields = tsv::split_fields(line);
    auto value = fields.size() == 3 ? tsv::parse_real(fields[2]) : std::nullopt;
    if (fields.size() != 3 || !value) {
      throw InputError("corrupt variants entry at " + path + ":" +
                       std::to_string(line_number));
    }
    if (models.empty() || models.back().variant != fields[0]) {
      models.push_back({std::string(fields[0]), {}, {}});
    }
    VariantModel& model = models.back();
    if (fields[1] == kInterceptTerm) {
      model.weights.intercept = *value;
      return;
    }
    auto index = feature_index(fields[1]);
    if (!index) {
      throw InputError("unknown feature in variants file: " + std::string(fields[1]));
    }
    model.active_features.push_back(*index);
    model.weights.weights[*index] = *value;
  });
  if (models.empty()) throw InputError("empty variants file: " + path);
  return models;
}

void write_split(const std::string& path, const StageHeader& header,
                 const TrainTestSplit& split) {
  TableWriter out(path, header, "kb_id\trole");
  std::vector<std::pair<std::string, const char*>> rows;
  rows.reserve(split.train_ids.size() + split.test_ids.size());
  for (const std::string& kb_id : split.train_ids) rows.emplace_back(kb_id, "train");
  for (const std::string& kb_id : split.test_ids) rows.emplace_back(kb_id, "test");
  std::sort(rows.begin(), rows.end());
  for (const auto& [kb_id, role] : rows) out.row(join({kb_id, role}));
}

TrainTestSplit read_split(const std::string& path) {
  TrainTestSplit split;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    auto fields = tsv::split_fields(line);
    if (fields.size() != 2 || (fields[1] != "train" && fields[1] != "test")) {
      throw InputError("corrupt split entry at " + path + ":" +
                       std::to_string(line_number));
    }
    if (fields[1] == "train") {
      split.train_ids.emplace_back(fields[0]);
    } else {
      split.test_ids.emplace_back(fields[0]);
    }
  });
  if (split.train_ids.empty() || split.test_ids.empty()) {
    throw InputError("split file misses a train or test side: " + path);
  }
  return split;
}

void write_predictions(const std::string& path, const StageHeader& header,
                       std::span<const Prediction> predictions) {
  TableWriter out(path, header, "variant\tkb_id\traw_score\trounded\tlabel");
  for (const Prediction& prediction : predictions) {
    out.row(join({prediction.variant, prediction.kb_id,
                  tsv::format_real17(prediction.raw_score),
                  std::to_string(prediction.rounded), std::to_string(prediction.label)}));
  }
}

void write_eval_report(const std::string& path, const StageHeader& header,
                       std::span<const EvalRow> rows) {
  TableWriter out(path, header, "variant\tprecision\trecall\tf1\tcoverage\trmse");
  for (const EvalRow& row : rows) {
    out.row(join({row.variant, tsv::format_real6(row.metrics.precision),
                  tsv::format_real6(row.metrics.recall),
                  tsv::format_real6(row.metrics.f1), tsv::format_real6(row.coverage),
                  tsv::format_real6(row.metrics.rmse)}));
  }
}

void write_ranked_list(const std::string& path, const StageHeader& header,
                       const RankedList& list) {
  TableWriter out(path, header, "rank\tkb_id\ttitle\tlanguage\tscore");
  for (const RankedRow& row : list.rows) {
    out.row(join({std::to_string(row.rank), row.kb_id, row.title, list.language,
                  tsv::format_real6(row.score)}));
  }
}

RankedList read_ranked_list(const std::string& path, const std::string& language) {
  RankedList list;
  list.language = language;
  tsv::for_each_data_line(path, [&](std::size_t line_number, std::string_view line) {
    auto fields = tsv::split_fields(line);
    auto rank_value = fields.size() == 5 ? tsv::parse_int(fields[0]) : std::nullopt;
    auto score_value = fields.size() == 5 ? tsv::parse_real(fields[4]) : std::nullopt;
    if (fields.size() != 5 || !rank_value || !score_value || fields[3] != language) {
      throw InputError("corrupt ranked list entry at " + path + ":" +
                       std::to_string(line_number));
    }
    list.rows.push_back({static_cast<std::size_t>(*rank_value), std::string(fields[1]),
                         std::string(fields[2]), *score_value});
  });
  return list;
}

void write_type_report(const std::string& path, const StageHeader& header,
                       const TypeDistribution& distribution) {
  TableWriter out(path, header, "population\tentity_type\tfraction");
  constexpr std::array<EntityType, kEntityTypeCount> order = {
      EntityType::Person, EntityType::Location, EntityType::Organization,
      EntityType::Misc};
  for (EntityType type : order) {
    out.row(join({"global", to_string(type),
                  tsv::format_real6(
                      distribution.global_fractions[static_cast<std::size_t>(type)])}));
  }
  for (EntityType type : order) {
    out.row(join({"top", to_string(type),
                  tsv::format_real6(
                      distribution.top_fractions[static_cast<std::size_t>(type)])}));
  }
}

}  // namespace entityrank::store
