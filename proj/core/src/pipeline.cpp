#include "entityrank/pipeline.hpp"

#include <filesystem>

#include "entityrank/feature_matrix.hpp"
#include "entityrank/kb_features.hpp"
#include "entityrank/link_graph.hpp"
#include "entityrank/pagerank.hpp"
#include "entityrank/ranking.hpp"
#include "entityrank/tsv.hpp"
#include "entityrank/wiki_features.hpp"

namespace entityrank::pipeline {

namespace fs = std::filesystem;

void PipelineConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw InputError("damping must lie in (0,1)");
  }
  if (!(pagerank_tol > 0.0)) throw InputError("pagerank tolerance must be > 0");
  if (pagerank_max_iters == 0) throw InputError("pagerank max iterations must be >= 1");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie in (0,1)");
  }
  if (positive_threshold < 1 || positive_threshold > 5) {
    throw InputError("positive threshold must lie in [1,5]");
  }
  if (type_predicate.empty() || social_predicate.empty()) {
    throw InputError("predicates must be non-empty");
  }
  if (output_dir.empty()) throw InputError("output directory must be set");
}

namespace {

std::uint64_t fnv1a(std::string_view text, std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

std::uint64_t config_hash(const PipelineConfig& config) {
  std::string canonical;
  auto field = [&canonical](std::string_view key, const std::string& value) {
    canonical += key;
    canonical += '=';
    canonical += value;
    canonical += '\n';
  };
  field("categories_path", config.categories_path);
  field("count_distinct", config.count_distinct ? "1" : "0");
  field("damping", tsv::format_real17(config.damping));
  field("labels_path", config.labels_path);
  field("links_path", config.links_path);
  field("output_dir", config.output_dir);
  field("pagerank_max_iters", std::to_string(config.pagerank_max_iters));
  field("pagerank_tol", tsv::format_real17(config.pagerank_tol));
  field("pages_path", config.pages_path);
  field("positive_threshold", std::to_string(config.positive_threshold));
  field("social_predicate", config.social_predicate);
  field("social_scores_path", config.social_scores_path);
  field("split_seed", std::to_string(config.split_seed));
  field("top_n", std::to_string(config.top_n));
  field("train_fraction", tsv::format_real17(config.train_fraction));
  field("triples_path", config.triples_path);
  field("type_predicate", config.type_predicate);
  return fnv1a(canonical);
}

namespace files {

std::string ranked_list(std::string_view language) {
  return "ranked_" + std::string(language) + ".tsv";
}

std::string type_report(std::string_view language) {
  return "type_report_" + std::string(language) + ".tsv";
}

}  // namespace files

std::string output_path(const PipelineConfig& config, std::string_view file) {
  return (fs::path(config.output_dir) / file).string();
}

namespace {

store::StageHeader stage_header(const PipelineConfig& config, std::string_view stage) {
  return {std::string(stage), 1, config_hash(config)};
}

void require_exists(const std::string& path) {
  if (!fs::exists(path)) throw InputError("missing required file: " + path);
}

void ensure_output_dir(const PipelineConfig& config) {
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw InputError("cannot create output directory " + config.output_dir + ": " +
                     ec.message());
  }
}

struct Stores {
  EntityCatalog catalog;
  LinkEdgeList links;
  CategoryMap categories;
  TripleStore triples;
  SocialScoreMap social_scores;
};

Stores read_feature_stores(const PipelineConfig& config) {
  for (std::string_view file :
       {files::kCatalog, files::kLinks, files::kCategories, files::kTriples,
        files::kSocialScores}) {
    require_exists(output_path(config, file));
  }
  Stores stores;
  stores.catalog = store::read_catalog(output_path(config, files::kCatalog));
  stores.links = store::read_links(output_path(config, files::kLinks), stores.catalog);
  stores.categories =
      store::read_categories(output_path(config, files::kCategories), stores.catalog);
  stores.triples = store::read_triples(output_path(config, files::kTriples));
  stores.social_scores =
      store::read_social_scores(output_path(config, files::kSocialScores));
  return stores;
}

FeatureMatrix read_raw(const PipelineConfig& config) {
  require_exists(output_path(config, files::kRawMatrix));
  return store::read_raw_matrix(output_path(config, files::kRawMatrix));
}

NormalizedMatrix read_norm(const PipelineConfig& config, const FeatureMatrix& raw) {
  require_exists(output_path(config, files::kNormalizedMatrix));
  require_exists(output_path(config, files::kNormalization));
  return store::read_normalized_matrix(output_path(config, files::kNormalizedMatrix),
                                       output_path(config, files::kNormalization), raw);
}

LabelSet read_stored_labels(const PipelineConfig& config, const EntityCatalog& catalog) {
  require_exists(output_path(config, files::kLabels));
  return store::read_labels(output_path(config, files::kLabels), catalog);
}

}  // namespace

IngestResult cmd_ingest(const PipelineConfig& config) {
  config.validate();
  for (const std::string& path :
       {config.pages_path, config.links_path, config.categories_path,
        config.triples_path, config.labels_path, config.social_scores_path}) {
    require_exists(path);
  }
  ensure_output_dir(config);
  auto header = stage_header(config, "ingest");

  IngestResult result;
  result.reports.resize(6);
  EntityCatalog catalog = parse_pages(config.pages_path, result.reports[0]);
  LinkEdgeList links = parse_links(config.links_path, catalog, result.reports[1]);
  CategoryMap categories =
      parse_categories(config.categories_path, catalog, result.reports[2]);
  TripleStore triples = parse_triples(config.triples_path, result.reports[3]);
  LabelSet labels = parse_labels(config.labels_path, catalog, result.reports[4]);
  SocialScoreMap social_scores =
      parse_external_scores(config.social_scores_path, result.reports[5]);

  store::write_catalog(output_path(config, files::kCatalog), header, catalog);
  store::write_links(output_path(config, files::kLinks), header, links);
  store::write_categories(output_path(config, files::kCategories), header, categories);
  store::write_triples(output_path(config, files::kTriples), header, triples);
  store::write_labels(output_path(config, files::kLabels), header, labels);
  store::write_social_scores(output_path(config, files::kSocialScores), header,
                             social_scores);
  store::write_ingest_report(output_path(config, files::kIngestReport), header,
                             result.reports);
  return result;
}

FeaturesResult cmd_features(const PipelineConfig& config) {
  config.validate();
  Stores stores = read_feature_stores(config);
  ensure_output_dir(config);
  auto header = stage_header(config, "features");

  PageRankOptions pagerank_options{config.damping, config.pagerank_max_iters,
                                   config.pagerank_tol};
  std::map<std::string, WikiFeatureTable> wiki;
  FeaturesResult result;
  for (const std::string& language : stores.catalog.languages()) {
    static const std::vector<LinkEdge> kNoEdges;
    auto edges_it = stores.links.by_language.find(language);
    const std::vector<LinkEdge>& edges =
        edges_it == stores.links.by_language.end() ? kNoEdges : edges_it->second;
    LinkGraph graph = LinkGraph::build(edges, stores.catalog, language);
    wiki.emplace(language,
                 compute_wiki_features(graph, stores.categories, pagerank_options));
    result.languages.push_back(language);
  }

  KbFeatureConfig kb_config{config.type_predicate, config.social_predicate,
                            config.count_distinct};
  TripleFeatureExtractor extractor(stores.triples, kb_config);
  std::map<std::string, TripleFeatureRow> kb_rows;
  for (const std::string& kb_id : stores.catalog.kb_ids()) {
    kb_rows.emplace(kb_id, extractor.row_for(kb_id, stores.social_scores));
  }

  FeatureMatrix raw = assemble(stores.catalog, wiki, kb_rows);
  NormalizedMatrix norm = normalize(raw);
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    if (norm.degenerate[k]) {
      result.degenerate_features.emplace_back(kFeatureNames[k]);
    }
  }

  store::write_wiki_features(output_path(config, files::kWikiFeatures), header, wiki);
  store::write_kb_features(output_path(config, files::kKbFeatures), header, kb_rows);
  store::write_raw_matrix(output_path(config, files::kRawMatrix), header, raw);
  store::write_normalized_matrix(output_path(config, files::kNormalizedMatrix), header,
                                 raw, norm);
  store::write_normalization(output_path(config, files::kNormalization), header, norm);
  return result;
}

TrainResult cmd_train(const PipelineConfig& config) {
  config.validate();
  require_exists(output_path(config, files::kCatalog));
  EntityCatalog catalog = store::read_catalog(output_path(config, files::kCatalog));
  LabelSet labels = read_stored_labels(config, catalog);
  FeatureMatrix raw = read_raw(config);
  NormalizedMatrix norm = read_norm(config, raw);
  ensure_output_dir(config);
  auto header = stage_header(config, "train");

  TrainTestSplit split =
      split_labels(labels, config.split_seed, config.train_fraction);
  EvalOutcome outcome =
      single_feature_eval(raw, norm, labels, split, config.positive_threshold);

  TrainResult result;
  result.weights = outcome.models.back().weights;  // all_features model
  result.report = outcome.rows;
  result.train_size = split.train_ids.size();
  result.test_size = split.test_ids.size();

  store::write_weights(output_path(config, files::kWeights), header, result.weights);
  store::write_variants(output_path(config, files::kVariants), header, outcome.models);
  store::write_split(output_path(config, files::kSplit), header, split);
  store::write_predictions(output_path(config, files::kPredictions), header,
                           outcome.predictions);
  store::write_eval_report(output_path(config, files::kEvalReport), header,
                           outcome.rows);
  return result;
}

EvalResult cmd_eval(const PipelineConfig& config) {
  config.validate();
  require_exists(output_path(config, files::kCatalog));
  EntityCatalog catalog = store::read_catalog(output_path(config, files::kCatalog));
  LabelSet labels = read_stored_labels(config, catalog);
  FeatureMatrix raw = read_raw(config);
  NormalizedMatrix norm = read_norm(config, raw);
  require_exists(output_path(config, files::kVariants));
  require_exists(output_path(config, files::kSplit));
  std::vector<VariantModel> models =
      store::read_variants(output_path(config, files::kVariants));
  TrainTestSplit split = store::read_split(output_path(config, files::kSplit));
  split.seed = config.split_seed;
  split.train_fraction = config.train_fraction;
  auto header = stage_header(config, "eval");

  EvalOutcome outcome = evaluate_variants(std::move(models), raw, norm, labels, split,
                                          config.positive_threshold);
  store::write_predictions(output_path(config, files::kPredictions), header,
                           outcome.predictions);
  store::write_eval_report(output_path(config, files::kEvalReport), header,
                           outcome.rows);
  return {outcome.rows};
}

RankResult cmd_rank(const PipelineConfig& config) {
  config.validate();
  require_exists(output_path(config, files::kCatalog));
  require_exists(output_path(config, files::kWeights));
  EntityCatalog catalog = store::read_catalog(output_path(config, files::kCatalog));
  FeatureMatrix raw = read_raw(config);
  NormalizedMatrix norm = read_norm(config, raw);
  WeightVector weights = store::read_weights(output_path(config, files::kWeights));
  ensure_output_dir(config);
  auto header = stage_header(config, "rank");

  std::map<std::string, std::vector<ScoredEntity>> scored_by_language;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const FeatureRow& row = raw.rows()[i];
    const EntityRecord* record = catalog.find(row.kb_id, row.language);
    if (record == nullptr) {
      throw InputError("matrix row " + row.kb_id + "/" + row.language +
                       " missing from the catalog store");
    }
    scored_by_language[row.language].push_back(
        {row.kb_id, record->title, score(weights, norm.values[i])});
  }

  RankResult result;
  for (auto& [language, scored] : scored_by_language) {
    RankedList list = rank(std::move(scored), language);
    if (config.top_n > 0 && config.top_n < list.rows.size()) {
      list.rows.resize(config.top_n);
    }
    store::write_ranked_list(output_path(config, files::ranked_list(language)), header,
                             list);
    result.languages.push_back(language);
    result.list_sizes.push_back(list.rows.size());
  }
  return result;
}

ReportResult cmd_report(const PipelineConfig& config) {
  config.validate();
  require_exists(output_path(config, files::kCatalog));
  EntityCatalog catalog = store::read_catalog(output_path(config, files::kCatalog));
  ensure_output_dir(config);
  auto header = stage_header(config, "report");

  ReportResult result;
  for (const std::string& language : catalog.languages()) {
    std::string list_path = output_path(config, files::ranked_list(language));
    require_exists(list_path);
    RankedList list = store::read_ranked_list(list_path, language);
    std::size_t top_n = config.top_n > 0 ? std::min(config.top_n, list.rows.size())
                                         : list.rows.size();
    TypeDistribution distribution = type_distribution(catalog, list, top_n);
    store::write_type_report(output_path(config, files::type_report(language)), header,
                             distribution);
    result.languages.push_back(language);
  }
  return result;
}

}  // namespace entityrank::pipeline
