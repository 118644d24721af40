#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "entityrank/evaluation.hpp"
#include "entityrank/ingest.hpp"
#include "entityrank/store_io.hpp"

namespace entityrank::pipeline {

// Single configuration surface for every stage. All randomness flows from
// split_seed; a config is hashed into every output file header.
struct PipelineConfig {
  std::string pages_path;
  std::string links_path;
  std::string categories_path;
  std::string triples_path;
  std::string labels_path;
  std::string social_scores_path;
  std::string output_dir = "out";

  double damping = 0.85;
  double pagerank_tol = 1e-9;
  std::size_t pagerank_max_iters = 100;
  std::uint64_t split_seed = 42;
  double train_fraction = 0.8;
  int positive_threshold = 4;
  std::size_t top_n = 0;  // 0 means the full list
  std::string type_predicate = "type";
  std::string social_predicate = "social_profile";
  bool count_distinct = false;

  void validate() const;  // throws InputError on out-of-range settings
};

std::uint64_t config_hash(const PipelineConfig& config);

// Staged file names inside output_dir.
namespace files {
inline constexpr std::string_view kCatalog = "catalog.tsv";
inline constexpr std::string_view kLinks = "links.tsv";
inline constexpr std::string_view kCategories = "categories.tsv";
inline constexpr std::string_view kTriples = "triples.tsv";
inline constexpr std::string_view kLabels = "labels.tsv";
inline constexpr std::string_view kSocialScores = "social_scores.tsv";
inline constexpr std::string_view kIngestReport = "ingest_report.tsv";
inline constexpr std::string_view kWikiFeatures = "wiki_features.tsv";
inline constexpr std::string_view kKbFeatures = "kb_features.tsv";
inline constexpr std::string_view kRawMatrix = "raw_matrix.tsv";
inline constexpr std::string_view kNormalizedMatrix = "normalized_matrix.tsv";
inline constexpr std::string_view kNormalization = "normalization.tsv";
inline constexpr std::string_view kWeights = "weights.tsv";
inline constexpr std::string_view kVariants = "variants.tsv";
inline constexpr std::string_view kSplit = "split.tsv";
inline constexpr std::string_view kPredictions = "predictions.tsv";
inline constexpr std::string_view kEvalReport = "eval_report.tsv";
// Per-language files.
std::string ranked_list(std::string_view language);
std::string type_report(std::string_view language);
}  // namespace files

std::string output_path(const PipelineConfig& config, std::string_view file);

struct IngestResult {
  std::vector<ParseReport> reports;  // pages, links, categories, triples, labels, social
};
// Parses the six input files, writes validated stores and the ingestion
// report. Fatal parse errors (duplicate catalog keys, unreadable files)
// propagate as InputError.
IngestResult cmd_ingest(const PipelineConfig& config);

struct FeaturesResult {
  std::vector<std::string> languages;
  std::vector<std::string> degenerate_features;  // normalized to zero everywhere
};
// Builds per-language link graphs, runs pagerank, extracts triple features,
// assembles and normalizes the feature matrix.
FeaturesResult cmd_features(const PipelineConfig& config);

struct TrainResult {
  WeightVector weights;          // combined model
  std::vector<EvalRow> report;   // per-feature rows then all_features
  std::size_t train_size = 0;
  std::size_t test_size = 0;
};
// Splits the labels by seed, fits the combined and per-feature models and
// writes weights, split, predictions and the evaluation report.
TrainResult cmd_train(const PipelineConfig& config);

struct EvalResult {
  std::vector<EvalRow> report;
};
// Re-evaluates the stored models on the stored split (useful for changing
// the positive threshold without refitting).
EvalResult cmd_eval(const PipelineConfig& config);

struct RankResult {
  std::vector<std::string> languages;
  std::vector<std::size_t> list_sizes;
};
// Scores every row and writes one ranked list per language, truncated to
// top_n when set.
RankResult cmd_rank(const PipelineConfig& config);

struct ReportResult {
  std::vector<std::string> languages;
};
// Writes the global-versus-top entity-type distribution per language.
ReportResult cmd_report(const PipelineConfig& config);

}  // namespace entityrank::pipeline
