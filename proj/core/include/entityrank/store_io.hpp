#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "entityrank/catalog.hpp"
#include "entityrank/evaluation.hpp"
#include "entityrank/feature_matrix.hpp"
#include "entityrank/ingest.hpp"
#include "entityrank/ranking.hpp"
#include "entityrank/regression.hpp"
#include "entityrank/triple_store.hpp"
#include "entityrank/wiki_features.hpp"

// Readers and writers for every staged pipeline file. All files are UTF-8,
// tab-separated, LF-terminated, deterministic byte-for-byte given equal
// inputs, and self-describing: the first lines are comments carrying the
// stage name, stage version and the configuration hash.

namespace entityrank::store {

struct StageHeader {
  std::string stage;
  int version = 1;
  std::uint64_t config_hash = 0;
};

std::string header_line(const StageHeader& header);

// Serialized stores reuse the ingestion file formats, so reading them back
// goes through the same parsers. A reject on reload means the store is
// corrupt and raises InputError.
void write_catalog(const std::string& path, const StageHeader& header,
                   const EntityCatalog& catalog);
EntityCatalog read_catalog(const std::string& path);

void write_links(const std::string& path, const StageHeader& header,
                 const LinkEdgeList& links);
LinkEdgeList read_links(const std::string& path, const EntityCatalog& catalog);

void write_categories(const std::string& path, const StageHeader& header,
                      const CategoryMap& categories);
CategoryMap read_categories(const std::string& path, const EntityCatalog& catalog);

void write_triples(const std::string& path, const StageHeader& header,
                   const TripleStore& store);
TripleStore read_triples(const std::string& path);

void write_labels(const std::string& path, const StageHeader& header,
                  const LabelSet& labels);
LabelSet read_labels(const std::string& path, const EntityCatalog& catalog);

void write_social_scores(const std::string& path, const StageHeader& header,
                         const SocialScoreMap& scores);
SocialScoreMap read_social_scores(const std::string& path);

void write_ingest_report(const std::string& path, const StageHeader& header,
                         std::span<const ParseReport> reports);

// Feature dumps and matrices (reals carry 17 significant digits, absent
// values are written as "-").
void write_wiki_features(const std::string& path, const StageHeader& header,
                         const std::map<std::string, WikiFeatureTable>& tables);
void write_kb_features(const std::string& path, const StageHeader& header,
                       const std::map<std::string, TripleFeatureRow>& rows);

void write_raw_matrix(const std::string& path, const StageHeader& header,
                      const FeatureMatrix& matrix);
FeatureMatrix read_raw_matrix(const std::string& path);

void write_normalized_matrix(const std::string& path, const StageHeader& header,
                             const FeatureMatrix& raw, const NormalizedMatrix& norm);
void write_normalization(const std::string& path, const StageHeader& header,
                         const NormalizedMatrix& norm);
// Rows must align with the raw matrix they were derived from.
NormalizedMatrix read_normalized_matrix(const std::string& matrix_path,
                                        const std::string& normalization_path,
                                        const FeatureMatrix& raw);

void write_weights(const std::string& path, const StageHeader& header,
                   const WeightVector& weights);
WeightVector read_weights(const std::string& path);

void write_variants(const std::string& path, const StageHeader& header,
                    std::span<const VariantModel> models);
std::vector<VariantModel> read_variants(const std::string& path);

void write_split(const std::string& path, const StageHeader& header,
                 const TrainTestSplit& split);
TrainTestSplit read_split(const std::string& path);

void write_predictions(const std::string& path, const StageHeader& header,
                       std::span<const Prediction> predictions);

void write_eval_report(const std::string& path, const StageHeader& header,
                       std::span<const EvalRow> rows);

void write_ranked_list(const std::string& path, const StageHeader& header,
                       const RankedList& list);
RankedList read_ranked_list(const std::string& path, const std::string& language);

void write_type_report(const std::string& path, const StageHeader& header,
                       const TypeDistribution& distribution);

}  // namespace entityrank::store
