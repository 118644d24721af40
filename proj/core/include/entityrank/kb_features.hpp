#pragma once

#include <optional>
#include <string>
#include <utility>

#include "entityrank/ingest.hpp"
#include "entityrank/triple_store.hpp"

namespace entityrank {

struct KbFeatureConfig {
  std::string type_predicate = "type";
  std::string social_predicate = "social_profile";
  // When set, object/subject counts are over distinct entities instead of
  // triple occurrences.
  bool count_distinct = false;
};

struct TripleFeatureRow {
  std::string kb_id;
  std::uint32_t subject_count = 0;
  std::uint32_t subject_type_count = 0;
  std::uint32_t object_count = 0;
  std::uint32_t object_type_count = 0;
  std::optional<double> social_score;
};

// Structural features over the triple store. Type-bearing triples describe an
// entity rather than connect it, so they are excluded from both counts.
class TripleFeatureExtractor {
 public:
  TripleFeatureExtractor(const TripleStore& store, KbFeatureConfig config = {});
  // The extractor keeps a reference; the store must outlive it.
  TripleFeatureExtractor(TripleStore&&, KbFeatureConfig = {}) = delete;

  // How many entities this one points at (entity-object triples with the
  // entity as subject), and how many distinct types those objects carry.
  std::pair<std::uint32_t, std::uint32_t> object_features(const std::string& kb_id) const;

  // How often this entity is pointed at (it sits in object position), and how
  // many distinct types the pointing subjects carry.
  std::pair<std::uint32_t, std::uint32_t> subject_features(const std::string& kb_id) const;

  // Maximum external score over the entity's social profile literals;
  // absent when no profile resolves in the score map.
  std::optional<double> social_score(const std::string& kb_id,
                                     const SocialScoreMap& scores) const;

  TripleFeatureRow row_for(const std::string& kb_id, const SocialScoreMap& scores) const;

  const KbFeatureConfig& config() const { return config_; }

 private:
  const TripleStore& store_;
  KbFeatureConfig config_;
};

}  // namespace entityrank
