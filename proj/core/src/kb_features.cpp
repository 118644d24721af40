#include "entityrank/kb_features.hpp"

#include <algorithm>
#include <set>

namespace entityrank {

namespace {

// Distinct type labels of an entity: objects of its type-predicate triples.
// Entity references contribute their kb id, literals their text.
std::set<std::string> types_of(const TripleStore& store, const std::string& kb_id,
                               const std::string& type_predicate) {
  std::set<std::string> types;
  for (std::size_t index : store.with_subject(kb_id)) {
    const Triple& triple = store.triples()[index];
    if (triple.predicate == type_predicate) types.insert(triple.object.value);
  }
  return types;
}

}  // namespace

TripleFeatureExtractor::TripleFeatureExtractor(const TripleStore& store,
                                               KbFeatureConfig config)
    : store_(store), config_(std::move(config)) {}

std::pair<std::uint32_t, std::uint32_t> TripleFeatureExtractor::object_features(
    const std::string& kb_id) const {
  std::uint32_t count = 0;
  std::set<std::string> distinct_objects;
  std::set<std::string> type_union;
  for (std::size_t index : store_.with_subject(kb_id)) {
    const Triple& triple = store_.triples()[index];
    if (!triple.object.is_entity || triple.predicate == config_.type_predicate) continue;
    ++count;
    distinct_objects.insert(triple.object.value);
    for (const auto& type : types_of(store_, triple.object.value, config_.type_predicate)) {
      type_union.insert(type);
    }
  }
  if (config_.count_distinct) count = static_cast<std::uint32_t>(distinct_objects.size());
  return {count, static_cast<std::uint32_t>(type_union.size())};
}

std::pair<std::uint32_t, std::uint32_t> TripleFeatureExtractor::subject_features(
    const std::string& kb_id) const {
  std::uint32_t count = 0;
  std::set<std::string> distinct_subjects;
  std::set<std::string> type_union;
  for (std::size_t index : store_.with_entity_object(kb_id)) {
    const Triple& triple = store_.triples()[index];
    if (triple.predicate == config_.type_predicate) continue;
    ++count;
    distinct_subjects.insert(triple.subject);
    for (const auto& type : types_of(store_, triple.subject, config_.type_predicate)) {
      type_union.insert(type);
    }
  }
  if (config_.count_distinct) count = static_cast<std::uint32_t>(distinct_subjects.size());
  return {count, static_cast<std::uint32_t>(type_union.size())};
}

std::optional<double> TripleFeatureExtractor::social_score(
    const std::string& kb_id, const SocialScoreMap& scores) const {
  std::optional<double> best;
  for (std::size_t index : store_.with_subject(kb_id)) {
    const Triple& triple = store_.triples()[index];
    if (triple.predicate != config_.social_predicate || triple.object.is_entity) continue;
    auto it = scores.find(triple.object.value);
    if (it == scores.end()) continue;
    if (!best || it->second > *best) best = it->second;
  }
  return best;
}

TripleFeatureRow TripleFeatureExtractor::row_for(const std::string& kb_id,
                                                 const SocialScoreMap& scores) const {
  TripleFeatureRow row;
  row.kb_id = kb_id;
  std::tie(row.subject_count, row.subject_type_count) = subject_features(kb_id);
  std::tie(row.object_count, row.object_type_count) = object_features(kb_id);
  row.social_score = social_score(kb_id, scores);
  return row;
}

}  // namespace entityrank
