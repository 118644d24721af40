#include "entityrank/catalog.hpp"

#include <algorithm>

namespace entityrank {

void EntityCatalog::add(EntityRecord record) {
  if (record.kb_id.empty()) throw InputError("entity record with empty kb_id");
  if (!is_valid_language_code(record.language)) {
    throw InputError("invalid language code: " + record.language);
  }
  auto kb_key = std::make_pair(record.kb_id, record.language);
  if (by_kb_language_.contains(kb_key)) {
    throw InputError("duplicate entity record for kb_id=" + record.kb_id +
                     " language=" + record.language);
  }
  auto page_key = std::make_pair(record.language, record.page_id);
  if (by_language_page_.contains(page_key)) {
    throw InputError("duplicate page id " + std::to_string(record.page_id) +
                     " in language " + record.language);
  }
  std::size_t index = entries_.size();
  entries_.push_back(std::move(record));
  by_kb_language_.emplace(std::move(kb_key), index);
  by_language_page_.emplace(std::move(page_key), index);
}

const EntityRecord* EntityCatalog::find(std::string_view kb_id,
                                        std::string_view language) const {
  auto it = by_kb_language_.find({std::string(kb_id), std::string(language)});
  return it == by_kb_language_.end() ? nullptr : &entries_[it->second];
}

const EntityRecord* EntityCatalog::find_by_page(std::string_view language,
                                                PageId page_id) const {
  auto it = by_language_page_.find({std::string(language), page_id});
  return it == by_language_page_.end() ? nullptr : &entries_[it->second];
}

bool EntityCatalog::contains_kb_id(std::string_view kb_id) const {
  auto it = by_kb_language_.lower_bound({std::string(kb_id), std::string()});
  return it != by_kb_language_.end() && it->first.first == kb_id;
}

std::vector<const EntityRecord*> EntityCatalog::records_of(std::string_view kb_id) const {
  std::vector<const EntityRecord*> out;
  for (auto it = by_kb_language_.lower_bound({std::string(kb_id), std::string()});
       it != by_kb_language_.end() && it->first.first == kb_id; ++it) {
    out.push_back(&entries_[it->second]);
  }
  return out;
}

std::vector<const EntityRecord*> EntityCatalog::records_in_language(
    std::string_view language) const {
  std::vector<const EntityRecord*> out;
  for (auto it = by_language_page_.lower_bound({std::string(language), 0});
       it != by_language_page_.end() && it->first.first == language; ++it) {
    out.push_back(&entries_[it->second]);
  }
  return out;
}

std::vector<std::string> EntityCatalog::languages() const {
  std::vector<std::string> out;
  for (const auto& [key, _] : by_language_page_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

std::vector<std::string> EntityCatalog::kb_ids() const {
  std::vector<std::string> out;
  for (const auto& [key, _] : by_kb_language_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

std::size_t EntityCatalog::distinct_entity_count() const {
  return kb_ids().size();
}

bool EntityCatalog::operator==(const EntityCatalog& other) const {
  if (by_kb_language_.size() != other.by_kb_language_.size()) return false;
  for (const auto& [key, index] : by_kb_language_) {
    const EntityRecord* theirs = other.find(key.first, key.second);
    if (theirs == nullptr || !(entries_[index] == *theirs)) return false;
  }
  return true;
}

}  // namespace entityrank
