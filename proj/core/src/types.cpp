#include "entityrank/types.hpp"

namespace entityrank {

const char* to_string(EntityType type) {
  switch (type) {
    case EntityType::Person: return "PERSON";
    case EntityType::Location: return "LOCATION";
    case EntityType::Organization: return "ORGANIZATION";
    case EntityType::Misc: return "MISC";
  }
  return "MISC";
}

std::optional<EntityType> entity_type_from_string(std::string_view text) {
  if (text.empty()) return EntityType::Misc;
  if (text == "PERSON") return EntityType::Person;
  if (text == "LOCATION") return EntityType::Location;
  if (text == "ORGANIZATION") return EntityType::Organization;
  if (text == "MISC") return EntityType::Misc;
  return std::nullopt;
}

bool is_valid_language_code(std::string_view code) {
  auto lower = [](char c) { return c >= 'a' && c <= 'z'; };
  if (code.size() < 2 || !lower(code[0]) || !lower(code[1])) return false;
  if (code.size() == 2) return true;
  if (code[2] != '_' || code.size() == 3) return false;
  for (std::size_t i = 3; i < code.size(); ++i) {
    if (!lower(code[i])) return false;
  }
  return true;
}

}  // namespace entityrank
