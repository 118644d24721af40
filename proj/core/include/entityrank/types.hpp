#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entityrank {

using PageId = std::uint32_t;

enum class EntityType { Person, Location, Organization, Misc };

inline constexpr std::size_t kEntityTypeCount = 4;

// Fixed report order: PERSON, LOCATION, ORGANIZATION, MISC.
const char* to_string(EntityType type);

// Accepts the upper-case column values; an empty field means MISC.
// Unrecognized strings yield nullopt and the caller treats the row as malformed.
std::optional<EntityType> entity_type_from_string(std::string_view text);

// Language codes follow the pattern [a-z]{2}(_[a-z]+)?, e.g. "en", "zh_yue".
bool is_valid_language_code(std::string_view code);

// Unreadable or invalid user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct EntityRecord {
  std::string kb_id;
  std::string language;
  PageId page_id = 0;
  std::string title;
  EntityType entity_type = EntityType::Misc;

  bool operator==(const EntityRecord&) const = default;
};

}  // namespace entityrank
