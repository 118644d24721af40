#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace entityrank::tsv {

// Splits a line on tab characters; empty fields are preserved.
std::vector<std::string_view> split_fields(std::string_view line);

// Lines that the readers ignore: empty, or starting with '#'.
bool is_ignored_line(std::string_view line);

// Streams the data lines of a UTF-8, tab-separated, LF-terminated file.
// The callback gets the 1-based physical line number and the line with the
// trailing newline stripped; ignored lines are filtered out. Throws
// InputError when the file cannot be opened.
void for_each_data_line(
    const std::string& path,
    const std::function<void(std::size_t line_number, std::string_view line)>& fn);

// Strict integer / real parsing; nullopt on any trailing garbage.
std::optional<std::int64_t> parse_int(std::string_view text);
std::optional<double> parse_real(std::string_view text);

// 17 significant digits; round-trips any double exactly.
std::string format_real17(double value);
// Fixed six decimal places, used by report-style files.
std::string format_real6(double value);

}  // namespace entityrank::tsv
