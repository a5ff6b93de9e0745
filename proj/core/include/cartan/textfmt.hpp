#pragma once

// Line-oriented structured text shared by catalog, case, CDGA and ideal files:
//
//   # comment
//   [section]
//   key = value
//
// Sections may repeat; order of sections and entries is preserved.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

struct TextEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct TextSection {
  std::string name;
  std::size_t line = 0;
  std::vector<TextEntry> entries;

  const TextEntry* find(std::string_view key) const;
  /// Throws InputError naming the section when the key is absent.
  const TextEntry& require(std::string_view key, const std::string& source) const;
};

struct TextDocument {
  std::string source;
  std::vector<TextSection> sections;

  std::vector<const TextSection*> all(std::string_view name) const;
  const TextSection* first(std::string_view name) const;
};

TextDocument parse_text_document(std::string_view text, std::string source);
TextDocument read_text_document(const std::string& path);

std::string write_text_document(const TextDocument& doc);

/// Splits "a, b, c" into trimmed items; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view value, char sep = ',');

std::string_view trim(std::string_view s);

/// Non-negative decimal integer or InputError.
unsigned long long parse_natural(std::string_view text, const std::string& source, std::size_t line);

}  // namespace cartan
