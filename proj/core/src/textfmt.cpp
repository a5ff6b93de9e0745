#include "cartan/textfmt.hpp"

#include "cartan/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cartan {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const TextEntry* TextSection::find(std::string_view key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

const TextEntry& TextSection::require(std::string_view key, const std::string& source) const {
  if (const auto* e = find(key)) return *e;
  throw InputError(source, line, std::string(key), "section [" + name + "] is missing required key");
}

std::vector<const TextSection*> TextDocument::all(std::string_view name) const {
  std::vector<const TextSection*> out;
  for (const auto& s : sections) {
    if (s.name == name) out.push_back(&s);
  }
  return out;
}

const TextSection* TextDocument::first(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

TextDocument parse_text_document(std::string_view text, std::string source) {
  TextDocument doc;
  doc.source = std::move(source);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw InputError(doc.source, line_no, std::string(line), "malformed section header");
      }
      doc.sections.push_back({std::string(trim(line.substr(1, line.size() - 2))), line_no, {}});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(doc.source, line_no, std::string(line), "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw InputError(doc.source, line_no, std::string(line), "empty key");
    if (doc.sections.empty()) {
      throw InputError(doc.source, line_no, std::string(key), "entry outside of any [section]");
    }
    doc.sections.back().entries.push_back(
        {std::string(key), std::string(trim(line.substr(eq + 1))), line_no});
  }
  return doc;
}

TextDocument read_text_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text_document(buf.str(), path);
}

std::string write_text_document(const TextDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    if (i != 0) out += '\n';
    out += "[" + doc.sections[i].name + "]\n";
    for (const auto& e : doc.sections[i].entries) out += e.key + " = " + e.value + "\n";
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value, char sep) {
  std::vector<std::string> out;
  value = trim(value);
  if (value.empty()) return out;
  while (true) {
    const auto pos = value.find(sep);
    out.emplace_back(trim(value.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    value = value.substr(pos + 1);
  }
  return out;
}

unsigned long long parse_natural(std::string_view text, const std::string& source, std::size_t line) {
  text = trim(text);
  if (text.empty() || text.size() > 18) throw InputError(source, line, std::string(text), "expected a natural number");
  unsigned long long v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError(source, line, std::string(text), "expected a natural number");
    }
    v = v * 10 + static_cast<unsigned long long>(c - '0');
  }
  return v;
}

}  // namespace cartan
