#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartan {

/// Malformed or inconsistent input. Carries the source name, 1-based line
/// (0 when unknown) and the offending token so the CLI can point at it.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::string token, const std::string& message)
      : std::runtime_error(compose(source, line, token, message)),
        source_(std::move(source)),
        line_(line),
        token_(std::move(token)) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  static std::string compose(const std::string& source, std::size_t line, const std::string& token,
                             const std::string& message) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line != 0) out += ":" + std::to_string(line);
    out += ": " + message;
    if (!token.empty()) out += " '" + token + "'";
    return out;
  }

  std::string source_;
  std::size_t line_;
  std::string token_;
};

/// Lookup of a catalog key that does not exist.
class UnknownKey : public std::out_of_range {
 public:
  UnknownKey(const std::string& kind, std::string key)
      : std::out_of_range("unknown " + kind + " '" + key + "'"), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace cartan
