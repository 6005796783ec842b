#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "semmap/polyhedral_map.hpp"

namespace semmap {

/// Syntax or reference error in map input. `line` is 1-based, 0 when the
/// error is not tied to a line (JSON input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseOptions {
  // Drop faces that repeat an earlier face as a cycle instead of failing.
  bool dedupe = false;
};

/// Parses the line format
///
///   map <name> vertices=<n>
///   f v0 v1 ... vk
///
/// with `#` comments. Labels are decimal; `u` and `v` stand for 10 and 11
/// when n <= 12. Input whose first non-blank character is `{` is read as the
/// JSON mirror instead.
PolyhedralMap parse_map(std::string_view text, const ParseOptions& options = {});

PolyhedralMap parse_map_json(const nlohmann::json& doc, const ParseOptions& options = {});

/// Text serialization, faces in stored order with decimal labels.
std::string serialize_map(const PolyhedralMap& map);

/// {"name": ..., "vertices": [0, ..., n-1], "faces": [[...], ...]}
nlohmann::json map_to_json(const PolyhedralMap& map);

PolyhedralMap read_map_file(const std::string& path, const ParseOptions& options = {});

}  // namespace semmap
