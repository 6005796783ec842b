#include "semmap/map_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace semmap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_decimal(std::string_view token, int& value) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

Vertex parse_label(std::string_view token, int n, int line) {
  int value = 0;
  if (n <= 12 && token == "u") return 10;
  if (n <= 12 && token == "v") return 11;
  if (!parse_decimal(token, value) || value < 0) {
    throw ParseError(line, "bad vertex label '" + std::string(token) + "'");
  }
  if (value >= n) {
    throw ParseError(line, "face references undeclared vertex " + std::to_string(value));
  }
  return value;
}

void add_face(std::vector<Face>& faces, std::set<Face>& seen, Face face, const ParseOptions& options, int line) {
  // Malformed faces are kept as-is so validation can report them.
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  bool well_formed = face.size() >= 3 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (well_formed && !seen.insert(normalize_face(face)).second) {
    if (options.dedupe) return;
    std::string text;
    for (Vertex v : face) text += (text.empty() ? "" : " ") + std::to_string(v);
    throw ParseError(line, "duplicate face [" + text + "] (use dedupe to drop repeats)");
  }
  faces.push_back(std::move(face));
}

}  // namespace

PolyhedralMap parse_map(std::string_view text, const ParseOptions& options) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return parse_map_json(doc, options);
  }

  std::string name;
  int n = -1;
  std::vector<Face> faces;
  std::set<Face> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "map") {
      if (n >= 0) throw ParseError(line_no, "second map header");
      if (tokens.size() != 3 || tokens[2].substr(0, 9) != "vertices=") {
        throw ParseError(line_no, "expected 'map <name> vertices=<n>'");
      }
      name = std::string(tokens[1]);
      if (!parse_decimal(tokens[2].substr(9), n) || n < 0) {
        throw ParseError(line_no, "bad vertex count '" + std::string(tokens[2].substr(9)) + "'");
      }
    } else if (tokens[0] == "f") {
      if (n < 0) throw ParseError(line_no, "face before map header");
      Face face;
      for (std::size_t i = 1; i < tokens.size(); ++i) face.push_back(parse_label(tokens[i], n, line_no));
      add_face(faces, seen, std::move(face), options, line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(0, "missing map header");
  return PolyhedralMap(n, std::move(faces), std::move(name));
}

PolyhedralMap parse_map_json(const nlohmann::json& doc, const ParseOptions& options) {
  if (!doc.is_object()) throw ParseError(0, "JSON map must be an object");
  std::string name = doc.value("name", std::string{});
  if (!doc.contains("vertices") || !doc.contains("faces")) {
    throw ParseError(0, "JSON map needs 'vertices' and 'faces'");
  }
  const auto& vs = doc["vertices"];
  int n = 0;
  if (vs.is_number_integer()) {
    n = vs.get<int>();
  } else if (vs.is_array()) {
    n = static_cast<int>(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_number_integer() || vs[i].get<int>() != static_cast<int>(i)) {
        throw ParseError(0, "'vertices' must list 0..n-1 in order");
      }
    }
  } else {
    throw ParseError(0, "'vertices' must be a count or an array");
  }
  if (n < 0) throw ParseError(0, "negative vertex count");
  if (!doc["faces"].is_array()) throw ParseError(0, "'faces' must be an array");

  std::vector<Face> faces;
  std::set<Face> seen;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array()) throw ParseError(0, "each face must be an array");
    Face face;
    for (const auto& v : f) {
      if (v.is_number_integer()) {
        int x = v.get<int>();
        if (x < 0 || x >= n) throw ParseError(0, "face references undeclared vertex " + std::to_string(x));
        face.push_back(x);
      } else if (v.is_string()) {
        face.push_back(parse_label(v.get<std::string>(), n, 0));
      } else {
        throw ParseError(0, "vertex labels must be integers");
      }
    }
    add_face(faces, seen, std::move(face), options, 0);
  }
  return PolyhedralMap(n, std::move(faces), std::move(name));
}

std::string serialize_map(const PolyhedralMap& map) {
  std::string name = map.name().empty() ? "unnamed" : map.name();
  std::replace_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; }, '_');
  std::ostringstream out;
  out << "map " << name << " vertices=" << map.vertex_count() << "\n";
  for (const Face& face : map.faces()) {
    out << "f";
    for (Vertex v : face) out << " " << v;
    out << "\n";
  }
  return out.str();
}

nlohmann::json map_to_json(const PolyhedralMap& map) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < map.vertex_count(); ++v) vertices.push_back(v);
  return {{"name", map.name()}, {"vertices", vertices}, {"faces", map.faces()}};
}

PolyhedralMap read_map_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_map(buffer.str(), options);
}

}  // namespace semmap
