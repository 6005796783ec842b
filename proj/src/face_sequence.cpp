#include "semmap/face_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace semmap {

FaceSequence FaceSequence::from_sizes(std::span<const int> sizes) {
  std::map<int, int> counts;
  for (int s : sizes) {
    if (s < 3) throw std::invalid_argument("face size below 3: " + std::to_string(s));
    ++counts[s];
  }
  FaceSequence seq;
  seq.entries_.assign(counts.begin(), counts.end());
  return seq;
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) {
    throw std::invalid_argument("expected integer in face sequence '" + std::string(text) + "'");
  }
  return std::stoi(std::string(text.substr(start, pos - start)));
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

FaceSequence FaceSequence::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  bool paren = pos < text.size() && (text[pos] == '(' || text[pos] == '{' || text[pos] == '[');
  if (paren) ++pos;

  std::vector<int> sizes;
  for (;;) {
    skip_space(text, pos);
    int size = parse_int(text, pos);
    int mult = 1;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space(text, pos);
      mult = parse_int(text, pos);
      if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    }
    sizes.insert(sizes.end(), mult, size);
    skip_space(text, pos);
    if (pos < text.size() && (text[pos] == ',' || text[pos] == '.')) {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= text.size() || (text[pos] != ')' && text[pos] != '}' && text[pos] != ']')) {
      throw std::invalid_argument("unbalanced parenthesis in face sequence");
    }
    ++pos;
  }
  skip_space(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in face sequence '" + std::string(text) + "'");
  }
  return from_sizes(sizes);
}

int FaceSequence::degree() const {
  int d = 0;
  for (auto [size, mult] : entries_) d += mult;
  return d;
}

int FaceSequence::multiplicity(int face_size) const {
  for (auto [size, mult] : entries_) {
    if (size == face_size) return mult;
  }
  return 0;
}

int FaceSequence::link_length() const {
  int total = 0;
  for (auto [size, mult] : entries_) total += mult * (size - 2);
  return total;
}

std::vector<int> FaceSequence::sizes() const {
  std::vector<int> out;
  for (auto [size, mult] : entries_) out.insert(out.end(), mult, size);
  return out;
}

std::string FaceSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries_[i].first);
    if (entries_[i].second != 1) out += "^" + std::to_string(entries_[i].second);
  }
  return out + ")";
}

Curvature vertex_curvature(const FaceSequence& type) {
  std::int64_t den = 2;
  for (auto [size, mult] : type.entries()) den = std::lcm(den, static_cast<std::int64_t>(size));
  std::int64_t num = den - type.degree() * (den / 2);
  for (auto [size, mult] : type.entries()) num += mult * (den / size);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

VertexCount sem_vertex_count(const FaceSequence& type, int euler_characteristic) {
  VertexCount result;
  if (type.degree() < 3) {
    result.reason = "vertex degree below 3";
    return result;
  }
  Curvature k = vertex_curvature(type);
  if (k.num == 0) {
    if (euler_characteristic == 0) {
      result.status = VertexCount::Status::kIndeterminate;
      result.reason = "indeterminate: flat type, any vertex count balances chi = 0";
    } else {
      result.reason = "flat type forces chi = 0";
    }
    return result;
  }
  // N = chi * den / num
  std::int64_t top = static_cast<std::int64_t>(euler_characteristic) * k.den;
  if (top % k.num != 0) {
    result.reason = "vertex count is not an integer";
    return result;
  }
  std::int64_t n = top / k.num;
  if (n <= 0) {
    result.reason = "vertex count is not positive";
    return result;
  }
  result.status = VertexCount::Status::kExact;
  result.count = static_cast<int>(n);
  return result;
}

}  // namespace semmap
