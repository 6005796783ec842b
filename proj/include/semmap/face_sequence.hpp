#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semmap {

/// Multiset of face sizes around a vertex, written (a^p, b^q, ...).
///
/// Entries are kept normalized: face sizes strictly increasing, every
/// multiplicity at least one.
class FaceSequence {
 public:
  using Entry = std::pair<int, int>;  // (face size, multiplicity)

  FaceSequence() = default;

  /// Builds the normalized sequence from a list of incident face sizes.
  static FaceSequence from_sizes(std::span<const int> sizes);

  /// Accepts "3^5,4", "(3^5, 4^2)", "3,3,3,4" and similar spellings.
  /// Throws std::invalid_argument on malformed text or sizes below 3.
  static FaceSequence parse(std::string_view text);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Total multiplicity, i.e. the vertex degree.
  int degree() const;
  int multiplicity(int face_size) const;

  /// Number of link vertices: sum over faces of (size - 2).
  int link_length() const;

  /// Sizes expanded with multiplicity, ascending.
  std::vector<int> sizes() const;

  std::string to_string() const;

  auto operator<=>(const FaceSequence&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Exact rational curvature contribution per vertex:
/// 1 - d/2 + sum(p_i / a_i), so that chi = N * curvature.
struct Curvature {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Curvature vertex_curvature(const FaceSequence& type);

struct VertexCount {
  enum class Status { kExact, kIndeterminate, kImpossible };
  Status status = Status::kImpossible;
  int count = 0;
  std::string reason;

  bool exact() const { return status == Status::kExact; }
};

/// Solves chi = N * curvature(type) for a positive integer N.
VertexCount sem_vertex_count(const FaceSequence& type, int euler_characteristic);

}  // namespace semmap
