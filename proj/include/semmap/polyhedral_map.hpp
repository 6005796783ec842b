#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semmap/face_sequence.hpp"

namespace semmap {

using Vertex = int;
using Face = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Rotates a face so its smallest vertex comes first and picks the direction
/// whose second entry is smaller. Two faces are the same cycle iff their
/// normalized forms are equal.
Face normalize_face(std::span<const Vertex> face);

bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b);

/// A finite collection of polygonal faces on vertices 0..n-1.
///
/// Faces are cyclic vertex sequences identified up to rotation and
/// reflection. The object is immutable once built; all analysis lives in
/// free functions so a map can be shared freely between threads.
class PolyhedralMap {
 public:
  PolyhedralMap() = default;
  PolyhedralMap(int vertex_count, std::vector<Face> faces, std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int index) const { return faces_.at(index); }
  const std::string& name() const { return name_; }

  PolyhedralMap with_name(std::string name) const;

  /// Distinct unordered vertex pairs that are consecutive in some face,
  /// sorted.
  std::vector<Edge> edges() const;
  int edge_count() const { return static_cast<int>(edges().size()); }

  /// Faces sorted after normalization; the identity used by operator==.
  std::vector<Face> normalized_faces() const;

  /// Same vertex count and same face set; names are ignored.
  bool operator==(const PolyhedralMap& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::string name_;
};

/// Applies v -> permutation[v] to every face.
PolyhedralMap relabel(const PolyhedralMap& map, std::span<const Vertex> permutation);

// ---------------------------------------------------------------------------
// Validation

enum class Axiom {
  kEmptyMap,
  kVertexRange,
  kFaceLength,
  kRepeatedVertex,
  kDuplicateFace,
  kEdgeClosure,
  kFaceIntersection,
  kLinkCondition,
  kConnectivity,
};

std::string_view axiom_name(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::string detail;
  std::vector<Vertex> vertices;
  std::vector<int> faces;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Axiom axiom) const;
  std::string to_string() const;
};

/// Checks every polyhedral-map axiom and reports all violations found.
ValidationReport validate(const PolyhedralMap& map);

// ---------------------------------------------------------------------------
// Elementary invariants

struct SurfaceProfile {
  int euler_characteristic = 0;
  bool orientable = false;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;
};

/// Counts V, E, F and decides orientability by propagating face directions
/// so that every edge is traversed once each way.
SurfaceProfile surface_profile(const PolyhedralMap& map);

/// For an orientable map, the per-face flag telling whether the stored
/// vertex order must be reversed to obtain a coherent orientation.
std::optional<std::vector<bool>> coherent_orientation(const PolyhedralMap& map);

/// One face around a vertex: the edge-neighbor where the face starts, the
/// vertices of the face strictly between that neighbor and the next one
/// (empty for a triangle, the opposite vertex for a quadrangle), and the face
/// index in the map.
struct LinkCorner {
  Vertex neighbor = 0;
  std::vector<Vertex> interior;
  int face = -1;

  int face_size() const { return static_cast<int>(interior.size()) + 3; }
};

/// Cyclic arrangement of faces around `center`. Corner i's face joins
/// corners[i].neighbor and corners[i+1].neighbor.
struct VertexLink {
  Vertex center = 0;
  std::vector<LinkCorner> corners;

  int degree() const { return static_cast<int>(corners.size()); }

  /// The link cycle in the C_m([...], ...) notation: one entry per link
  /// vertex, with the vertices of every non-triangular face bracketed.
  std::string to_string() const;

  /// True when both links describe the same face cycle up to rotation and
  /// reflection.
  bool equivalent(const VertexLink& other) const;
};

/// Reads the notation produced by VertexLink::to_string, e.g.
/// "C_7([2, 3, 4], 5, 6, 7, 1)" or "([3, 4, 0], 1, 7, 6, 5)": link vertices in
/// cyclic order, with the vertices of every face larger than a triangle
/// bracketed. The "C_m" prefix is optional. Throws std::invalid_argument.
VertexLink parse_link(Vertex center, std::string_view text);

/// Faces around the center described by the link, one per corner.
std::vector<Face> link_faces(const VertexLink& link);

/// Throws std::out_of_range for an unknown vertex and std::domain_error when
/// the faces at `v` do not close up into one cycle.
VertexLink vertex_link(const PolyhedralMap& map, Vertex v);

/// Links of all vertices, in vertex order.
std::vector<VertexLink> vertex_links(const PolyhedralMap& map);

FaceSequence face_sequence(const PolyhedralMap& map, Vertex v);

struct TypeCheck {
  std::optional<FaceSequence> type;
  // Witness pair with differing face sequences when `type` is empty.
  Vertex witness_a = -1;
  Vertex witness_b = -1;

  bool semi_equivelar() const { return type.has_value(); }
};

TypeCheck semi_equivelar_type(const PolyhedralMap& map);

/// Degree of every vertex (number of incident faces).
std::vector<int> vertex_degrees(const PolyhedralMap& map);

/// Every edge has an endpoint of degree exactly `d`. Throws
/// std::invalid_argument unless all faces are triangles.
bool is_d_covered(const PolyhedralMap& map, int d);

}  // namespace semmap
