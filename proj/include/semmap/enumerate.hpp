#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semmap/face_sequence.hpp"
#include "semmap/polyhedral_map.hpp"

namespace semmap {

/// A map under construction on a fixed vertex budget.
///
/// Faces are committed one at a time. A face is accepted only if afterwards
/// no edge lies in more than two faces, any two faces still meet in nothing,
/// a vertex or an edge, no vertex exceeds the multiplicities of the target
/// face sequence, and every vertex whose link has closed up carries exactly
/// the full sequence in one cycle.
class PartialMap {
 public:
  PartialMap(int vertex_budget, FaceSequence type);

  int vertex_budget() const { return n_; }
  const FaceSequence& type() const { return type_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Smallest vertex id not yet on any committed face (ids are used in
  /// increasing order, so every id below it is in use).
  int next_free() const { return next_free_; }

  int faces_at(Vertex v) const { return static_cast<int>(vertex_faces_[v].size()); }
  int edge_multiplicity(Vertex a, Vertex b) const { return edge_count_[a * n_ + b]; }
  int open_edges_at(Vertex v) const { return open_at_[v]; }
  bool has_face(const Face& face) const;

  /// Commits `face` if consistent and returns true; otherwise leaves the
  /// state untouched and returns false.
  bool add_face(const Face& face);

  /// Undoes the most recent successful add_face.
  void pop_face();

  /// Every vertex used and every link closed.
  bool complete() const;

  PolyhedralMap to_map(std::string name = {}) const;

 private:
  bool admissible(const Face& face) const;
  bool link_single_cycle(Vertex v) const;
  void commit(const Face& face);

  int n_;
  FaceSequence type_;
  int degree_;
  std::vector<int> size_slot_;  // face size -> slot index, -1 if absent
  std::vector<int> slot_limit_;
  std::vector<Face> faces_;
  std::vector<std::uint8_t> edge_count_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<int> usage_;  // n_ x slots
  std::vector<int> open_at_;
  int next_free_ = 0;
  std::vector<int> next_free_history_;
};

/// Commits every face of `link` not already present. Returns std::nullopt
/// when a face is rejected. Throws std::invalid_argument if the link's
/// degree differs from the target degree.
std::optional<PartialMap> assume_link(const PartialMap& partial, const VertexLink& link);

/// Distinct cyclic arrangements of the type's face sizes around a vertex,
/// up to rotation and reflection, each written largest-first.
std::vector<std::vector<int>> face_arrangements(const FaceSequence& type);

/// Link of vertex 0 in normalized position: the link vertices, read around
/// the cycle starting with the first face of `arrangement`, are labeled
/// 2, 3, ..., L and then 1. For (3^5, 4) this is C_7([2, 3, 4], 5, 6, 7, 1).
VertexLink seed_link(const std::vector<int>& arrangement);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  std::uint64_t classes = 0;
  double seconds = 0.0;
  bool complete = true;  // false when the node budget stopped the search
};

struct EnumerateOptions {
  bool dedup = true;
  int jobs = 1;
  std::uint64_t max_nodes = 0;  // 0: unlimited
  // Fix the whole link of vertex 0; otherwise only one face through vertex 0
  // is fixed.
  bool normalize_seed = true;
};

struct EnumerationResult {
  std::vector<PolyhedralMap> maps;  // sorted by canonical form when deduplicated
  SearchStats stats;
  std::string reason;               // set when the parameters admit no map
};

/// All completions of `partial` to a closed semi-equivelar map of its type
/// on exactly its vertex budget.
EnumerationResult complete_partial(const PartialMap& partial, const EnumerateOptions& options = {});

/// Isomorph-free list of semi-equivelar maps of the given type and Euler
/// characteristic.
EnumerationResult enumerate_sems(const FaceSequence& type, int euler_characteristic,
                                 const EnumerateOptions& options = {});

}  // namespace semmap
