#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "semmap/polyhedral_map.hpp"

namespace semmap::detail {

inline std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Vertex -> faces and edge -> faces lookup tables. Out-of-range vertices are
// skipped so the tables can be built for malformed input during validation.
struct Incidence {
  std::vector<std::vector<int>> vertex_faces;
  std::unordered_map<std::uint64_t, std::vector<int>> edge_faces;

  explicit Incidence(const PolyhedralMap& map) : vertex_faces(map.vertex_count()) {
    const int n = map.vertex_count();
    for (int f = 0; f < map.face_count(); ++f) {
      const Face& face = map.face(f);
      const std::size_t len = face.size();
      for (std::size_t i = 0; i < len; ++i) {
        Vertex a = face[i];
        Vertex b = face[(i + 1) % len];
        if (a >= 0 && a < n) {
          auto& list = vertex_faces[a];
          if (list.empty() || list.back() != f) list.push_back(f);
        }
        if (a != b) edge_faces[edge_key(a, b)].push_back(f);
      }
    }
  }

  const std::vector<int>& faces_at_edge(Vertex a, Vertex b) const {
    static const std::vector<int> kEmpty;
    auto it = edge_faces.find(edge_key(a, b));
    return it == edge_faces.end() ? kEmpty : it->second;
  }
};

inline int index_in(const Face& face, Vertex v) {
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i] == v) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace semmap::detail
