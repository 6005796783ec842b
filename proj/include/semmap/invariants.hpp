#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semmap/polyhedral_map.hpp"

namespace semmap {

/// Undirected simple graph on vertices 0..n-1. Edges are kept sorted with
/// first < second.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const SimpleGraph&) const = default;
};

/// Vertices joined to `v` by an edge of some face, sorted.
std::vector<Vertex> neighbor_set(const PolyhedralMap& map, Vertex v);

/// Vertices other than `v` lying on a face through `v`, i.e. the vertex set
/// of the link of `v`. Includes the far corners of quadrangles and larger
/// faces, so it is a superset of neighbor_set.
std::vector<Vertex> link_vertex_set(const PolyhedralMap& map, Vertex v);

/// Which vertex neighborhood the G_t graphs intersect.
enum class Neighborhood {
  kLink,  // link_vertex_set; reproduces the published G_t lists
  kEdge,  // neighbor_set
};

/// Edge graph of the map.
SimpleGraph edge_graph(const PolyhedralMap& map);

/// Graph on V(map) joining every unordered pair whose neighborhoods meet in
/// exactly `t` vertices. All pairs are considered, adjacent or not.
SimpleGraph g_t_graph(const PolyhedralMap& map, int t, Neighborhood kind = Neighborhood::kLink);

/// Edge counts of G_0 .. G_n in one pass.
std::vector<int> g_t_edge_counts(const PolyhedralMap& map, Neighborhood kind = Neighborhood::kLink);

/// True when the two graphs are isomorphic after discarding isolated
/// vertices. Intended for the small graphs produced by g_t_graph.
bool same_graph_type(const SimpleGraph& a, const SimpleGraph& b);

/// Relabeling-invariant encoding of a polyhedral map. Equal encodings mean
/// isomorphic maps.
struct CanonicalForm {
  std::vector<std::uint32_t> code;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex_digest() const;
};

/// Canonical form together with the relabeling that produces it:
/// `labeling[v]` is the canonical label of vertex v.
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> labeling;
  // Every flag whose traversal reproduces `form`, as vertex permutations
  // relative to `labeling`; these are exactly the automorphisms.
  std::vector<std::vector<Vertex>> automorphisms;
};

/// Requires a valid map; throws std::invalid_argument otherwise.
CanonicalLabeling canonical_labeling(const PolyhedralMap& map, bool collect_automorphisms = false);

CanonicalForm canonical_form(const PolyhedralMap& map);

struct IsomorphismResult {
  bool isomorphic = false;
  // witness[v] is the image in the second map of vertex v of the first.
  std::vector<Vertex> witness;
};

IsomorphismResult are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b);

/// True when `permutation` sends the face set of `a` onto that of `b`.
bool is_isomorphism(const PolyhedralMap& a, const PolyhedralMap& b, const std::vector<Vertex>& permutation);

struct AutomorphismGroup {
  std::vector<std::vector<Vertex>> generators;
  std::uint64_t order = 0;
  std::vector<std::vector<Vertex>> orbits;  // each sorted, ordered by smallest member
};

AutomorphismGroup automorphism_group(const PolyhedralMap& map);

bool is_vertex_transitive(const PolyhedralMap& map);

}  // namespace semmap
