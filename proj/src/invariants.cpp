#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "semmap/invariants.hpp"

namespace semmap {

namespace {

std::vector<std::vector<char>> adjacency_matrix(const PolyhedralMap& map, Neighborhood kind) {
  const int n = map.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  if (kind == Neighborhood::kEdge) {
    for (auto [a, b] : map.edges()) adj[a][b] = adj[b][a] = 1;
    return adj;
  }
  for (const Face& face : map.faces()) {
    for (Vertex a : face) {
      for (Vertex b : face) {
        if (a != b) adj[a][b] = 1;
      }
    }
  }
  return adj;
}

std::vector<std::vector<int>> intersection_sizes(const PolyhedralMap& map, Neighborhood kind) {
  const int n = map.vertex_count();
  auto adj = adjacency_matrix(map, kind);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (adj[v][w]) nbrs[v].push_back(w);
    }
  }
  std::vector<std::vector<int>> common(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int c = 0;
      for (Vertex w : nbrs[i]) c += adj[j][w];
      common[i][j] = common[j][i] = c;
    }
  }
  return common;
}

}  // namespace

std::vector<Vertex> neighbor_set(const PolyhedralMap& map, Vertex v) {
  if (v < 0 || v >= map.vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::vector<Vertex> out;
  for (const Face& face : map.faces()) {
    const std::size_t len = face.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (face[i] != v) continue;
      out.push_back(face[(i + 1) % len]);
      out.push_back(face[(i + len - 1) % len]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> link_vertex_set(const PolyhedralMap& map, Vertex v) {
  if (v < 0 || v >= map.vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::vector<Vertex> out;
  for (const Face& face : map.faces()) {
    if (std::find(face.begin(), face.end(), v) == face.end()) continue;
    for (Vertex w : face) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimpleGraph edge_graph(const PolyhedralMap& map) {
  return {map.vertex_count(), map.edges()};
}

SimpleGraph g_t_graph(const PolyhedralMap& map, int t, Neighborhood kind) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  const int n = map.vertex_count();
  auto common = intersection_sizes(map, kind);
  SimpleGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (common[i][j] == t) g.edges.push_back({i, j});
    }
  }
  return g;
}

std::vector<int> g_t_edge_counts(const PolyhedralMap& map, Neighborhood kind) {
  const int n = map.vertex_count();
  auto common = intersection_sizes(map, kind);
  std::vector<int> counts(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) ++counts[common[i][j]];
  }
  return counts;
}

bool same_graph_type(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.edge_count() != b.edge_count()) return false;
  auto compact = [](const SimpleGraph& g) {
    std::map<Vertex, int> index;
    for (auto [x, y] : g.edges) {
      index.emplace(x, 0);
      index.emplace(y, 0);
    }
    int k = 0;
    for (auto& [v, i] : index) i = k++;
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (auto [x, y] : g.edges) adj[index[x]][index[y]] = adj[index[y]][index[x]] = 1;
    return adj;
  };
  auto ga = compact(a);
  auto gb = compact(b);
  const int k = static_cast<int>(ga.size());
  if (k != static_cast<int>(gb.size())) return false;
  auto degrees = [k](const auto& adj) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) d[i] += adj[i][j];
    }
    return d;
  };
  auto da = degrees(ga);
  auto db = degrees(gb);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Backtracking vertex matching with degree filtering.
  std::vector<int> image(k, -1);
  std::vector<char> used(k, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == k) return true;
    for (int c = 0; c < k; ++c) {
      if (used[c] || db[c] != da[i]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) ok = ga[i][p] == gb[c][image[p]];
      if (!ok) continue;
      image[i] = c;
      used[c] = 1;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    image[i] = -1;
    return false;
  };
  return extend(0);
}

}  // namespace semmap
