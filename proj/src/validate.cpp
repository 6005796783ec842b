#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "incidence.hpp"
#include "semmap/polyhedral_map.hpp"

namespace semmap {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kEmptyMap: return "empty-map";
    case Axiom::kVertexRange: return "vertex-range";
    case Axiom::kFaceLength: return "face-length";
    case Axiom::kRepeatedVertex: return "repeated-vertex";
    case Axiom::kDuplicateFace: return "duplicate-face";
    case Axiom::kEdgeClosure: return "edge-closure";
    case Axiom::kFaceIntersection: return "face-intersection";
    case Axiom::kLinkCondition: return "link-condition";
    case Axiom::kConnectivity: return "connectivity";
  }
  return "unknown";
}

bool ValidationReport::has(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << axiom_name(v.axiom) << ": " << v.detail << "\n";
  }
  return out.str();
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::string face_text(const Face& face) {
  std::string s = "[";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(face[i]);
  }
  return s + "]";
}

bool consecutive(const Face& face, Vertex a, Vertex b) {
  const std::size_t len = face.size();
  for (std::size_t i = 0; i < len; ++i) {
    Vertex x = face[i], y = face[(i + 1) % len];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

}  // namespace

ValidationReport validate(const PolyhedralMap& map) {
  ValidationReport report;
  auto add = [&report](Axiom axiom, std::string detail, std::vector<Vertex> vertices = {},
                       std::vector<int> faces = {}) {
    report.violations.push_back({axiom, std::move(detail), std::move(vertices), std::move(faces)});
  };

  const int n = map.vertex_count();
  if (n == 0 || map.face_count() == 0) {
    add(Axiom::kEmptyMap, "map has no vertices or no faces");
    return report;
  }

  // Structural checks on individual faces. Malformed faces are excluded from
  // the incidence-based checks below.
  std::vector<Face> good;
  std::vector<int> good_index;
  for (int f = 0; f < map.face_count(); ++f) {
    const Face& face = map.face(f);
    bool ok = true;
    if (face.size() < 3) {
      add(Axiom::kFaceLength, "face " + std::to_string(f) + " " + face_text(face) + " has fewer than 3 vertices",
          face, {f});
      ok = false;
    }
    for (Vertex v : face) {
      if (v < 0 || v >= n) {
        add(Axiom::kVertexRange, "face " + std::to_string(f) + " references undeclared vertex " + std::to_string(v),
            {v}, {f});
        ok = false;
      }
    }
    Face sorted = face;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      add(Axiom::kRepeatedVertex, "face " + std::to_string(f) + " " + face_text(face) + " repeats vertex " +
          std::to_string(*dup), {*dup}, {f});
      ok = false;
    }
    if (ok) {
      good.push_back(face);
      good_index.push_back(f);
    }
  }

  std::map<Face, int> seen;
  for (std::size_t i = 0; i < good.size(); ++i) {
    auto [it, inserted] = seen.emplace(normalize_face(good[i]), good_index[i]);
    if (!inserted) {
      add(Axiom::kDuplicateFace, "faces " + std::to_string(it->second) + " and " + std::to_string(good_index[i]) +
          " are the same cycle " + face_text(good[i]), good[i], {it->second, good_index[i]});
    }
  }

  PolyhedralMap clean(n, good);
  detail::Incidence inc(clean);

  std::vector<std::pair<std::uint64_t, int>> edge_counts;
  for (const auto& [key, faces] : inc.edge_faces) edge_counts.push_back({key, static_cast<int>(faces.size())});
  std::sort(edge_counts.begin(), edge_counts.end());
  for (auto [key, count] : edge_counts) {
    if (count == 2) continue;
    Vertex a = static_cast<Vertex>(key >> 32);
    Vertex b = static_cast<Vertex>(key & 0xffffffffu);
    std::vector<int> faces;
    for (int f : inc.edge_faces.at(key)) faces.push_back(good_index[f]);
    add(Axiom::kEdgeClosure, "edge " + std::to_string(a) + "-" + std::to_string(b) + " lies in " +
        std::to_string(count) + " face(s), expected 2", {a, b}, faces);
  }

  // Two faces may share nothing, one vertex, or one edge. Each pair is
  // examined once, at its smallest common vertex.
  for (Vertex v = 0; v < n; ++v) {
    const auto& at = inc.vertex_faces[v];
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        const Face& a = good[at[i]];
        const Face& b = good[at[j]];
        std::vector<Vertex> common;
        for (Vertex x : a) {
          if (std::find(b.begin(), b.end(), x) != b.end()) common.push_back(x);
        }
        if (*std::min_element(common.begin(), common.end()) != v || common.size() < 2) continue;
        bool edge = common.size() == 2 && consecutive(a, common[0], common[1]) &&
                    consecutive(b, common[0], common[1]);
        if (!edge && !same_cycle(a, b)) {
          add(Axiom::kFaceIntersection, "faces " + face_text(a) + " and " + face_text(b) +
              " meet in something other than a vertex or an edge", common,
              {good_index[at[i]], good_index[at[j]]});
        }
      }
    }
  }

  // Link condition: the faces at v, seen as edges between the two neighbors
  // of v they contain, must form one cycle of length >= 3.
  for (Vertex v = 0; v < n; ++v) {
    const auto& at = inc.vertex_faces[v];
    if (at.empty()) {
      add(Axiom::kLinkCondition, "vertex " + std::to_string(v) + " lies on no face", {v});
      continue;
    }
    std::map<Vertex, std::vector<int>> ends;
    for (int f : at) {
      const Face& face = good[f];
      int j = detail::index_in(face, v);
      const std::size_t len = face.size();
      ends[face[(j + 1) % len]].push_back(f);
      ends[face[(j + len - 1) % len]].push_back(f);
    }
    bool ok = at.size() >= 3;
    for (const auto& [w, faces] : ends) ok = ok && faces.size() == 2;
    if (ok) {
      // Walk the cycle and make sure it visits every face.
      std::vector<char> visited(good.size(), 0);
      int face = at.front();
      const Face& f0 = good[face];
      Vertex from = f0[(detail::index_in(f0, v) + 1) % f0.size()];
      std::size_t steps = 0;
      while (!visited[face]) {
        visited[face] = 1;
        ++steps;
        const Face& cur = good[face];
        int j = detail::index_in(cur, v);
        Vertex next = cur[(j + 1) % cur.size()];
        Vertex prev = cur[(j + cur.size() - 1) % cur.size()];
        Vertex to = next == from ? prev : next;
        const auto& pair = ends[to];
        face = pair[0] == face ? pair[1] : pair[0];
        from = to;
      }
      ok = steps == at.size();
    }
    if (!ok) {
      std::vector<int> faces;
      for (int f : at) faces.push_back(good_index[f]);
      add(Axiom::kLinkCondition, "faces around vertex " + std::to_string(v) + " do not form a single cycle of length >= 3",
          {v}, faces);
    }
  }

  DisjointSets sets(n);
  for (const Face& face : good) {
    for (std::size_t i = 1; i < face.size(); ++i) sets.unite(face[0], face[i]);
  }
  std::vector<Vertex> stray;
  for (Vertex v = 0; v < n; ++v) {
    if (sets.find(v) != sets.find(0)) stray.push_back(v);
  }
  if (!stray.empty()) {
    add(Axiom::kConnectivity, "edge graph is disconnected; " + std::to_string(stray.size()) +
        " vertices unreachable from vertex 0", stray);
  }
  return report;
}

}  // namespace semmap
