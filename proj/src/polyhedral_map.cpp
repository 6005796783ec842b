#include "semmap/polyhedral_map.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "incidence.hpp"

namespace semmap {

Face normalize_face(std::span<const Vertex> face) {
  if (face.empty()) return {};
  const std::size_t len = face.size();
  std::size_t start = std::min_element(face.begin(), face.end()) - face.begin();
  Face forward(len), backward(len);
  for (std::size_t i = 0; i < len; ++i) {
    forward[i] = face[(start + i) % len];
    backward[i] = face[(start + len - i) % len];
  }
  return std::min(forward, backward);
}

bool same_cycle(std::span<const Vertex> a, std::span<const Vertex> b) {
  return a.size() == b.size() && normalize_face(a) == normalize_face(b);
}

PolyhedralMap::PolyhedralMap(int vertex_count, std::vector<Face> faces, std::string name)
    : vertex_count_(vertex_count), faces_(std::move(faces)), name_(std::move(name)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

PolyhedralMap PolyhedralMap::with_name(std::string name) const {
  PolyhedralMap copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<Edge> PolyhedralMap::edges() const {
  std::vector<Edge> out;
  for (const Face& face : faces_) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vertex a = face[i], b = face[(i + 1) % face.size()];
      if (a != b) out.push_back(make_edge(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> PolyhedralMap::normalized_faces() const {
  std::vector<Face> out;
  out.reserve(faces_.size());
  for (const Face& face : faces_) out.push_back(normalize_face(face));
  std::sort(out.begin(), out.end());
  return out;
}

bool PolyhedralMap::operator==(const PolyhedralMap& other) const {
  return vertex_count_ == other.vertex_count_ && normalized_faces() == other.normalized_faces();
}

PolyhedralMap relabel(const PolyhedralMap& map, std::span<const Vertex> permutation) {
  if (static_cast<int>(permutation.size()) != map.vertex_count()) {
    throw std::invalid_argument("permutation size does not match vertex count");
  }
  std::vector<Face> faces;
  faces.reserve(map.face_count());
  for (const Face& face : map.faces()) {
    Face out;
    out.reserve(face.size());
    for (Vertex v : face) out.push_back(permutation[v]);
    faces.push_back(std::move(out));
  }
  return PolyhedralMap(map.vertex_count(), std::move(faces), map.name());
}

// ---------------------------------------------------------------------------

std::optional<std::vector<bool>> coherent_orientation(const PolyhedralMap& map) {
  const int nf = map.face_count();
  // +1: face kept as stored, -1: reversed, 0: not yet visited.
  std::vector<int> dir(nf, 0);
  // edge -> (face, sign of traversal min->max in stored order)
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> uses;
  for (int f = 0; f < nf; ++f) {
    const Face& face = map.face(f);
    for (std::size_t i = 0; i < face.size(); ++i) {
      Vertex a = face[i], b = face[(i + 1) % face.size()];
      uses[detail::edge_key(a, b)].push_back({f, a < b ? 1 : -1});
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adjacency(nf);  // (other face, relation)
  for (const auto& [key, list] : uses) {
    if (list.size() != 2) continue;
    auto [f, sf] = list[0];
    auto [g, sg] = list[1];
    // Coherent when dir[f]*sf == -dir[g]*sg, i.e. dir[g] = -dir[f]*sf*sg.
    int relation = -sf * sg;
    adjacency[f].push_back({g, relation});
    adjacency[g].push_back({f, relation});
  }
  for (int root = 0; root < nf; ++root) {
    if (dir[root] != 0) continue;
    dir[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (auto [g, relation] : adjacency[f]) {
        int want = dir[f] * relation;
        if (dir[g] == 0) {
          dir[g] = want;
          queue.push_back(g);
        } else if (dir[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> reversed(nf);
  for (int f = 0; f < nf; ++f) reversed[f] = dir[f] < 0;
  return reversed;
}

SurfaceProfile surface_profile(const PolyhedralMap& map) {
  SurfaceProfile p;
  p.vertex_count = map.vertex_count();
  p.edge_count = map.edge_count();
  p.face_count = map.face_count();
  p.euler_characteristic = p.vertex_count - p.edge_count + p.face_count;
  p.orientable = coherent_orientation(map).has_value();
  return p;
}

// ---------------------------------------------------------------------------

std::string VertexLink::to_string() const {
  // Start on the first non-triangular corner so quadrangles lead, as in
  // C_7([2, 3, 4], 5, 6, 7, 1).
  const int d = degree();
  int start = 0;
  for (int i = 0; i < d; ++i) {
    if (corners[i].face_size() > 3) {
      start = i;
      break;
    }
  }
  std::ostringstream out;
  out << "C_" << [&] {
    int len = 0;
    for (const auto& c : corners) len += c.face_size() - 2;
    return len;
  }() << "(";
  bool first = true;
  bool skip_next_neighbor = false;
  for (int k = 0; k < d; ++k) {
    const LinkCorner& c = corners[(start + k) % d];
    const LinkCorner& next = corners[(start + k + 1) % d];
    if (c.face_size() > 3) {
      if (!first) out << ", ";
      out << "[" << c.neighbor << ", ";
      for (Vertex v : c.interior) out << v << ", ";
      out << next.neighbor << "]";
      skip_next_neighbor = true;
    } else {
      if (!skip_next_neighbor) {
        if (!first) out << ", ";
        out << c.neighbor;
      }
      skip_next_neighbor = false;
    }
    first = false;
  }
  out << ")";
  return out.str();
}

bool VertexLink::equivalent(const VertexLink& other) const {
  if (center != other.center || degree() != other.degree()) return false;
  auto faces_of = [](const VertexLink& link) {
    std::vector<Face> out;
    for (int i = 0; i < link.degree(); ++i) {
      const LinkCorner& c = link.corners[i];
      Face f{link.center, c.neighbor};
      f.insert(f.end(), c.interior.begin(), c.interior.end());
      f.push_back(link.corners[(i + 1) % link.degree()].neighbor);
      out.push_back(normalize_face(f));
    }
    return out;
  };
  // Same cyclic sequence of faces, allowing rotation and reversal.
  std::vector<Face> a = faces_of(*this);
  std::vector<Face> b = faces_of(other);
  const int d = degree();
  for (int shift = 0; shift < d; ++shift) {
    bool fwd = true, bwd = true;
    for (int i = 0; i < d && (fwd || bwd); ++i) {
      if (a[i] != b[(shift + i) % d]) fwd = false;
      if (a[i] != b[((shift - i) % d + d) % d]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

namespace {

// Orients face `f` at `center` so that it starts at neighbor `from`; returns
// the corner and the neighbor where it ends. Returns false if `from` is not
// adjacent to `center` in this face.
bool orient_corner(const Face& face, int f, Vertex center, Vertex from, LinkCorner& corner,
                   Vertex& to) {
  const int len = static_cast<int>(face.size());
  int j = detail::index_in(face, center);
  if (j < 0) return false;
  Vertex next = face[(j + 1) % len];
  Vertex prev = face[(j + len - 1) % len];
  corner = LinkCorner{from, {}, f};
  if (next == from) {
    for (int k = 2; k <= len - 2; ++k) corner.interior.push_back(face[(j + k) % len]);
    to = prev;
  } else if (prev == from) {
    for (int k = 2; k <= len - 2; ++k) corner.interior.push_back(face[(j - k + 2 * len) % len]);
    to = next;
  } else {
    return false;
  }
  return true;
}

VertexLink link_from(const PolyhedralMap& map, const detail::Incidence& inc, Vertex v) {
  if (v < 0 || v >= map.vertex_count()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  const auto& at = inc.vertex_faces[v];
  if (at.empty()) throw std::domain_error("vertex " + std::to_string(v) + " lies on no face");

  VertexLink link;
  link.center = v;
  const Face& first = map.face(at.front());
  int j = detail::index_in(first, v);
  Vertex start = first[(j + 1) % first.size()];
  Vertex from = start;
  int face = at.front();
  std::set<int> seen;
  for (;;) {
    LinkCorner corner;
    Vertex to;
    if (!orient_corner(map.face(face), face, v, from, corner, to)) {
      throw std::domain_error("link of vertex " + std::to_string(v) + " is malformed");
    }
    seen.insert(face);
    link.corners.push_back(std::move(corner));
    if (to == start) break;
    const auto& candidates = inc.faces_at_edge(v, to);
    int other = -1;
    for (int g : candidates) {
      if (g != face) {
        if (other != -1) throw std::domain_error("edge in more than two faces at vertex " + std::to_string(v));
        other = g;
      }
    }
    if (other == -1 || seen.count(other)) {
      throw std::domain_error("link of vertex " + std::to_string(v) + " does not close up");
    }
    from = to;
    face = other;
  }
  if (seen.size() != at.size()) {
    throw std::domain_error("faces at vertex " + std::to_string(v) + " form more than one cycle");
  }
  return link;
}

}  // namespace

VertexLink vertex_link(const PolyhedralMap& map, Vertex v) {
  detail::Incidence inc(map);
  return link_from(map, inc, v);
}

std::vector<VertexLink> vertex_links(const PolyhedralMap& map) {
  detail::Incidence inc(map);
  std::vector<VertexLink> out;
  out.reserve(map.vertex_count());
  for (Vertex v = 0; v < map.vertex_count(); ++v) out.push_back(link_from(map, inc, v));
  return out;
}

FaceSequence face_sequence(const PolyhedralMap& map, Vertex v) {
  if (v < 0 || v >= map.vertex_count()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::vector<int> sizes;
  for (const Face& face : map.faces()) {
    if (std::find(face.begin(), face.end(), v) != face.end()) {
      sizes.push_back(static_cast<int>(face.size()));
    }
  }
  return FaceSequence::from_sizes(sizes);
}

TypeCheck semi_equivelar_type(const PolyhedralMap& map) {
  TypeCheck check;
  if (map.vertex_count() == 0) return check;
  std::vector<std::vector<int>> sizes(map.vertex_count());
  for (const Face& face : map.faces()) {
    for (Vertex v : face) sizes[v].push_back(static_cast<int>(face.size()));
  }
  FaceSequence first = FaceSequence::from_sizes(sizes[0]);
  for (Vertex v = 1; v < map.vertex_count(); ++v) {
    if (FaceSequence::from_sizes(sizes[v]) != first) {
      check.witness_a = 0;
      check.witness_b = v;
      return check;
    }
  }
  check.type = first;
  return check;
}

std::vector<int> vertex_degrees(const PolyhedralMap& map) {
  std::vector<int> degree(map.vertex_count(), 0);
  for (const Face& face : map.faces()) {
    for (Vertex v : face) ++degree[v];
  }
  return degree;
}

bool is_d_covered(const PolyhedralMap& map, int d) {
  for (const Face& face : map.faces()) {
    if (face.size() != 3) throw std::invalid_argument("is_d_covered requires a triangulation");
  }
  std::vector<int> degree = vertex_degrees(map);
  for (auto [a, b] : map.edges()) {
    if (degree[a] != d && degree[b] != d) return false;
  }
  return true;
}

}  // namespace semmap

namespace semmap {

std::vector<Face> link_faces(const VertexLink& link) {
  std::vector<Face> out;
  const int d = link.degree();
  for (int i = 0; i < d; ++i) {
    const LinkCorner& c = link.corners[i];
    Face f{link.center, c.neighbor};
    f.insert(f.end(), c.interior.begin(), c.interior.end());
    f.push_back(link.corners[(i + 1) % d].neighbor);
    out.push_back(std::move(f));
  }
  return out;
}

VertexLink parse_link(Vertex center, std::string_view text) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("bad link '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> Vertex {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw bad("expected a vertex at offset " + std::to_string(start));
    return std::stoi(std::string(text.substr(start, pos - start)));
  };

  skip();
  if (pos < text.size() && (text[pos] == 'C' || text[pos] == 'c')) {
    ++pos;
    if (pos < text.size() && text[pos] == '_') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    skip();
  }
  if (pos >= text.size() || text[pos] != '(') throw bad("expected '('");
  ++pos;

  // Flattened cyclic sequence of link vertices plus the spans of bracketed
  // blocks (start index, number of vertices).
  std::vector<Vertex> seq;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      std::vector<Vertex> block{number()};
      for (;;) {
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          block.push_back(number());
        } else {
          break;
        }
      }
      skip();
      if (pos >= text.size() || text[pos] != ']') throw bad("expected ']'");
      ++pos;
      if (block.size() < 3) throw bad("a bracketed face needs at least 3 link vertices");
      std::size_t start = seq.size();
      if (!seq.empty() && seq.back() == block.front()) {
        --start;
        seq.insert(seq.end(), block.begin() + 1, block.end());
      } else {
        seq.insert(seq.end(), block.begin(), block.end());
      }
      blocks.push_back({start, block.size()});
    } else {
      seq.push_back(number());
    }
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  skip();
  if (pos >= text.size() || text[pos] != ')') throw bad("expected ')'");
  if (seq.size() > 1 && !blocks.empty() && seq.back() == seq.front() &&
      blocks.back().first + blocks.back().second == seq.size()) {
    seq.pop_back();
  }

  VertexLink link;
  link.center = center;
  std::size_t i = 0;
  std::size_t b = 0;
  while (i < seq.size()) {
    if (b < blocks.size() && blocks[b].first == i) {
      const std::size_t len = blocks[b].second;
      LinkCorner corner{seq[i], {}, -1};
      for (std::size_t k = 1; k + 1 < len; ++k) corner.interior.push_back(seq[(i + k) % seq.size()]);
      link.corners.push_back(std::move(corner));
      i += len - 1;
      ++b;
    } else {
      link.corners.push_back({seq[i], {}, -1});
      ++i;
    }
  }
  if (link.corners.size() < 3) throw bad("a link needs at least 3 faces");
  std::vector<Vertex> all = seq;
  all.push_back(center);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw bad("repeated vertex");
  return link;
}

}  // namespace semmap
