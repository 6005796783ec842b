#include "semmap/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "incidence.hpp"

namespace semmap {

DoubleCover double_cover(const PolyhedralMap& map) {
  ValidationReport report = validate(map);
  if (!report.ok()) throw TransformError("double cover needs a valid map", report);
  if (coherent_orientation(map)) {
    throw TransformError("map is orientable; its orientation cover is two disjoint copies");
  }

  const int n = map.vertex_count();
  // sign[f][j] = +1 when face f, read in stored order, runs through its j-th
  // vertex in the direction of that vertex's reference link orientation.
  std::vector<std::vector<int>> sign(map.face_count());
  for (int f = 0; f < map.face_count(); ++f) sign[f].assign(map.face(f).size(), 0);
  for (const VertexLink& link : vertex_links(map)) {
    const int d = link.degree();
    for (int i = 0; i < d; ++i) {
      const LinkCorner& c = link.corners[i];
      const Face& face = map.face(c.face);
      const int len = static_cast<int>(face.size());
      int j = detail::index_in(face, link.center);
      sign[c.face][j] = face[(j + len - 1) % len] == c.neighbor ? 1 : -1;
    }
  }

  std::vector<Face> faces;
  faces.reserve(2 * map.face_count());
  for (int sheet : {1, -1}) {
    for (int f = 0; f < map.face_count(); ++f) {
      const Face& face = map.face(f);
      Face lifted;
      lifted.reserve(face.size());
      for (std::size_t j = 0; j < face.size(); ++j) {
        lifted.push_back(sheet * sign[f][j] > 0 ? face[j] : face[j] + n);
      }
      faces.push_back(std::move(lifted));
    }
  }

  DoubleCover out;
  std::string name = map.name().empty() ? "cover" : map.name() + "_cover";
  out.cover = PolyhedralMap(2 * n, std::move(faces), name);
  out.witness.fold = 2;
  out.witness.vertex_map.resize(2 * n);
  for (int v = 0; v < 2 * n; ++v) out.witness.vertex_map[v] = v % n;

  ValidationReport cover_report = validate(out.cover);
  if (!cover_report.ok()) throw TransformError("orientation cover failed validation", cover_report);
  return out;
}

bool verify_covering(const PolyhedralMap& cover, const PolyhedralMap& base, const CoveringWitness& witness) {
  const int nc = cover.vertex_count();
  const int nb = base.vertex_count();
  if (witness.fold < 1 || static_cast<int>(witness.vertex_map.size()) != nc) return false;
  if (static_cast<long long>(nb) * witness.fold != nc) return false;
  std::vector<int> preimages(nb, 0);
  for (Vertex x : witness.vertex_map) {
    if (x < 0 || x >= nb) return false;
    ++preimages[x];
  }
  for (int count : preimages) {
    if (count != witness.fold) return false;
  }

  std::set<Face> base_faces;
  for (const Face& face : base.faces()) base_faces.insert(normalize_face(face));

  auto image_of = [&](const Face& face) {
    Face img;
    img.reserve(face.size());
    for (Vertex v : face) img.push_back(witness.vertex_map[v]);
    return img;
  };

  std::vector<Face> images(cover.face_count());
  for (int f = 0; f < cover.face_count(); ++f) {
    Face img = image_of(cover.face(f));
    Face sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    images[f] = normalize_face(img);
    if (!base_faces.count(images[f])) return false;
  }

  detail::Incidence cover_inc(cover);
  detail::Incidence base_inc(base);
  for (Vertex x = 0; x < nc; ++x) {
    const Vertex y = witness.vertex_map[x];
    const auto& around = cover_inc.vertex_faces[x];
    if (around.size() != base_inc.vertex_faces[y].size()) return false;
    std::set<Face> seen;
    for (int f : around) {
      if (!seen.insert(images[f]).second) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view cylinder_kind_name(CylinderKind kind) {
  return kind == CylinderKind::kQuad ? "quad" : "tri";
}

int boundary_length(CylinderKind kind) { return kind == CylinderKind::kQuad ? 4 : 3; }

std::vector<Face> cylinder_band(CylinderKind kind, std::span<const Vertex> a, std::span<const Vertex> b,
                                int offset, bool reflect) {
  const int l = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != l || l != boundary_length(kind)) {
    throw TransformError("cylinder boundaries must both have length " + std::to_string(boundary_length(kind)));
  }
  std::vector<Vertex> u(l);
  for (int i = 0; i < l; ++i) {
    int k = reflect ? offset - i : offset + i;
    u[i] = b[((k % l) + l) % l];
  }
  std::vector<Face> band;
  for (int i = 0; i < l; ++i) {
    const int j = (i + 1) % l;
    if (kind == CylinderKind::kQuad) {
      band.push_back({a[i], a[j], u[j], u[i]});
    } else {
      band.push_back({a[i], a[j], u[j]});
      band.push_back({a[i], u[j], u[i]});
    }
  }
  return band;
}

PolyhedralMap disjoint_union(const PolyhedralMap& a, const PolyhedralMap& b) {
  std::vector<Face> faces = a.faces();
  const int shift = a.vertex_count();
  for (const Face& face : b.faces()) {
    Face moved;
    for (Vertex v : face) moved.push_back(v + shift);
    faces.push_back(std::move(moved));
  }
  std::string name = a.name() + "+" + b.name();
  return PolyhedralMap(a.vertex_count() + b.vertex_count(), std::move(faces), name);
}

std::optional<PolyhedralMap> try_add_cylinders(const PolyhedralMap& surface, std::span<const CylinderSpec> specs,
                                               std::string* error, ValidationReport* report_out) {
  auto fail = [error](std::string message) -> std::optional<PolyhedralMap> {
    if (error) *error = std::move(message);
    return std::nullopt;
  };
  std::vector<char> removed(surface.face_count(), 0);
  std::vector<Face> band_faces;
  for (const CylinderSpec& spec : specs) {
    if (spec.face_a < 0 || spec.face_a >= surface.face_count() || spec.face_b < 0 ||
        spec.face_b >= surface.face_count()) {
      return fail("cylinder face index out of range");
    }
    if (spec.face_a == spec.face_b) return fail("cylinder needs two distinct faces");
    const Face& a = surface.face(spec.face_a);
    const Face& b = surface.face(spec.face_b);
    const int l = boundary_length(spec.kind);
    if (static_cast<int>(a.size()) != l || static_cast<int>(b.size()) != l) {
      return fail("faces for a " + std::string(cylinder_kind_name(spec.kind)) + " cylinder must have length " +
                  std::to_string(l));
    }
    for (Vertex v : a) {
      if (std::find(b.begin(), b.end(), v) != b.end()) {
        return fail("cylinder faces share vertex " + std::to_string(v));
      }
    }
    if (spec.offset < 0 || spec.offset >= l) return fail("gluing offset out of range");
    if (removed[spec.face_a] || removed[spec.face_b]) return fail("face used by two cylinders");
    removed[spec.face_a] = removed[spec.face_b] = 1;
    auto band = cylinder_band(spec.kind, a, b, spec.offset, spec.reflect);
    band_faces.insert(band_faces.end(), band.begin(), band.end());
  }
  std::vector<Face> faces;
  for (int f = 0; f < surface.face_count(); ++f) {
    if (!removed[f]) faces.push_back(surface.face(f));
  }
  faces.insert(faces.end(), band_faces.begin(), band_faces.end());
  PolyhedralMap result(surface.vertex_count(), std::move(faces), surface.name() + "+cyl");
  ValidationReport report = validate(result);
  if (report_out) *report_out = report;
  if (!report.ok()) return fail("cylinder addition produced an invalid map: " + report.violations.front().detail);
  return result;
}

PolyhedralMap add_cylinder(const PolyhedralMap& map, const CylinderSpec& spec) {
  std::string error;
  ValidationReport report;
  auto result = try_add_cylinders(map, std::span(&spec, 1), &error, &report);
  if (!result) throw TransformError(error, report);
  return *std::move(result);
}

PolyhedralMap add_cylinder(const PolyhedralMap& a, const PolyhedralMap& b, const CylinderSpec& spec) {
  if (spec.face_b < 0 || spec.face_b >= b.face_count()) throw TransformError("cylinder face index out of range");
  PolyhedralMap joined = disjoint_union(a, b);
  CylinderSpec shifted = spec;
  shifted.face_b = a.face_count() + spec.face_b;
  return add_cylinder(joined, shifted);
}

// ---------------------------------------------------------------------------

PolyhedralMap stack_faces(const PolyhedralMap& map) {
  const int n = map.vertex_count();
  std::vector<Face> faces;
  for (int f = 0; f < map.face_count(); ++f) {
    const Face& face = map.face(f);
    const Vertex center = n + f;
    for (std::size_t i = 0; i < face.size(); ++i) {
      faces.push_back({face[i], face[(i + 1) % face.size()], center});
    }
  }
  std::string name = map.name().empty() ? "stacked" : map.name() + "_stacked";
  return PolyhedralMap(n + map.face_count(), std::move(faces), name);
}

}  // namespace semmap
