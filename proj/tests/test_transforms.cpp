#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "semmap/catalog.hpp"
#include "semmap/invariants.hpp"
#include "semmap/transforms.hpp"

using namespace semmap;
namespace oracle = semmap::testing;

namespace {

const PolyhedralMap& cat(const char* name) { return catalog_entry(name).map; }

std::vector<int> faces_of_size(const PolyhedralMap& map, int size) {
  std::vector<int> out;
  for (int f = 0; f < map.face_count(); ++f) {
    if (static_cast<int>(map.face(f).size()) == size) out.push_back(f);
  }
  return out;
}

bool disjoint(const Face& a, const Face& b) {
  return std::none_of(a.begin(), a.end(), [&](Vertex v) { return std::count(b.begin(), b.end(), v) > 0; });
}

bool contains_cycle(const std::vector<Face>& faces, const Face& face) {
  return std::any_of(faces.begin(), faces.end(), [&](const Face& f) { return same_cycle(f, face); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Double cover

TEST(DoubleCover, LiftsOfKiMatchPublishedTi) {
  const char* bases[] = {"K1", "K2", "K3"};
  const char* covers[] = {"T1", "T2", "T3"};
  for (int i = 0; i < 3; ++i) {
    const PolyhedralMap& base = cat(bases[i]);
    DoubleCover dc = double_cover(base);
    ASSERT_TRUE(validate(dc.cover).ok()) << bases[i];
    SurfaceProfile p = surface_profile(dc.cover);
    EXPECT_TRUE(p.orientable);
    EXPECT_EQ(p.euler_characteristic, -2);
    EXPECT_EQ(p.vertex_count, 24);
    EXPECT_EQ(p.edge_count, 2 * base.edge_count());
    EXPECT_EQ(p.face_count, 2 * base.face_count());
    EXPECT_EQ(semi_equivelar_type(dc.cover).type->to_string(), "(3^5, 4)");
    EXPECT_EQ(dc.witness.fold, 2);
    EXPECT_TRUE(verify_covering(dc.cover, base, dc.witness));
    for (Vertex v = 0; v < 24; ++v) EXPECT_EQ(dc.witness.vertex_map[v], v % 12);
    EXPECT_TRUE(are_isomorphic(dc.cover, cat(covers[i])).isomorphic) << covers[i];
  }
}

TEST(DoubleCover, ProjectivePlaneLiftsToTwelveVertexSphere) {
  DoubleCover dc = double_cover(oracle::projective_plane_6());
  ASSERT_TRUE(validate(dc.cover).ok());
  SurfaceProfile p = surface_profile(dc.cover);
  EXPECT_EQ(p.vertex_count, 12);
  EXPECT_EQ(p.euler_characteristic, 2);
  EXPECT_TRUE(p.orientable);
  EXPECT_EQ(semi_equivelar_type(dc.cover).type->to_string(), "(3^5)");
  EXPECT_TRUE(verify_covering(dc.cover, oracle::projective_plane_6(), dc.witness));
}

TEST(DoubleCover, RefusesOrientableInput) {
  EXPECT_THROW(double_cover(oracle::tetrahedron()), TransformError);
  EXPECT_THROW(double_cover(cat("T1")), TransformError);
}

TEST(VerifyCovering, IdentityAndBrokenWitnesses) {
  const PolyhedralMap& k1 = cat("K1");
  CoveringWitness identity;
  for (Vertex v = 0; v < 12; ++v) identity.vertex_map.push_back(v);
  EXPECT_TRUE(verify_covering(k1, k1, identity));

  DoubleCover dc = double_cover(k1);
  CoveringWitness broken = dc.witness;
  // Send the two lifts of 0 to different base vertices.
  std::swap(broken.vertex_map[12], broken.vertex_map[13]);
  EXPECT_FALSE(verify_covering(dc.cover, k1, broken));

  CoveringWitness wrong_fold = dc.witness;
  wrong_fold.fold = 3;
  EXPECT_FALSE(verify_covering(dc.cover, k1, wrong_fold));
}

// ---------------------------------------------------------------------------
// Cylinders

TEST(CylinderBand, QuadAndTriangleFaceLists) {
  std::vector<Vertex> a{0, 1, 2, 3}, b{4, 5, 6, 7};
  auto quad = cylinder_band(CylinderKind::kQuad, a, b, 0, false);
  ASSERT_EQ(quad.size(), 4u);
  EXPECT_TRUE(contains_cycle(quad, {0, 1, 5, 4}));
  EXPECT_TRUE(contains_cycle(quad, {3, 0, 4, 7}));

  // u_i = b[(offset - i) mod 4] when reflected.
  auto reflected = cylinder_band(CylinderKind::kQuad, a, b, 1, true);
  EXPECT_TRUE(contains_cycle(reflected, {0, 1, 4, 5}));

  std::vector<Vertex> t{0, 1, 2}, s{3, 4, 5};
  auto tri = cylinder_band(CylinderKind::kTri, t, s, 0, false);
  ASSERT_EQ(tri.size(), 6u);
  for (const Face& f : std::vector<Face>{{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5}}) {
    EXPECT_TRUE(contains_cycle(tri, f));
  }
}

TEST(AddCylinder, EveryAdmissibleSpecLowersChiByTwo) {
  // Inside one 12-vertex map most gluings repeat an existing edge, so only
  // some (map, kind) combinations admit any valid result at all.
  int valid = 0;
  for (const char* name : {"K1", "K2", "K3"}) {
    const PolyhedralMap& map = cat(name);
    const int chi = surface_profile(map).euler_characteristic;
    for (CylinderKind kind : {CylinderKind::kQuad, CylinderKind::kTri}) {
      const int l = boundary_length(kind);
      std::vector<int> faces = faces_of_size(map, l);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
          if (!disjoint(map.face(faces[i]), map.face(faces[j]))) continue;
          for (int offset = 0; offset < l; ++offset) {
            for (bool reflect : {false, true}) {
              CylinderSpec spec{kind, faces[i], faces[j], offset, reflect};
              try {
                PolyhedralMap out = add_cylinder(map, spec);
                ++valid;
                ASSERT_TRUE(validate(out).ok());
                EXPECT_EQ(surface_profile(out).euler_characteristic, chi - 2);
                EXPECT_EQ(oracle::euler_by_counting(out), chi - 2);
              } catch (const TransformError& e) {
                EXPECT_FALSE(e.report().ok());
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(valid, 0);
}

TEST(AddCylinder, RejectsSharedVertexAndWrongLength) {
  const PolyhedralMap& k1 = cat("K1");
  std::vector<int> tris = faces_of_size(k1, 3);
  // Faces 0 and 1 of K1 are [0,1,2] and [0,1,7].
  EXPECT_THROW(add_cylinder(k1, CylinderSpec{CylinderKind::kTri, tris[0], tris[1], 0, false}), TransformError);
  std::vector<int> quads = faces_of_size(k1, 4);
  EXPECT_THROW(add_cylinder(k1, CylinderSpec{CylinderKind::kTri, quads[0], quads[1], 0, false}), TransformError);
  EXPECT_THROW(add_cylinder(k1, CylinderSpec{CylinderKind::kQuad, quads[0], quads[1], 7, false}), TransformError);
}

TEST(AddCylinder, TwoMapFormShiftsSecondMap) {
  const PolyhedralMap& k1 = cat("K1");
  const PolyhedralMap& k2 = cat("K2");
  int qa = faces_of_size(k1, 4)[0];
  int qb = faces_of_size(k2, 4)[0];
  PolyhedralMap joined = add_cylinder(k1, k2, CylinderSpec{CylinderKind::kQuad, qa, qb, 0, false});
  EXPECT_EQ(joined.vertex_count(), 24);
  EXPECT_EQ(surface_profile(joined).euler_characteristic, -4);
  // Vertex 12 + v of the result is vertex v of K2.
  PolyhedralMap u = disjoint_union(k1, k2);
  EXPECT_EQ(u.face_count(), k1.face_count() + k2.face_count());
  EXPECT_TRUE(contains_cycle(u.faces(), {12, 13, 14}) == contains_cycle(k2.faces(), {0, 1, 2}));
}

TEST(CylinderSearch, SingleBaseK1HasNoFourCylinderTarget) {
  // chi = -4 for (3^5, 4^2) would need 12 vertices, not a multiple of the 8
  // vertices two quadrangles consume per cylinder.
  std::vector<PolyhedralMap> bases{cat("K1")};
  CylinderSearchResult r = cylinder_search(bases, FaceSequence::parse("3^5,4^2"), -4);
  EXPECT_TRUE(r.maps.empty());

  // Over the 3 internal quad pairs x 8 gluings, any valid result has chi = -3
  // and so cannot be a (3^5, 4^2) map at all.
  const PolyhedralMap& k1 = cat("K1");
  std::vector<int> quads = faces_of_size(k1, 4);
  int valid = 0;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      for (int code = 0; code < 8; ++code) {
        auto out = try_add_cylinders(k1, std::vector<CylinderSpec>{
                                             {CylinderKind::kQuad, quads[i], quads[j], code % 4, code >= 4}});
        if (!out) continue;
        ++valid;
        EXPECT_EQ(surface_profile(*out).euler_characteristic, -3);
        EXPECT_FALSE(semi_equivelar_type(*out).semi_equivelar());
      }
    }
  }
  EXPECT_EQ(valid, 0);
}

TEST(CylinderSearch, QuadBundlesOnK1K2) {
  std::vector<PolyhedralMap> bases{cat("K1"), cat("K2")};
  CylinderSearchResult r = cylinder_search(bases, FaceSequence::parse("3^5,4^2"), -8);
  EXPECT_TRUE(r.exhaustive);
  ASSERT_FALSE(r.maps.empty());
  bool mixed = false;
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    EXPECT_EQ(r.provenance[i].specs.size(), 3u);
    mixed |= r.provenance[i].bases == std::vector<std::string>{"K1", "K2"};
  }
  EXPECT_TRUE(mixed);
  std::set<CanonicalForm> forms;
  for (const PolyhedralMap& m : r.maps) {
    ASSERT_TRUE(validate(m).ok());
    EXPECT_EQ(semi_equivelar_type(m).type->to_string(), "(3^5, 4^2)");
    EXPECT_EQ(surface_profile(m).euler_characteristic, -8);
    forms.insert(canonical_form(m));
  }
  EXPECT_EQ(forms.size(), r.maps.size());
}

TEST(CylinderSearch, TriangleBandsOnTwoCopiesOfK1) {
  std::vector<PolyhedralMap> bases{cat("K1")};
  CylinderSearchOptions options;
  options.max_bundles_per_source = 300;
  CylinderSearchResult r = cylinder_search(bases, FaceSequence::parse("3^7,4"), -10, options);
  ASSERT_FALSE(r.maps.empty());
  EXPECT_FALSE(r.exhaustive);
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    const PolyhedralMap& m = r.maps[i];
    EXPECT_EQ(r.provenance[i].specs.size(), 4u);
    ASSERT_TRUE(validate(m).ok());
    EXPECT_EQ(semi_equivelar_type(m).type->to_string(), "(3^7, 4)");
    EXPECT_EQ(surface_profile(m).euler_characteristic, -10);
    // Replaying the provenance reproduces the map.
    PolyhedralMap replay = *try_add_cylinders(disjoint_union(cat("K1"), cat("K1")), r.provenance[i].specs);
    EXPECT_TRUE(are_isomorphic(replay, m).isomorphic);
  }
}

TEST(CylinderSearch, DeterministicAcrossJobCounts) {
  std::vector<PolyhedralMap> bases{cat("K2"), cat("K3")};
  CylinderSearchOptions one, many;
  many.jobs = 3;
  auto a = cylinder_search(bases, FaceSequence::parse("3^5,4^2"), -8, one);
  auto b = cylinder_search(bases, FaceSequence::parse("3^5,4^2"), -8, many);
  ASSERT_EQ(a.maps.size(), b.maps.size());
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    EXPECT_EQ(a.maps[i], b.maps[i]);
    EXPECT_EQ(a.provenance[i].specs, b.provenance[i].specs);
  }
}

// ---------------------------------------------------------------------------
// Stacking

TEST(StackFaces, K1GivesTwelveCoveredTriangulation) {
  const PolyhedralMap& k1 = cat("K1");
  PolyhedralMap s = stack_faces(k1);
  ASSERT_TRUE(validate(s).ok());
  EXPECT_EQ(s.vertex_count(), 35);
  EXPECT_EQ(surface_profile(s).euler_characteristic, -1);
  int perimeter = 0;
  for (const Face& f : k1.faces()) perimeter += static_cast<int>(f.size());
  EXPECT_EQ(s.edge_count(), k1.edge_count() + perimeter);
  EXPECT_EQ(s.face_count(), perimeter);
  for (const Face& f : s.faces()) EXPECT_EQ(f.size(), 3u);
  std::vector<int> degree = vertex_degrees(s);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(degree[v], 12);
  EXPECT_TRUE(is_d_covered(s, 12));
}

TEST(StackFaces, TetrahedronAndEveryCatalogSem) {
  PolyhedralMap s = stack_faces(oracle::tetrahedron());
  EXPECT_EQ(s.vertex_count(), 8);
  EXPECT_EQ(surface_profile(s).euler_characteristic, 2);
  for (const char* name : {"K1", "K2", "K3", "T1", "T2", "T3", "N"}) {
    PolyhedralMap st = stack_faces(cat(name));
    EXPECT_EQ(surface_profile(st).euler_characteristic, surface_profile(cat(name)).euler_characteristic);
    EXPECT_TRUE(is_d_covered(st, 12)) << name;
  }
}
