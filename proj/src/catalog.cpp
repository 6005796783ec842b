#include "semmap/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "semmap/invariants.hpp"
#include "semmap/map_io.hpp"

namespace semmap {

namespace {

// Face lists of the (3^5, 4) maps on the chi = -1 surface. Labels u and v
// are the aliases for 10 and 11.
constexpr std::string_view kK1 = R"map(
map K1 vertices=12
f 0 1 2
f 0 1 7
f 0 4 5
f 0 5 6
f 0 6 7
f 1 2 8
f 1 5 8
f 1 5 u
f 2 3 6
f 2 6 7
f 2 7 8
f 3 4 v
f 3 6 9
f 3 9 u
f 3 u v
f 4 5 u
f 4 9 u
f 4 9 v
f 7 8 v
f 8 9 v
f 0 2 3 4
f 1 7 v u
f 5 6 9 8
)map";
constexpr std::string_view kK2 = R"map(
map K2 vertices=12
f 0 1 2
f 0 1 7
f 0 4 5
f 0 5 6
f 0 6 7
f 1 2 9
f 1 7 v
f 1 8 9
f 2 3 8
f 2 6 8
f 2 6 9
f 3 4 v
f 3 8 9
f 3 9 u
f 3 u v
f 4 5 u
f 4 7 u
f 4 7 v
f 5 6 8
f 5 u v
f 0 2 3 4
f 1 8 5 v
f 6 7 u 9
)map";
constexpr std::string_view kK3 = R"map(
map K3 vertices=12
f 0 1 2
f 0 1 7
f 0 4 5
f 0 5 6
f 0 6 7
f 1 2 9
f 1 7 8
f 1 9 v
f 2 3 8
f 2 6 8
f 2 6 9
f 3 4 v
f 3 7 8
f 3 7 u
f 3 u v
f 4 5 u
f 4 9 u
f 4 9 v
f 5 6 8
f 5 u v
f 0 2 3 4
f 8 5 v 1
f 6 7 u 9
)map";

// Orientable double covers of K1, K2, K3, as published.
constexpr std::string_view kT1 = R"map(
map T1 vertices=24
f 0 1 2
f 0 1 7
f 0 6 7
f 0 6 13
f 0 4 13
f 1 2 8
f 1 5 8
f 1 5 10
f 2 7 8
f 2 6 7
f 2 3 6
f 3 6 9
f 3 9 10
f 3 10 22
f 3 4 22
f 4 22 15
f 4 15 14
f 4 14 13
f 5 10 19
f 5 19 12
f 5 12 23
f 7 8 22
f 8 15 22
f 9 10 19
f 9 11 16
f 9 11 19
f 11 16 17
f 11 19 21
f 11 14 21
f 12 17 23
f 12 17 18
f 12 18 20
f 13 14 18
f 13 16 18
f 14 15 21
f 15 21 23
f 16 17 20
f 16 18 20
f 17 20 23
f 20 21 23
f 0 2 3 4
f 1 7 22 10
f 5 8 15 23
f 6 9 16 13
f 11 14 18 17
f 12 19 21 20
)map";
constexpr std::string_view kT2 = R"map(
map T2 vertices=24
f 0 2 13
f 0 13 7
f 0 6 7
f 0 5 6
f 0 4 5
f 1 8 9
f 1 9 14
f 1 12 14
f 1 12 19
f 1 11 19
f 2 3 8
f 2 6 8
f 2 6 21
f 2 13 21
f 3 8 9
f 3 9 22
f 3 22 23
f 3 4 23
f 4 5 10
f 4 7 10
f 4 7 23
f 5 6 8
f 5 10 11
f 7 13 23
f 9 14 18
f 10 11 15
f 10 15 21
f 11 15 16
f 11 16 19
f 12 18 19
f 12 17 18
f 12 16 17
f 13 20 21
f 14 15 20
f 14 18 20
f 15 20 21
f 16 17 22
f 16 19 22
f 17 18 20
f 17 22 23
f 0 2 3 4
f 1 8 5 11
f 6 7 10 21
f 9 18 19 22
f 12 14 15 16
f 13 20 17 23
)map";
// As published, T3 lists the triangle [10, 11, 17], which leaves the 4-cycle
// 10-11-17-23 uncovered. [10, 23, 17] is the only single-label change that
// gives a valid map, and the result is isomorphic to the double cover of K3.
constexpr std::string_view kT3 = R"map(
map T3 vertices=24
f 0 1 2
f 0 1 7
f 0 6 7
f 0 5 6
f 0 4 5
f 1 2 9
f 1 9 11
f 1 7 8
f 2 3 8
f 2 6 8
f 2 6 9
f 3 7 8
f 3 7 10
f 3 10 23
f 3 4 23
f 4 5 22
f 4 21 22
f 4 21 23
f 5 6 8
f 5 11 22
f 9 11 16
f 9 10 16
f 10 23 17
f 10 16 17
f 11 15 16
f 11 15 22
f 12 16 17
f 12 17 18
f 12 18 19
f 12 13 19
f 12 13 14
f 13 14 21
f 13 21 23
f 13 19 20
f 14 18 20
f 14 18 21
f 14 15 20
f 15 19 22
f 15 19 20
f 17 18 20
f 0 2 3 4
f 1 8 5 11
f 6 7 10 9
f 12 14 15 16
f 13 20 17 23
f 18 19 22 21
)map";

// Non-orientable (3^5, 4) map with chi = -2. Loaded with duplicate removal;
// the second copy of {1, 5, 8} is dropped, leaving 40 triangles and 6
// quadrangles. With the repeat kept, edges 1-5, 1-8 and 5-8 would each lie
// in three faces.
constexpr std::string_view kNraw = R"map(
map N vertices=24
# Published listing; the triangle {1, 5, 8} appears twice, as [1, 8, 5] and [5, 1, 8].
f 0 1 2
f 0 1 18
f 0 18 14
f 0 14 15
f 0 15 4
f 1 2 8
f 1 8 5
f 1 5 10
f 2 3 6
f 2 6 7
f 2 7 8
f 3 6 13
f 3 10 13
f 3 10 11
f 3 4 11
f 4 11 9
f 4 9 16
f 4 15 16
f 5 1 8
f 5 10 17
f 5 17 23
f 5 6 23
f 6 7 23
f 7 8 12
f 7 22 23
f 8 12 13
f 9 11 19
f 9 16 21
f 9 14 21
f 10 13 17
f 12 13 17
f 12 17 21
f 12 21 16
f 14 18 20
f 14 20 21
f 15 16 22
f 15 19 22
f 18 19 20
f 18 11 19
f 19 20 22
f 20 22 23
f 0 2 3 4
f 1 10 11 18
f 5 6 13 8
f 7 12 16 22
f 9 14 15 19
f 17 21 20 23
)map";

constexpr std::string_view kTetrahedron = R"map(
map tetrahedron vertices=4
f 0 1 2
f 0 1 3
f 0 2 3
f 1 2 3
)map";

constexpr std::string_view kCube = R"map(
map cube vertices=8
f 0 1 2 3
f 4 5 6 7
f 0 1 5 4
f 1 2 6 5
f 2 3 7 6
f 3 0 4 7
)map";

// Vertex-minimal triangulation of the real projective plane (hemi-icosahedron).
constexpr std::string_view kProjectivePlane6 = R"map(
map RP2_6 vertices=6
f 0 1 2
f 0 2 3
f 0 3 4
f 0 4 5
f 0 5 1
f 1 2 4
f 2 3 5
f 3 4 1
f 4 5 2
f 5 1 3
)map";

CatalogEntry make_entry(std::string_view text, std::string provenance, ExpectedProfile expected,
                        bool dedupe = false) {
  ParseOptions options;
  options.dedupe = dedupe;
  PolyhedralMap map = parse_map(text, options);
  std::string name = map.name();
  return {std::move(name), std::move(map), std::move(provenance), std::move(expected)};
}

std::vector<CatalogEntry> load() {
  std::vector<CatalogEntry> entries;
  const std::string sem = "(3^5, 4)";
  entries.push_back(make_entry(kK1, "published face list K1", {-1, false, sem, false}));
  entries.push_back(make_entry(kK2, "published face list K2", {-1, false, sem, false}));
  entries.push_back(make_entry(kK3, "published face list K3", {-1, false, sem, false}));
  entries.push_back(make_entry(kT1, "published face list T1 (double cover of K1)", {-2, true, sem, false}));
  entries.push_back(make_entry(kT2, "published face list T2 (double cover of K2)", {-2, true, sem, false}));
  entries.push_back(make_entry(kT3, "published face list T3 (double cover of K3); triangle [10, 11, 17] corrected to [10, 23, 17]", {-2, true, sem, false}));
  entries.push_back(make_entry(kNraw,
                               "published face list N; repeated triangle [5, 1, 8] removed (it duplicates [1, 8, 5])",
                               {-2, false, sem, false}, true));
  entries.push_back(make_entry(kTetrahedron, "reference: boundary of the 3-simplex", {2, true, "(3^3)", true}));
  entries.push_back(make_entry(kCube, "reference: cube", {2, true, "(4^3)", true}));
  entries.push_back(make_entry(kProjectivePlane6, "reference: 6-vertex real projective plane",
                               {1, false, "(3^5)", true}));
  for (const CatalogEntry& entry : entries) {
    ValidationReport report = validate(entry.map);
    if (!report.ok()) {
      throw std::logic_error("catalog entry " + entry.name + " is invalid:\n" + report.to_string());
    }
    auto diff = profile_mismatches(entry);
    if (!diff.empty()) throw std::logic_error("catalog entry " + entry.name + ": " + diff.front());
  }
  return entries;
}

}  // namespace

std::vector<std::string> profile_mismatches(const CatalogEntry& entry) {
  std::vector<std::string> out;
  SurfaceProfile p = surface_profile(entry.map);
  if (p.euler_characteristic != entry.expected.euler_characteristic) {
    out.push_back("euler characteristic " + std::to_string(p.euler_characteristic) + ", expected " +
                  std::to_string(entry.expected.euler_characteristic));
  }
  if (p.orientable != entry.expected.orientable) out.push_back("orientability differs");
  TypeCheck t = semi_equivelar_type(entry.map);
  std::string type = t.type ? t.type->to_string() : "not semi-equivelar";
  if (type != entry.expected.type) out.push_back("type " + type + ", expected " + entry.expected.type);
  if (is_vertex_transitive(entry.map) != entry.expected.vertex_transitive) {
    out.push_back("vertex transitivity differs");
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  auto same = [name](const std::string& other) {
    return std::equal(name.begin(), name.end(), other.begin(), other.end(), [](char x, char y) {
      return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
    });
  };
  for (const CatalogEntry& entry : catalog()) {
    if (same(entry.name)) return &entry;
  }
  return nullptr;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw std::out_of_range("no catalog entry named '" + std::string(name) + "'");
  return *entry;
}

std::string_view raw_n_listing() { return kNraw; }

}  // namespace semmap
