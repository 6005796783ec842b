#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semmap/polyhedral_map.hpp"

namespace semmap {

struct ExpectedProfile {
  int euler_characteristic = 0;
  bool orientable = false;
  std::string type;  // FaceSequence::to_string() form
  bool vertex_transitive = false;
};

struct CatalogEntry {
  std::string name;
  PolyhedralMap map;
  std::string provenance;
  ExpectedProfile expected;
};

/// Bundled reference maps: the three (3^5, 4) maps on the chi = -1 surface
/// (K1, K2, K3), their orientable double covers (T1, T2, T3), the
/// non-orientable chi = -2 map N, and the tetrahedron, cube and 6-vertex
/// projective plane. Loaded once; every entry is validated and checked
/// against its expected profile, and a mismatch throws std::logic_error.
const std::vector<CatalogEntry>& catalog();

/// Name lookup ignores case, so "k1" finds K1.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Throws std::out_of_range for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

/// Recomputes the profile of `entry.map` and lists every field that differs
/// from the stored expectation; empty when they agree.
std::vector<std::string> profile_mismatches(const CatalogEntry& entry);

/// The N face list exactly as published, including the repeated triangle.
std::string_view raw_n_listing();

}  // namespace semmap
