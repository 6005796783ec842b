#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semmap/face_sequence.hpp"
#include "semmap/polyhedral_map.hpp"

namespace semmap {

/// Raised when a construction cannot be carried out; when the failure is a
/// validation failure of the result, the report is attached.
class TransformError : public std::runtime_error {
 public:
  explicit TransformError(const std::string& message, ValidationReport report = {})
      : std::runtime_error(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Coverings

struct CoveringWitness {
  std::vector<Vertex> vertex_map;  // cover vertex -> base vertex
  int fold = 1;
};

struct DoubleCover {
  PolyhedralMap cover;
  CoveringWitness witness;
};

/// Orientation double cover of a non-orientable map. Cover vertex v lies over
/// base vertex v and cover vertex v + n over v as well. Throws TransformError
/// for an orientable (or invalid) input.
DoubleCover double_cover(const PolyhedralMap& map);

/// Checks that `witness` is a `fold`-sheeted covering: every base vertex has
/// `fold` preimages, faces go to faces of the same length, and the faces
/// around each cover vertex go bijectively to the faces around its image.
bool verify_covering(const PolyhedralMap& cover, const PolyhedralMap& base, const CoveringWitness& witness);

// ---------------------------------------------------------------------------
// Cylinder addition

enum class CylinderKind {
  kQuad,  // C_44: band of quadrangles between two quadrangles
  kTri,   // C_33: band of six triangles between two triangles
};

std::string_view cylinder_kind_name(CylinderKind kind);
int boundary_length(CylinderKind kind);

/// Two faces to remove and the identification of their boundary cycles.
/// With boundary a = (v_1..v_l) as stored, the matched cycle is
/// u_i = b[offset + i] (or b[offset - i] when `reflect`), indices mod l.
struct CylinderSpec {
  CylinderKind kind = CylinderKind::kQuad;
  int face_a = -1;
  int face_b = -1;
  int offset = 0;
  bool reflect = false;

  bool operator==(const CylinderSpec&) const = default;
};

/// Faces of the band glued between boundary `a` and boundary `b` for the
/// given gluing, before any relabeling.
std::vector<Face> cylinder_band(CylinderKind kind, std::span<const Vertex> a, std::span<const Vertex> b,
                                int offset, bool reflect);

/// Vertices of `b` are shifted by a.vertex_count(). The result is
/// disconnected and therefore not itself a valid map.
PolyhedralMap disjoint_union(const PolyhedralMap& a, const PolyhedralMap& b);

/// Applies all cylinders at once. Face indices in the specs refer to
/// `surface`, and every face may be consumed at most once. Returns the
/// validated result, or std::nullopt with the reason in `error`.
std::optional<PolyhedralMap> try_add_cylinders(const PolyhedralMap& surface, std::span<const CylinderSpec> specs,
                                               std::string* error = nullptr, ValidationReport* report = nullptr);

/// Cylinder between two faces of one map.
PolyhedralMap add_cylinder(const PolyhedralMap& map, const CylinderSpec& spec);

/// Cylinder between face_a of `a` and face_b of `b`; the vertices of `b`
/// are relabeled by +a.vertex_count().
PolyhedralMap add_cylinder(const PolyhedralMap& a, const PolyhedralMap& b, const CylinderSpec& spec);

// ---------------------------------------------------------------------------
// Cylinder search

struct CylinderSearchOptions {
  // At most this many bundles are tried per (base combination, cylinder
  // kind) source; 0 means exhaustive.
  std::size_t max_bundles_per_source = 0;
  int jobs = 1;
};

struct CylinderProvenance {
  std::vector<std::string> bases;
  std::vector<CylinderSpec> specs;  // face indices refer to the disjoint union of the bases
};

struct CylinderSource {
  std::vector<std::string> bases;
  CylinderKind kind = CylinderKind::kQuad;
  std::size_t bundles_tried = 0;
  bool exhausted = false;
};

struct CylinderSearchResult {
  std::vector<PolyhedralMap> maps;  // pairwise non-isomorphic, sorted by canonical form
  std::vector<CylinderProvenance> provenance;
  std::vector<CylinderSource> sources;
  std::size_t bundles_tried = 0;
  std::size_t valid_results = 0;
  bool exhaustive = true;
};

/// Adds cylinders to single bases or to pairs of bases so that every vertex
/// is touched exactly once, keeping results that are valid semi-equivelar
/// maps of `target_type` with Euler characteristic `target_chi`. Results are
/// deduplicated up to isomorphism.
CylinderSearchResult cylinder_search(std::span<const PolyhedralMap> bases, const FaceSequence& target_type,
                                     int target_chi, const CylinderSearchOptions& options = {});

// ---------------------------------------------------------------------------

/// Puts a new vertex in every face and cones the face boundary to it. Face
/// i's new vertex is n + i.
PolyhedralMap stack_faces(const PolyhedralMap& map);

}  // namespace semmap
