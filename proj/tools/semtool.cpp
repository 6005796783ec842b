// semtool: command-line front end for the semmap library.
//
// Exit codes: 0 success, 1 validation failure or negative answer (invalid
// map, not isomorphic, refused construction), 2 usage error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semmap/catalog.hpp"
#include "semmap/enumerate.hpp"
#include "semmap/face_sequence.hpp"
#include "semmap/invariants.hpp"
#include "semmap/map_io.hpp"
#include "semmap/polyhedral_map.hpp"
#include "semmap/transforms.hpp"

using nlohmann::json;
using namespace semmap;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "text";
  bool dedupe = false;

  bool json() const { return format == "json"; }
};

PolyhedralMap load_map(const std::string& arg, const Global& g) {
  if (std::filesystem::is_regular_file(arg)) {
    ParseOptions options;
    options.dedupe = g.dedupe;
    return read_map_file(arg, options);
  }
  if (const CatalogEntry* entry = find_catalog_entry(arg)) return entry->map;
  throw UsageError("'" + arg + "' is neither a readable map file nor a catalog name");
}

FaceSequence parse_type(const std::string& text) {
  try {
    return FaceSequence::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad face sequence: ") + e.what());
  }
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const Violation& v : report.violations) {
    out.push_back({{"axiom", axiom_name(v.axiom)}, {"detail", v.detail}, {"vertices", v.vertices}, {"faces", v.faces}});
  }
  return out;
}

json spec_json(const CylinderSpec& spec) {
  return {{"kind", cylinder_kind_name(spec.kind)},
          {"faces", {spec.face_a, spec.face_b}},
          {"offset", spec.offset},
          {"reflect", spec.reflect}};
}

// A map plus its provenance record, as JSON or as text with the record in a
// leading comment line.
void emit_map(const Global& g, const PolyhedralMap& map, const json& provenance, json* collect = nullptr) {
  if (g.json()) {
    json item{{"map", map_to_json(map)}, {"provenance", provenance}};
    if (collect) {
      collect->push_back(std::move(item));
    } else {
      std::cout << item.dump(2) << "\n";
    }
    return;
  }
  if (!provenance.is_null()) std::cout << "# provenance " << provenance.dump() << "\n";
  std::cout << serialize_map(map);
}

// Requires a valid map; prints the report and signals refusal otherwise.
bool require_valid(const Global& g, const PolyhedralMap& map) {
  ValidationReport report = validate(map);
  if (report.ok()) return true;
  if (g.json()) {
    std::cout << json{{"valid", false}, {"violations", violations_json(report)}}.dump(2) << "\n";
  } else {
    std::cout << "invalid map " << map.name() << ":\n" << report.to_string();
  }
  return false;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Global& g, const std::string& arg) {
  PolyhedralMap map = load_map(arg, g);
  ValidationReport report = validate(map);
  if (g.json()) {
    std::cout << json{{"name", map.name()}, {"valid", report.ok()}, {"violations", violations_json(report)}}.dump(2)
              << "\n";
  } else if (report.ok()) {
    std::cout << map.name() << ": valid\n";
  } else {
    std::cout << map.name() << ": " << report.violations.size() << " violation(s)\n" << report.to_string();
  }
  return report.ok() ? kOk : kRefuted;
}

int cmd_profile(const Global& g, const std::string& arg, bool links) {
  PolyhedralMap map = load_map(arg, g);
  if (!require_valid(g, map)) return kRefuted;
  SurfaceProfile p = surface_profile(map);
  TypeCheck t = semi_equivelar_type(map);
  json out{{"name", map.name()},
           {"vertices", p.vertex_count},
           {"edges", p.edge_count},
           {"faces", p.face_count},
           {"euler_characteristic", p.euler_characteristic},
           {"orientable", p.orientable}};
  if (t.type) {
    out["type"] = t.type->to_string();
  } else {
    out["type"] = nullptr;
    out["differing_vertices"] = {t.witness_a, t.witness_b};
  }
  if (links) {
    json l = json::array();
    for (const VertexLink& link : vertex_links(map)) l.push_back(link.to_string());
    out["links"] = l;
  }
  if (g.json()) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "name         " << map.name() << "\n"
            << "V, E, F      " << p.vertex_count << ", " << p.edge_count << ", " << p.face_count << "\n"
            << "chi          " << p.euler_characteristic << "\n"
            << "orientable   " << (p.orientable ? "yes" : "no") << "\n";
  if (t.type) {
    std::cout << "type         " << t.type->to_string() << "\n";
  } else {
    std::cout << "type         not semi-equivelar (vertices " << t.witness_a << " and " << t.witness_b
              << " differ)\n";
  }
  if (links) {
    int v = 0;
    for (const auto& link : out["links"]) std::cout << "lk(" << v++ << ") = " << link.get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_iso(const Global& g, const std::string& a_arg, const std::string& b_arg) {
  PolyhedralMap a = load_map(a_arg, g);
  PolyhedralMap b = load_map(b_arg, g);
  if (!require_valid(g, a) || !require_valid(g, b)) return kRefuted;
  IsomorphismResult r = are_isomorphic(a, b);
  if (g.json()) {
    json out{{"isomorphic", r.isomorphic}};
    out["witness"] = r.isomorphic ? json(r.witness) : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else if (r.isomorphic) {
    std::cout << "isomorphic\nwitness";
    for (std::size_t v = 0; v < r.witness.size(); ++v) std::cout << " " << v << "->" << r.witness[v];
    std::cout << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return r.isomorphic ? kOk : kRefuted;
}

int cmd_aut(const Global& g, const std::string& arg) {
  PolyhedralMap map = load_map(arg, g);
  if (!require_valid(g, map)) return kRefuted;
  AutomorphismGroup group = automorphism_group(map);
  const bool transitive = group.orbits.size() == 1;
  if (g.json()) {
    std::cout << json{{"name", map.name()},
                      {"order", group.order},
                      {"orbits", group.orbits},
                      {"generators", group.generators},
                      {"vertex_transitive", transitive}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "order " << group.order << "\n"
            << "vertex transitive: " << (transitive ? "yes" : "no") << "\n"
            << "orbits:";
  for (const auto& orbit : group.orbits) {
    std::cout << " {";
    for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? " " : "") << orbit[i];
    std::cout << "}";
  }
  std::cout << "\n";
  for (const auto& gen : group.generators) {
    std::cout << "generator";
    for (Vertex v : gen) std::cout << " " << v;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_gt(const Global& g, const std::string& arg, int t, bool counts, Neighborhood kind) {
  PolyhedralMap map = load_map(arg, g);
  if (!require_valid(g, map)) return kRefuted;
  if (counts) {
    std::vector<int> c = g_t_edge_counts(map, kind);
    if (g.json()) {
      std::cout << json{{"name", map.name()}, {"edge_counts", c}}.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i]) std::cout << "|EG(G_" << i << ")| = " << c[i] << "\n";
      }
    }
    return kOk;
  }
  if (t < 0) throw UsageError("--t must be non-negative");
  SimpleGraph graph = g_t_graph(map, t, kind);
  if (g.json()) {
    json edges = json::array();
    for (const Edge& e : graph.edges) edges.push_back({e.first, e.second});
    std::cout << json{{"name", map.name()}, {"t", t}, {"edge_count", graph.edge_count()}, {"edges", edges}}.dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "EG(G_" << t << ") has " << graph.edge_count() << " edge(s)";
  for (const Edge& e : graph.edges) std::cout << " [" << e.first << ", " << e.second << "]";
  std::cout << "\n";
  return kOk;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"solutions", s.solutions},
          {"classes", s.classes},
          {"seconds", s.seconds},
          {"complete", s.complete}};
}

int cmd_enumerate(const Global& g, const std::string& type_text, int chi, const EnumerateOptions& options,
                  bool stats) {
  FaceSequence type = parse_type(type_text);
  EnumerationResult r = enumerate_sems(type, chi, options);
  json record = stats_json(r.stats);
  record["type"] = type.to_string();
  record["euler_characteristic"] = chi;
  if (!r.reason.empty()) record["reason"] = r.reason;
  if (g.json()) {
    json maps = json::array();
    for (const PolyhedralMap& map : r.maps) maps.push_back(map_to_json(map));
    std::cout << json{{"maps", maps}, {"stats", record}}.dump(2) << "\n";
    return kOk;
  }
  if (!r.reason.empty()) std::cout << "# " << r.reason << "\n";
  for (const PolyhedralMap& map : r.maps) std::cout << serialize_map(map);
  if (stats) std::cout << "# stats " << record.dump() << "\n";
  if (!r.stats.complete) std::cerr << "warning: node budget exhausted; the list may be incomplete\n";
  return kOk;
}

int cmd_cover(const Global& g, const std::string& arg) {
  PolyhedralMap map = load_map(arg, g);
  DoubleCover dc = double_cover(map);
  json provenance{{"construction", "orientation double cover"},
                  {"base", map.name()},
                  {"fold", dc.witness.fold},
                  {"vertex_map", dc.witness.vertex_map}};
  emit_map(g, dc.cover, provenance);
  return kOk;
}

int cmd_stack(const Global& g, const std::string& arg) {
  PolyhedralMap map = load_map(arg, g);
  if (!require_valid(g, map)) return kRefuted;
  PolyhedralMap stacked = stack_faces(map);
  emit_map(g, stacked, json{{"construction", "stack every face"}, {"base", map.name()}});
  return kOk;
}

CylinderKind parse_kind(const std::string& text) {
  if (text == "quad" || text == "C44") return CylinderKind::kQuad;
  if (text == "tri" || text == "C33") return CylinderKind::kTri;
  throw UsageError("--kind must be quad or tri");
}

int cmd_cylinder(const Global& g, const std::vector<std::string>& args, const std::string& kind,
                 const std::vector<int>& faces, int offset, bool reflect) {
  if (args.empty() || args.size() > 2) throw UsageError("cylinder takes one or two maps");
  if (faces.size() != 2) throw UsageError("--faces takes two face indices");
  CylinderSpec spec{parse_kind(kind), faces[0], faces[1], offset, reflect};
  PolyhedralMap a = load_map(args[0], g);
  json provenance{{"construction", "cylinder addition"}, {"spec", spec_json(spec)}};
  PolyhedralMap result;
  if (args.size() == 1) {
    provenance["bases"] = {a.name()};
    result = add_cylinder(a, spec);
  } else {
    PolyhedralMap b = load_map(args[1], g);
    provenance["bases"] = {a.name(), b.name()};
    provenance["note"] = "vertices of the second map shifted by " + std::to_string(a.vertex_count());
    result = add_cylinder(a, b, spec);
  }
  emit_map(g, result, provenance);
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_cylinder_search(const Global& g, const std::string& type_text, int chi, const std::string& bases_text,
                        const CylinderSearchOptions& options, bool summary) {
  FaceSequence type = parse_type(type_text);
  std::vector<PolyhedralMap> bases;
  for (const std::string& name : split_list(bases_text)) bases.push_back(load_map(name, g));
  if (bases.empty()) throw UsageError("--bases needs at least one map");
  CylinderSearchResult r = cylinder_search(bases, type, chi, options);

  json sources = json::array();
  for (const CylinderSource& s : r.sources) {
    sources.push_back({{"bases", s.bases},
                       {"kind", cylinder_kind_name(s.kind)},
                       {"bundles_tried", s.bundles_tried},
                       {"exhausted", s.exhausted}});
  }
  json record{{"type", type.to_string()},
              {"euler_characteristic", chi},
              {"classes", r.maps.size()},
              {"valid_results", r.valid_results},
              {"bundles_tried", r.bundles_tried},
              {"exhaustive", r.exhaustive},
              {"sources", sources}};

  json maps = json::array();
  if (!summary) {
    for (std::size_t i = 0; i < r.maps.size(); ++i) {
      json specs = json::array();
      for (const CylinderSpec& s : r.provenance[i].specs) specs.push_back(spec_json(s));
      json provenance{{"bases", r.provenance[i].bases}, {"specs", specs}};
      emit_map(g, r.maps[i].with_name("cyl_" + std::to_string(i + 1)), provenance, &maps);
    }
  }
  if (g.json()) {
    std::cout << json{{"summary", record}, {"maps", maps}}.dump(2) << "\n";
  } else {
    std::cout << "# summary " << record.dump() << "\n";
  }
  return kOk;
}

int cmd_catalog(const Global& g, const std::string& name) {
  if (!name.empty()) {
    const CatalogEntry* entry = find_catalog_entry(name);
    if (!entry) throw UsageError("no catalog entry named '" + name + "'");
    emit_map(g, entry->map, json{{"provenance", entry->provenance}});
    return kOk;
  }
  json out = json::array();
  for (const CatalogEntry& e : catalog()) {
    out.push_back({{"name", e.name},
                   {"vertices", e.map.vertex_count()},
                   {"faces", e.map.face_count()},
                   {"euler_characteristic", e.expected.euler_characteristic},
                   {"orientable", e.expected.orientable},
                   {"type", e.expected.type},
                   {"vertex_transitive", e.expected.vertex_transitive},
                   {"provenance", e.provenance}});
  }
  if (g.json()) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : out) {
    std::cout << e["name"].get<std::string>() << "  V=" << e["vertices"] << " chi=" << e["euler_characteristic"]
              << " " << (e["orientable"].get<bool>() ? "orientable" : "non-orientable") << " "
              << e["type"].get<std::string>() << (e["vertex_transitive"].get<bool>() ? " transitive" : "") << "\n"
              << "    " << e["provenance"].get<std::string>() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-equivelar map toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--dedupe", g.dedupe, "Drop repeated faces when reading map files");
  app.fallthrough();

  std::string map_a, map_b;
  std::vector<std::string> maps;

  auto* validate_cmd = app.add_subcommand("validate", "Check the polyhedral map axioms");
  validate_cmd->add_option("map", map_a, "Map file or catalog name")->required();

  bool links = false;
  auto* profile_cmd = app.add_subcommand("profile", "V, E, F, chi, orientability and type");
  profile_cmd->add_option("map", map_a, "Map file or catalog name")->required();
  profile_cmd->add_flag("--links", links, "Also print every vertex link");

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test with witness");
  iso_cmd->add_option("a", map_a, "First map")->required();
  iso_cmd->add_option("b", map_b, "Second map")->required();

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group and vertex orbits");
  aut_cmd->add_option("map", map_a, "Map file or catalog name")->required();

  int t = 0;
  bool counts = false;
  auto* gt_cmd = app.add_subcommand("gt", "Graph of vertex pairs whose neighborhoods share t vertices");
  gt_cmd->add_option("map", map_a, "Map file or catalog name")->required();
  gt_cmd->add_option("--t", t, "Number of common neighbors");
  gt_cmd->add_flag("--counts", counts, "Edge counts for every t instead");
  std::string neighborhood = "link";
  gt_cmd->add_option("--neighborhood", neighborhood, "link: all vertices of faces through v; edge: edge neighbors")
      ->check(CLI::IsMember({"link", "edge"}));

  std::string type_text;
  int chi = 0;
  bool stats = false, no_dedup = false, unnormalized = false;
  EnumerateOptions enum_options;
  auto* enum_cmd = app.add_subcommand("enumerate", "All SEMs of a type and Euler characteristic");
  enum_cmd->add_option("--type", type_text, "Face sequence, e.g. \"3^5,4\"")->required();
  enum_cmd->add_option("--chi", chi, "Euler characteristic")->required();
  enum_cmd->add_option("--jobs", enum_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--max-nodes", enum_options.max_nodes, "Node budget, 0 for none");
  enum_cmd->add_flag("--stats", stats, "Print the search statistics record");
  enum_cmd->add_flag("--no-dedup", no_dedup, "Keep every solution, not one per class");
  enum_cmd->add_flag("--unnormalized", unnormalized, "Seed one face instead of the whole link of vertex 0");

  auto* cover_cmd = app.add_subcommand("cover", "Orientation double cover");
  cover_cmd->add_option("map", map_a, "Map file or catalog name")->required();

  auto* stack_cmd = app.add_subcommand("stack", "Cone every face to a new vertex");
  stack_cmd->add_option("map", map_a, "Map file or catalog name")->required();

  std::string kind = "quad";
  std::vector<int> faces;
  int offset = 0;
  bool reflect = false;
  auto* cyl_cmd = app.add_subcommand("cylinder", "Glue a cylinder between two faces");
  cyl_cmd->add_option("maps", maps, "One map, or two maps to join")->required();
  cyl_cmd->add_option("--kind", kind, "quad or tri");
  cyl_cmd->add_option("--faces", faces, "Face indices a,b (b indexes the second map if given)")
      ->required()
      ->delimiter(',')
      ->expected(2);
  cyl_cmd->add_option("--offset", offset, "Gluing rotation");
  cyl_cmd->add_flag("--reflect", reflect, "Reverse the second boundary");

  std::string bases_text;
  bool summary = false;
  CylinderSearchOptions search_options;
  auto* search_cmd = app.add_subcommand("cylinder-search", "SEMs obtained from bases by adding cylinders");
  search_cmd->add_option("--type", type_text, "Target face sequence")->required();
  search_cmd->add_option("--chi", chi, "Target Euler characteristic")->required();
  search_cmd->add_option("--bases", bases_text, "Comma-separated maps, e.g. k1,k2,k3")->required();
  search_cmd->add_option("--budget", search_options.max_bundles_per_source,
                         "Bundles tried per source, 0 for exhaustive");
  search_cmd->add_option("--jobs", search_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--summary", summary, "Only print the summary record");

  std::string entry_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "List bundled maps, or print one");
  catalog_cmd->add_option("name", entry_name, "Entry to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(g, map_a);
    if (*profile_cmd) return cmd_profile(g, map_a, links);
    if (*iso_cmd) return cmd_iso(g, map_a, map_b);
    if (*aut_cmd) return cmd_aut(g, map_a);
    if (*gt_cmd) return cmd_gt(g, map_a, t, counts, neighborhood == "edge" ? Neighborhood::kEdge : Neighborhood::kLink);
    if (*enum_cmd) {
      enum_options.dedup = !no_dedup;
      enum_options.normalize_seed = !unnormalized;
      return cmd_enumerate(g, type_text, chi, enum_options, stats);
    }
    if (*cover_cmd) return cmd_cover(g, map_a);
    if (*stack_cmd) return cmd_stack(g, map_a);
    if (*cyl_cmd) return cmd_cylinder(g, maps, kind, faces, offset, reflect);
    if (*search_cmd) return cmd_cylinder_search(g, type_text, chi, bases_text, search_options, summary);
    if (*catalog_cmd) return cmd_catalog(g, entry_name);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TransformError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    if (!e.report().ok()) std::cerr << e.report().to_string();
    return kRefuted;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kRefuted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  }
  return kUsage;
}
