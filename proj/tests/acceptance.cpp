// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "semmap/catalog.hpp"
#include "semmap/enumerate.hpp"
#include "semmap/invariants.hpp"
#include "semmap/transforms.hpp"

using namespace semmap;
namespace oracle = semmap::testing;

namespace {

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_ << (notes_.tellp() > 0 ? "; " : "") << text; }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out = notes_.str();
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + std::string("FAILED: ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::ostringstream notes_;
};

const PolyhedralMap& cat(const char* name) { return catalog_entry(name).map; }

// Published G_t lists write vertex 0 as n.
SimpleGraph published_graph(const PolyhedralMap& map, std::vector<Edge> edges) {
  const int n = map.vertex_count();
  for (Edge& e : edges) {
    e = make_edge(e.first == n ? 0 : e.first, e.second == n ? 0 : e.second);
  }
  std::sort(edges.begin(), edges.end());
  return SimpleGraph{n, std::move(edges)};
}

// Compares |EG(G_t(map))| and the unlabeled shape against a published list.
// On a mismatch the edges missing from the published list are named.
void gt_check(Check& c, const char* name, int t, const std::vector<Edge>& listed) {
  const PolyhedralMap& map = cat(name);
  SimpleGraph g = g_t_graph(map, t);
  SimpleGraph want = published_graph(map, listed);
  const std::string label = std::string("|EG(G_") + std::to_string(t) + "(" + name + "))|";
  if (g.edge_count() != want.edge_count() || !same_graph_type(g, want)) {
    std::string extra;
    for (const Edge& e : g.edges) {
      if (!std::binary_search(want.edges.begin(), want.edges.end(), e)) {
        extra += " [" + std::to_string(e.first) + ", " + std::to_string(e.second) + "]";
      }
    }
    c.expect(false, label + " = " + std::to_string(g.edge_count()) + ", published " +
                        std::to_string(want.edge_count()) + (extra.empty() ? "" : "; unlisted edges" + extra));
  } else if (g != want) {
    c.note(label + " matches in count and shape but not label by label");
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// ---------------------------------------------------------------------------

Check criterion_1() {
  Check c;
  const FaceSequence type = FaceSequence::parse("3^5,4");
  auto start = std::chrono::steady_clock::now();
  EnumerationResult first = enumerate_sems(type, -1);
  const double elapsed = seconds_since(start);
  EnumerationResult second = enumerate_sems(type, -1);
  c.expect(first.stats.complete, "search finished");
  c.expect(first.maps.size() == 3, "class count " + std::to_string(first.maps.size()));
  std::set<std::string> covered;
  for (const PolyhedralMap& m : first.maps) {
    int hits = 0;
    for (const char* name : {"K1", "K2", "K3"}) {
      if (are_isomorphic(m, cat(name)).isomorphic) {
        ++hits;
        covered.insert(name);
      }
    }
    c.expect(hits == 1, "each class matches exactly one of K1, K2, K3");
  }
  c.expect(covered.size() == 3, "K1, K2, K3 all found");
  c.expect(elapsed < 120.0, "runtime under 2 minutes");
  c.expect(first.stats.nodes == second.stats.nodes, "identical node counts across runs");
  c.note("3 classes expected, found " + std::to_string(first.maps.size()) + "; nodes " +
         std::to_string(first.stats.nodes) + " (rerun " + std::to_string(second.stats.nodes) + "); " +
         fmt_seconds(elapsed));
  return c;
}

Check criterion_2() {
  Check c;
  gt_check(c, "K1", 6, {});
  gt_check(c, "K1", 2, {{2, 4}, {7, 10}});
  gt_check(c, "K2", 2, {{2, 4}, {3, 12}});
  gt_check(c, "K2", 6, {{1, 6}, {5, 7}});
  gt_check(c, "K3", 2, {});
  gt_check(c, "K3", 6, {{1, 6}, {8, 12}});
  const char* ks[] = {"K1", "K2", "K3"};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      c.expect(!are_isomorphic(cat(ks[i]), cat(ks[j])).isomorphic, std::string(ks[i]) + " vs " + ks[j]);
    }
    c.expect(!is_vertex_transitive(cat(ks[i])), std::string(ks[i]) + " not vertex-transitive");
  }
  c.note("G_t over link vertex sets; K1-K3 pairwise non-isomorphic and not transitive");
  return c;
}

Check criterion_3() {
  Check c;
  const char* ks[] = {"K1", "K2", "K3"};
  const char* ts[] = {"T1", "T2", "T3"};
  for (int i = 0; i < 3; ++i) {
    DoubleCover dc = double_cover(cat(ks[i]));
    const std::string tag = std::string("cover of ") + ks[i];
    c.expect(validate(dc.cover).ok(), tag + " valid");
    SurfaceProfile p = surface_profile(dc.cover);
    c.expect(p.orientable, tag + " orientable");
    c.expect(p.euler_characteristic == -2, tag + " chi");
    TypeCheck t = semi_equivelar_type(dc.cover);
    c.expect(t.type && t.type->to_string() == "(3^5, 4)", tag + " type");
    c.expect(verify_covering(dc.cover, cat(ks[i]), dc.witness), tag + " covering witness");
    c.expect(are_isomorphic(dc.cover, cat(ts[i])).isomorphic, tag + " isomorphic to " + ts[i]);
  }
  const char* four[] = {"T1", "T2", "T3", "N"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      c.expect(!are_isomorphic(cat(four[i]), cat(four[j])).isomorphic, std::string(four[i]) + " vs " + four[j]);
    }
    c.expect(!is_vertex_transitive(cat(four[i])), std::string(four[i]) + " not vertex-transitive");
  }
  c.expect(!surface_profile(cat("N")).orientable, "N non-orientable");
  gt_check(c, "T1", 5, {{1, 7}, {2, 22}, {2, 24}, {3, 7}, {11, 20}, {12, 20}});
  gt_check(c, "T1", 6, {});
  gt_check(c, "T2", 5, {{2, 7}, {4, 6}, {14, 19}, {16, 18}});
  gt_check(c, "T3", 6, {{1, 6}, {2, 7}, {8, 24}, {12, 20}, {13, 18}, {14, 19}});
  gt_check(c, "N", 4, {{1, 3}, {5, 13}, {6, 8}, {9, 15}, {11, 24}, {12, 23}, {14, 19}, {21, 22}});
  c.note("covers of K1-K3 match T1-T3; T1, T2, T3, N distinct and not transitive");
  return c;
}

Check criterion_4() {
  Check c;
  for (const char* name : {"K1", "K2", "K3"}) {
    PolyhedralMap s = stack_faces(cat(name));
    const std::string tag = std::string("stacked ") + name;
    c.expect(validate(s).ok(), tag + " valid");
    c.expect(s.vertex_count() == 35, tag + " has 35 vertices");
    c.expect(surface_profile(s).euler_characteristic == -1, tag + " chi = -1");
    c.expect(std::all_of(s.faces().begin(), s.faces().end(), [](const Face& f) { return f.size() == 3; }),
             tag + " all triangles");
    c.expect(is_d_covered(s, 12), tag + " 12-covered");
  }
  c.note("stacked K1, K2, K3: 35 vertices, chi = -1, 12-covered");
  return c;
}

// Applies the bundle one cylinder at a time and checks each step lowers
// V - E + F by exactly two.
bool steps_lower_chi_by_two(const CylinderProvenance& prov, const std::vector<PolyhedralMap>& bases) {
  auto base_of = [&](const std::string& name) -> const PolyhedralMap& {
    for (const PolyhedralMap& b : bases) {
      if (b.name() == name) return b;
    }
    throw std::logic_error("unknown base " + name);
  };
  PolyhedralMap surface = base_of(prov.bases[0]);
  if (prov.bases.size() == 2) surface = disjoint_union(surface, base_of(prov.bases[1]));
  int chi = oracle::euler_by_counting(surface);
  std::vector<char> removed(surface.face_count(), 0);
  std::vector<Face> band;
  for (const CylinderSpec& spec : prov.specs) {
    removed[spec.face_a] = removed[spec.face_b] = 1;
    auto faces = cylinder_band(spec.kind, surface.face(spec.face_a), surface.face(spec.face_b), spec.offset,
                               spec.reflect);
    band.insert(band.end(), faces.begin(), faces.end());
    std::vector<Face> now;
    for (int f = 0; f < surface.face_count(); ++f) {
      if (!removed[f]) now.push_back(surface.face(f));
    }
    now.insert(now.end(), band.begin(), band.end());
    const int next = oracle::euler_by_counting(PolyhedralMap(surface.vertex_count(), now));
    if (next != chi - 2) return false;
    chi = next;
  }
  return true;
}

Check criterion_5() {
  Check c;
  std::vector<PolyhedralMap> bases{cat("K1"), cat("K2"), cat("K3")};
  CylinderSearchOptions options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto start = std::chrono::steady_clock::now();

  CylinderSearchResult quad = cylinder_search(bases, FaceSequence::parse("3^5,4^2"), -8, options);
  // The triangle-band space is too large to exhaust; a fixed budget per base
  // pair already gives far more than the required count.
  options.max_bundles_per_source = 500;
  CylinderSearchResult tri = cylinder_search(bases, FaceSequence::parse("3^7,4"), -10, options);
  const double elapsed = seconds_since(start);

  auto audit = [&](const CylinderSearchResult& r, const char* type, int chi, std::size_t at_least) {
    c.expect(r.maps.size() >= at_least, std::string(type) + ": " + std::to_string(r.maps.size()) + " classes");
    std::set<CanonicalForm> forms;
    bool all_valid = true, steps_ok = true;
    for (std::size_t i = 0; i < r.maps.size(); ++i) {
      const PolyhedralMap& m = r.maps[i];
      TypeCheck t = semi_equivelar_type(m);
      all_valid = all_valid && validate(m).ok() && t.type && t.type->to_string() == type &&
                  surface_profile(m).euler_characteristic == chi;
      forms.insert(canonical_form(m));
      steps_ok = steps_ok && steps_lower_chi_by_two(r.provenance[i], bases);
    }
    c.expect(all_valid, std::string(type) + ": every map valid with the target type and chi");
    c.expect(forms.size() == r.maps.size(), std::string(type) + ": pairwise non-isomorphic");
    c.expect(steps_ok, std::string(type) + ": each cylinder lowers chi by 2");
  };
  audit(quad, "(3^5, 4^2)", -8, 10);
  audit(tri, "(3^7, 4)", -10, 11);
  c.expect(elapsed < 600.0, "runtime under 10 minutes");
  c.note("(3^5, 4^2) chi=-8: " + std::to_string(quad.maps.size()) + " classes (>= 10, exhaustive " +
         (quad.exhaustive ? "yes" : "no") + "); (3^7, 4) chi=-10: " + std::to_string(tri.maps.size()) +
         " classes (>= 11, budget 500 bundles per base pair); " + fmt_seconds(elapsed));
  return c;
}

Check criterion_6() {
  Check c;
  std::mt19937_64 rng(20101);

  // (a) canonical form under random relabelings.
  int relabelings = 0;
  for (const CatalogEntry& e : catalog()) {
    const CanonicalForm form = canonical_form(e.map);
    for (int i = 0; i < 100; ++i, ++relabelings) {
      c.expect(canonical_form(oracle::random_relabel(e.map, rng)) == form, "canonical form of relabeled " + e.name);
    }
  }

  // (b) brute-force isomorphism agreement on every small map in play.
  std::vector<PolyhedralMap> small{oracle::tetrahedron(), oracle::octahedron(), oracle::cube(),
                                   oracle::square_antiprism(), oracle::projective_plane_6(),
                                   stack_faces(oracle::tetrahedron())};
  for (const auto& [text, chi] : std::vector<std::pair<const char*, int>>{
           {"3^3", 2}, {"3^4", 2}, {"4^3", 2}, {"3^3,4", 2}, {"3^5", 1}}) {
    for (const PolyhedralMap& m : enumerate_sems(FaceSequence::parse(text), chi).maps) small.push_back(m);
  }
  const std::size_t originals = small.size();
  for (std::size_t i = 0; i < originals; ++i) small.push_back(oracle::random_relabel(small[i], rng));
  int pairs = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j, ++pairs) {
      c.expect(are_isomorphic(small[i], small[j]).isomorphic == oracle::brute_force_isomorphic(small[i], small[j]),
               "brute-force agreement " + small[i].name() + " vs " + small[j].name());
    }
  }

  // (c) the G_t partition all vertex pairs.
  for (const CatalogEntry& e : catalog()) {
    const int n = e.map.vertex_count();
    std::vector<int> counts = g_t_edge_counts(e.map);
    int total = 0;
    for (int x : counts) total += x;
    c.expect(total == n * (n - 1) / 2, "sum of |EG(G_t)| for " + e.name);
  }

  // (d) curvature formula on every validated SEM at hand.
  std::vector<PolyhedralMap> sems = small;
  for (const CatalogEntry& e : catalog()) sems.push_back(e.map);
  for (const char* name : {"K1", "K2", "K3"}) sems.push_back(double_cover(cat(name)).cover);
  int sem_count = 0;
  for (const PolyhedralMap& m : sems) {
    if (!validate(m).ok() || !semi_equivelar_type(m).semi_equivelar()) continue;
    ++sem_count;
    bool exact = false;
    c.expect(oracle::euler_from_curvature(m, &exact) == surface_profile(m).euler_characteristic && exact,
             "curvature formula for " + m.name());
  }

  // (e) single-face deletions.
  int deletions = 0;
  for (const CatalogEntry& e : catalog()) {
    for (int f = 0; f < e.map.face_count(); ++f, ++deletions) {
      c.expect(!validate(oracle::without_face(e.map, f)).ok(), "deletion of face " + std::to_string(f) + " of " + e.name);
    }
  }
  c.note(std::to_string(relabelings) + " relabelings, " + std::to_string(pairs) + " brute-force pairs, " +
         std::to_string(sem_count) + " SEMs checked against the curvature formula, " + std::to_string(deletions) +
         " deletions rejected");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1 enumeration of (3^5, 4) on chi = -1", criterion_1},
      {"2 K1-K3 invariants", criterion_2},
      {"3 double covers T1-T3 and N", criterion_3},
      {"4 stacked K1-K3 are 12-covered", criterion_4},
      {"5 cylinder search counts", criterion_5},
      {"6 kernel property suites", criterion_6},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    if (!result.ok()) ++failed;
    std::cout << (result.ok() ? "PASS" : "FAIL") << "  criterion " << name << ": " << result.summary() << std::endl;
  }
  return failed;
}
