#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "semmap/invariants.hpp"
#include "semmap/transforms.hpp"

namespace semmap {

namespace {

// Type of a vertex of a `base` SEM after one of its faces of the kind's
// boundary length is replaced by the faces of a band.
std::optional<FaceSequence> touched_type(const FaceSequence& base, CylinderKind kind) {
  std::vector<int> sizes = base.sizes();
  const int l = boundary_length(kind);
  auto it = std::find(sizes.begin(), sizes.end(), l);
  if (it == sizes.end()) return std::nullopt;
  sizes.erase(it);
  if (kind == CylinderKind::kQuad) {
    sizes.insert(sizes.end(), 2, 4);
  } else {
    sizes.insert(sizes.end(), 3, 3);
  }
  return FaceSequence::from_sizes(sizes);
}

// Enumerates cylinder bundles for one surface: exact covers of the vertex
// set by vertex-disjoint faces of the boundary length, every perfect
// matching of the cover into cylinder pairs, and every admissible gluing of
// each pair.
class BundleStream {
 public:
  BundleStream(const PolyhedralMap& surface, CylinderKind kind, int first_component_size, bool two_bases)
      : surface_(surface), kind_(kind), split_(first_component_size), two_bases_(two_bases) {
    const int l = boundary_length(kind);
    std::vector<int> candidates;
    for (int f = 0; f < surface.face_count(); ++f) {
      if (static_cast<int>(surface.face(f).size()) == l) candidates.push_back(f);
    }
    std::vector<char> covered(surface.vertex_count(), 0);
    std::vector<int> chosen;
    find_covers(surface, candidates, covered, chosen);
  }

  // Next bundle in a fixed order, or false when exhausted.
  bool next(std::vector<CylinderSpec>& out) {
    for (;;) {
      if (cover_ >= covers_.size()) return false;
      if (!pairings_ready_) {
        pairings_.clear();
        std::vector<int> faces = covers_[cover_];
        std::vector<std::pair<int, int>> current;
        build_pairings(faces, current);
        pairings_ready_ = true;
        pairing_ = 0;
        gluing_.assign(faces.size() / 2, 0);
      }
      if (pairing_ >= pairings_.size()) {
        ++cover_;
        pairings_ready_ = false;
        continue;
      }
      const auto& pairs = pairings_[pairing_];
      const int l = boundary_length(kind_);
      out.clear();
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int code = admissible(pairs[p])[gluing_[p]];
        out.push_back({kind_, pairs[p].first, pairs[p].second, code % l, code >= l});
      }
      // Advance the mixed-radix gluing counter.
      std::size_t p = 0;
      while (p < gluing_.size() && ++gluing_[p] == static_cast<int>(admissible(pairs[p]).size())) gluing_[p++] = 0;
      if (p == gluing_.size()) {
        ++pairing_;
        std::fill(gluing_.begin(), gluing_.end(), 0);
      }
      return true;
    }
  }

 private:
  void find_covers(const PolyhedralMap& surface, const std::vector<int>& candidates, std::vector<char>& covered,
                   std::vector<int>& chosen) {
    int first_free = -1;
    for (int v = 0; v < surface.vertex_count(); ++v) {
      if (!covered[v]) {
        first_free = v;
        break;
      }
    }
    if (first_free < 0) {
      covers_.push_back(chosen);
      return;
    }
    for (int f : candidates) {
      const Face& face = surface.face(f);
      if (std::find(face.begin(), face.end(), first_free) == face.end()) continue;
      bool free = std::none_of(face.begin(), face.end(), [&](Vertex v) { return covered[v]; });
      if (!free) continue;
      for (Vertex v : face) covered[v] = 1;
      chosen.push_back(f);
      find_covers(surface, candidates, covered, chosen);
      chosen.pop_back();
      for (Vertex v : face) covered[v] = 0;
    }
  }

  void build_pairings(std::vector<int>& faces, std::vector<std::pair<int, int>>& current) {
    if (faces.empty()) {
      if (!two_bases_ || std::any_of(current.begin(), current.end(), [&](const auto& pr) {
            return (pr.first < split_) != (pr.second < split_);
          })) {
        pairings_.push_back(current);
      }
      return;
    }
    const int head = faces.front();
    for (std::size_t i = 1; i < faces.size(); ++i) {
      const int partner = faces[i];
      if (admissible({head, partner}).empty()) continue;
      std::vector<int> rest;
      for (std::size_t j = 1; j < faces.size(); ++j) {
        if (j != i) rest.push_back(faces[j]);
      }
      current.push_back({head, partner});
      build_pairings(rest, current);
      current.pop_back();
    }
  }

  // Gluing codes (offset, plus l when reflected) for which the single
  // cylinder on this pair gives a valid map. Cylinders of one bundle touch
  // disjoint vertex sets, so a bundle can only be valid if every pair is.
  const std::vector<int>& admissible(std::pair<int, int> pair) {
    auto it = admissible_.find(pair);
    if (it != admissible_.end()) return it->second;
    const int l = boundary_length(kind_);
    std::vector<int> codes;
    for (int code = 0; code < 2 * l; ++code) {
      CylinderSpec spec{kind_, pair.first, pair.second, code % l, code >= l};
      // On a disjoint union a lone internal cylinder leaves the surface
      // disconnected; that alone does not rule the pair out.
      ValidationReport report;
      bool ok = try_add_cylinders(surface_, std::span(&spec, 1), nullptr, &report).has_value();
      if (!ok && !report.violations.empty()) {
        ok = std::all_of(report.violations.begin(), report.violations.end(),
                         [](const Violation& v) { return v.axiom == Axiom::kConnectivity; });
      }
      if (ok) codes.push_back(code);
    }
    return admissible_.emplace(pair, std::move(codes)).first->second;
  }

  const PolyhedralMap& surface_;
  CylinderKind kind_;
  int split_;  // faces with index < split_ belong to the first base
  bool two_bases_;
  std::map<std::pair<int, int>, std::vector<int>> admissible_;
  std::vector<std::vector<int>> covers_;
  std::size_t cover_ = 0;
  bool pairings_ready_ = false;
  std::vector<std::vector<std::pair<int, int>>> pairings_;
  std::size_t pairing_ = 0;
  std::vector<int> gluing_;
};

struct Found {
  std::size_t sequence;
  PolyhedralMap map;
  CylinderProvenance provenance;
};

}  // namespace

CylinderSearchResult cylinder_search(std::span<const PolyhedralMap> bases, const FaceSequence& target_type,
                                     int target_chi, const CylinderSearchOptions& options) {
  CylinderSearchResult result;
  VertexCount target_n = sem_vertex_count(target_type, target_chi);
  if (!target_n.exact()) return result;
  const int n = target_n.count;

  struct BaseInfo {
    FaceSequence type;
    int chi;
  };
  std::vector<std::optional<BaseInfo>> info;
  for (const PolyhedralMap& base : bases) {
    TypeCheck t = semi_equivelar_type(base);
    if (!validate(base).ok() || !t.type) {
      info.push_back(std::nullopt);
    } else {
      info.push_back(BaseInfo{*t.type, surface_profile(base).euler_characteristic});
    }
  }

  std::map<CanonicalForm, Found> classes;
  std::mutex mutex;
  std::size_t sequence = 0;

  auto run_source = [&](const PolyhedralMap& surface, const std::vector<std::string>& names, CylinderKind kind,
                        int split, bool two_bases) {
    CylinderSource source{names, kind, 0, false};
    BundleStream stream(surface, kind, split, two_bases);
    std::mutex stream_mutex;
    bool done = false;

    auto worker = [&] {
      std::vector<std::pair<std::size_t, std::vector<CylinderSpec>>> batch;
      for (;;) {
        batch.clear();
        {
          std::lock_guard lock(stream_mutex);
          while (!done && batch.size() < 64) {
            if (options.max_bundles_per_source && source.bundles_tried >= options.max_bundles_per_source) {
              done = true;
              break;
            }
            std::vector<CylinderSpec> specs;
            if (!stream.next(specs)) {
              done = true;
              source.exhausted = true;
              break;
            }
            ++source.bundles_tried;
            batch.push_back({sequence++, std::move(specs)});
          }
        }
        if (batch.empty()) return;
        for (auto& [seq, specs] : batch) {
          auto made = try_add_cylinders(surface, specs);
          if (!made) continue;
          TypeCheck t = semi_equivelar_type(*made);
          if (!t.type || *t.type != target_type) continue;
          if (surface_profile(*made).euler_characteristic != target_chi) continue;
          CanonicalForm form = canonical_form(*made);
          std::lock_guard lock(mutex);
          ++result.valid_results;
          auto it = classes.find(form);
          if (it == classes.end()) {
            classes.emplace(std::move(form), Found{seq, *std::move(made), {names, specs}});
          } else if (seq < it->second.sequence) {
            it->second = Found{seq, *std::move(made), {names, specs}};
          }
        }
      }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& t : threads) t.join();
    }
    result.bundles_tried += source.bundles_tried;
    if (!source.exhausted) result.exhaustive = false;
    result.sources.push_back(std::move(source));
  };

  auto name_of = [&](std::size_t i) {
    return bases[i].name().empty() ? "base" + std::to_string(i) : bases[i].name();
  };

  for (CylinderKind kind : {CylinderKind::kQuad, CylinderKind::kTri}) {
    const int l = boundary_length(kind);
    if (n % (2 * l) != 0) continue;
    const int cylinders = n / (2 * l);
    auto fits = [&](const BaseInfo& b) {
      auto t = touched_type(b.type, kind);
      return t && *t == target_type;
    };
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (!info[i] || !fits(*info[i])) continue;
      if (bases[i].vertex_count() == n && info[i]->chi - 2 * cylinders == target_chi) {
        run_source(bases[i], {name_of(i)}, kind, bases[i].face_count(), false);
      }
      for (std::size_t j = i; j < bases.size(); ++j) {
        if (!info[j] || !fits(*info[j])) continue;
        if (bases[i].vertex_count() + bases[j].vertex_count() != n) continue;
        if (info[i]->chi + info[j]->chi - 2 * cylinders != target_chi) continue;
        PolyhedralMap joined = disjoint_union(bases[i], bases[j]);
        run_source(joined, {name_of(i), name_of(j)}, kind, bases[i].face_count(), true);
      }
    }
  }

  for (auto& [form, found] : classes) {
    result.maps.push_back(std::move(found.map));
    result.provenance.push_back(std::move(found.provenance));
  }
  return result;
}

}  // namespace semmap
