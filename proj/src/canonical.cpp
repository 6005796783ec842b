// Canonical labeling of polyhedral maps by flag-rooted traversal.
//
// A flag is (vertex, corner, direction). Starting from a flag, vertices are
// labeled breadth-first; each vertex is expanded by walking its link in the
// direction inherited from its parent, emitting the labels of every link
// vertex. The emitted word determines the relabeled face set, so the
// lexicographically smallest word over all flags is a complete invariant,
// and the flags that reach it are in bijection with the automorphisms.

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

#include "semmap/invariants.hpp"

namespace semmap {

namespace {

struct Rotation {
  std::vector<Vertex> neighbor;
  std::vector<int> face;
  std::vector<std::vector<Vertex>> interior;
};

class FlagWalker {
 public:
  explicit FlagWalker(const PolyhedralMap& map) : n_(map.vertex_count()) {
    std::vector<VertexLink> links;
    try {
      links = vertex_links(map);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("canonical form needs a valid map: ") + e.what());
    }
    rot_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (const LinkCorner& c : links[v].corners) {
        rot_[v].neighbor.push_back(c.neighbor);
        rot_[v].face.push_back(c.face);
        rot_[v].interior.push_back(c.interior);
      }
    }
    label_.resize(n_);
    state_index_.resize(n_);
    state_dir_.resize(n_);
    order_.reserve(n_);
  }

  int vertex_count() const { return n_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].neighbor.size()); }

  // Runs the traversal rooted at (root, corner, dir). Compares the emitted
  // word against `best` on the fly: returns -1 if smaller (word written to
  // `out`), 0 if equal, +1 if larger (aborted early). With an empty `best`
  // the full word is always produced and -1 returned.
  int run(Vertex root, int corner, int dir, const std::vector<std::uint32_t>& best,
          std::vector<std::uint32_t>& out) {
    std::fill(label_.begin(), label_.end(), -1);
    std::fill(state_dir_.begin(), state_dir_.end(), 0);
    order_.clear();
    out.clear();
    cmp_ = best.empty() ? -1 : 0;
    best_ = &best;
    out_ = &out;

    assign(root);
    state_index_[root] = corner;
    state_dir_[root] = dir;

    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex x = order_[head];
      if (state_dir_[x] == 0) throw std::logic_error("vertex popped before its state was set");
      const Rotation& r = rot_[x];
      const int d = static_cast<int>(r.neighbor.size());
      const int start = state_index_[x];
      const int step = state_dir_[x];
      if (!emit(static_cast<std::uint32_t>(d))) return 1;
      for (int k = 0; k < d; ++k) {
        const int idx = ((start + step * k) % d + d) % d;
        const int before = (idx + d - 1) % d;
        const Vertex y = r.neighbor[idx];
        // Face entered after y in this direction, and the one behind it.
        const int ahead_slot = step > 0 ? idx : before;
        const int behind_slot = step > 0 ? before : idx;
        if (label_[y] < 0) assign(y);
        if (state_dir_[y] == 0) set_child_state(y, x, r.face[behind_slot]);
        if (!emit(static_cast<std::uint32_t>(label_[y]))) return 1;
        const auto& inner = r.interior[ahead_slot];
        if (!emit(static_cast<std::uint32_t>(inner.size()))) return 1;
        if (step > 0) {
          for (Vertex z : inner) {
            if (label_[z] < 0) assign(z);
            if (!emit(static_cast<std::uint32_t>(label_[z]))) return 1;
          }
        } else {
          for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
            if (label_[*it] < 0) assign(*it);
            if (!emit(static_cast<std::uint32_t>(label_[*it]))) return 1;
          }
        }
      }
    }
    if (static_cast<int>(order_.size()) != n_) {
      throw std::invalid_argument("canonical form needs a connected map");
    }
    return cmp_;
  }

  const std::vector<Vertex>& labels() const { return label_; }

 private:
  void assign(Vertex v) {
    label_[v] = static_cast<Vertex>(order_.size());
    order_.push_back(v);
  }

  void set_child_state(Vertex child, Vertex parent, int first_face) {
    const Rotation& r = rot_[child];
    const int d = static_cast<int>(r.neighbor.size());
    for (int j = 0; j < d; ++j) {
      if (r.neighbor[j] != parent) continue;
      state_index_[child] = j;
      state_dir_[child] = r.face[j] == first_face ? 1 : -1;
      return;
    }
    throw std::logic_error("parent missing from child rotation");
  }

  bool emit(std::uint32_t value) {
    const std::size_t pos = out_->size();
    out_->push_back(value);
    if (cmp_ == 0) {
      const std::uint32_t ref = (*best_)[pos];
      if (value > ref) return false;
      if (value < ref) cmp_ = -1;
    }
    return true;
  }

  int n_;
  std::vector<Rotation> rot_;
  std::vector<Vertex> label_;
  std::vector<int> state_index_;
  std::vector<int> state_dir_;
  std::vector<Vertex> order_;
  int cmp_ = 0;
  const std::vector<std::uint32_t>* best_ = nullptr;
  std::vector<std::uint32_t>* out_ = nullptr;
};

std::vector<Vertex> inverse(const std::vector<Vertex>& perm) {
  std::vector<Vertex> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Vertex>(i);
  return inv;
}

}  // namespace

std::string CanonicalForm::hex_digest() const {
  // FNV-1a over the code words; for display only.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t w : code) {
    for (int b = 0; b < 4; ++b) {
      h ^= (w >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CanonicalLabeling canonical_labeling(const PolyhedralMap& map, bool collect_automorphisms) {
  if (map.vertex_count() == 0) throw std::invalid_argument("canonical form of an empty map");
  FlagWalker walker(map);
  std::vector<std::uint32_t> best, word;
  std::vector<Vertex> best_labels;
  std::vector<std::vector<Vertex>> tie_labels;

  for (Vertex v = 0; v < walker.vertex_count(); ++v) {
    for (int corner = 0; corner < walker.degree(v); ++corner) {
      for (int dir : {1, -1}) {
        int c = walker.run(v, corner, dir, best, word);
        if (c < 0) {
          best.swap(word);
          best_labels = walker.labels();
          tie_labels.clear();
          if (collect_automorphisms) tie_labels.push_back(best_labels);
        } else if (c == 0 && collect_automorphisms) {
          tie_labels.push_back(walker.labels());
        }
      }
    }
  }

  CanonicalLabeling out;
  out.form.code.reserve(best.size() + 2);
  out.form.code.push_back(static_cast<std::uint32_t>(map.vertex_count()));
  out.form.code.push_back(static_cast<std::uint32_t>(map.face_count()));
  out.form.code.insert(out.form.code.end(), best.begin(), best.end());
  out.labeling = best_labels;
  if (collect_automorphisms) {
    // sigma maps the best flag onto the tying one: labels_tie(sigma(v)) = labels_best(v).
    for (const auto& tie : tie_labels) {
      std::vector<Vertex> inv = inverse(tie);
      std::vector<Vertex> sigma(map.vertex_count());
      for (Vertex v = 0; v < map.vertex_count(); ++v) sigma[v] = inv[best_labels[v]];
      out.automorphisms.push_back(std::move(sigma));
    }
    std::sort(out.automorphisms.begin(), out.automorphisms.end());
  }
  return out;
}

CanonicalForm canonical_form(const PolyhedralMap& map) {
  return canonical_labeling(map).form;
}

bool is_isomorphism(const PolyhedralMap& a, const PolyhedralMap& b, const std::vector<Vertex>& permutation) {
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return false;
  if (static_cast<int>(permutation.size()) != a.vertex_count()) return false;
  std::vector<char> hit(a.vertex_count(), 0);
  for (Vertex v : permutation) {
    if (v < 0 || v >= a.vertex_count() || hit[v]) return false;
    hit[v] = 1;
  }
  return relabel(a, permutation).normalized_faces() == b.normalized_faces();
}

IsomorphismResult are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b) {
  IsomorphismResult result;
  if (a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count()) return result;
  CanonicalLabeling la = canonical_labeling(a);
  CanonicalLabeling lb = canonical_labeling(b);
  if (la.form != lb.form) return result;
  std::vector<Vertex> inv_b = inverse(lb.labeling);
  std::vector<Vertex> witness(a.vertex_count());
  for (Vertex v = 0; v < a.vertex_count(); ++v) witness[v] = inv_b[la.labeling[v]];
  if (!is_isomorphism(a, b, witness)) {
    throw std::logic_error("canonical forms agree but the derived bijection is not an isomorphism");
  }
  result.isomorphic = true;
  result.witness = std::move(witness);
  return result;
}

namespace {

std::vector<Vertex> compose(const std::vector<Vertex>& f, const std::vector<Vertex>& g) {
  // (f o g)(v) = f(g(v))
  std::vector<Vertex> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = f[g[v]];
  return out;
}

std::set<std::vector<Vertex>> closure(const std::vector<std::vector<Vertex>>& gens, std::size_t n) {
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<Vertex>> group{id};
  std::vector<std::vector<Vertex>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        auto h = compose(s, g);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier.swap(next);
  }
  return group;
}

}  // namespace

AutomorphismGroup automorphism_group(const PolyhedralMap& map) {
  CanonicalLabeling lab = canonical_labeling(map, true);
  const int n = map.vertex_count();
  AutomorphismGroup group;
  group.order = lab.automorphisms.size();

  std::set<std::vector<Vertex>> generated = closure({}, n);
  for (const auto& sigma : lab.automorphisms) {
    if (generated.count(sigma)) continue;
    group.generators.push_back(sigma);
    generated = closure(group.generators, n);
  }
  if (generated.size() != group.order) {
    throw std::logic_error("automorphism list is not closed under composition");
  }

  std::vector<int> orbit_of(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (orbit_of[v] >= 0) continue;
    std::vector<Vertex> orbit;
    for (const auto& sigma : lab.automorphisms) orbit.push_back(sigma[v]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (Vertex w : orbit) orbit_of[w] = static_cast<int>(group.orbits.size());
    group.orbits.push_back(std::move(orbit));
  }
  return group;
}

bool is_vertex_transitive(const PolyhedralMap& map) {
  return automorphism_group(map).orbits.size() == 1;
}

}  // namespace semmap
