// Exhaustive generation of semi-equivelar maps by face-by-face completion.
//
// The search keeps a PartialMap and repeatedly picks the edge that lies in
// exactly one committed face and has the fewest consistent ways of adding
// its second face; every such face is tried in turn. Unused vertex ids are
// interchangeable, so a candidate face only ever introduces the lowest
// unused ids, in increasing order. Complete maps are deduplicated by
// canonical form.

#include "semmap/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "semmap/invariants.hpp"

namespace semmap {

PartialMap::PartialMap(int vertex_budget, FaceSequence type)
    : n_(vertex_budget), type_(std::move(type)), degree_(type_.degree()) {
  if (n_ <= 0) throw std::invalid_argument("vertex budget must be positive");
  if (type_.empty()) throw std::invalid_argument("empty face sequence");
  int max_size = type_.entries().back().first;
  size_slot_.assign(max_size + 1, -1);
  for (const auto& [size, mult] : type_.entries()) {
    size_slot_[size] = static_cast<int>(slot_limit_.size());
    slot_limit_.push_back(mult);
  }
  edge_count_.assign(static_cast<std::size_t>(n_) * n_, 0);
  vertex_faces_.resize(n_);
  usage_.assign(static_cast<std::size_t>(n_) * slot_limit_.size(), 0);
  open_at_.assign(n_, 0);
}

bool PartialMap::has_face(const Face& face) const {
  if (face.empty() || face[0] < 0 || face[0] >= n_) return false;
  for (int f : vertex_faces_[face[0]]) {
    if (same_cycle(faces_[f], face)) return true;
  }
  return false;
}

bool PartialMap::admissible(const Face& face) const {
  const int len = static_cast<int>(face.size());
  if (len < 3 || len >= static_cast<int>(size_slot_.size()) || size_slot_[len] < 0) return false;
  const int slot = size_slot_[len];
  const std::size_t slots = slot_limit_.size();
  for (int i = 0; i < len; ++i) {
    const Vertex x = face[i];
    if (x < 0 || x >= n_) return false;
    for (int j = 0; j < i; ++j) {
      if (face[j] == x) return false;
    }
    if (faces_at(x) >= degree_) return false;
    if (usage_[x * slots + slot] >= slot_limit_[slot]) return false;
    if (edge_count_[x * n_ + face[(i + 1) % len]] >= 2) return false;
  }
  // Any two faces meet in nothing, a vertex, or an edge. A shared pair must
  // be consecutive in both faces; three shared vertices are never allowed.
  for (int i = 0; i < len; ++i) {
    for (int g : vertex_faces_[face[i]]) {
      const Face& other = faces_[g];
      int common = 0;
      int first = -1, second = -1;
      for (int k = 0; k < len; ++k) {
        if (std::find(other.begin(), other.end(), face[k]) != other.end()) {
          ++common;
          if (first < 0) {
            first = k;
          } else {
            second = k;
          }
        }
      }
      if (common <= 1) continue;
      if (common > 2) return false;
      // Only check each face once: at its first shared position.
      if (face[i] != face[first]) continue;
      const bool adjacent_here = second - first == 1 || (first == 0 && second == len - 1);
      if (!adjacent_here) return false;
      const int glen = static_cast<int>(other.size());
      int p = static_cast<int>(std::find(other.begin(), other.end(), face[first]) - other.begin());
      int q = static_cast<int>(std::find(other.begin(), other.end(), face[second]) - other.begin());
      int gap = std::abs(p - q);
      if (gap != 1 && gap != glen - 1) return false;
    }
  }
  return true;
}

void PartialMap::commit(const Face& face) {
  const int len = static_cast<int>(face.size());
  const int index = static_cast<int>(faces_.size());
  const int slot = size_slot_[len];
  const std::size_t slots = slot_limit_.size();
  next_free_history_.push_back(next_free_);
  for (int i = 0; i < len; ++i) {
    const Vertex a = face[i];
    const Vertex b = face[(i + 1) % len];
    std::uint8_t& c1 = edge_count_[a * n_ + b];
    std::uint8_t& c2 = edge_count_[b * n_ + a];
    ++c1;
    ++c2;
    if (c1 == 1) {
      ++open_at_[a];
      ++open_at_[b];
    } else {
      --open_at_[a];
      --open_at_[b];
    }
    vertex_faces_[a].push_back(index);
    ++usage_[a * slots + slot];
    next_free_ = std::max(next_free_, a + 1);
  }
  faces_.push_back(face);
}

void PartialMap::pop_face() {
  if (faces_.empty()) throw std::logic_error("pop_face on empty partial map");
  const Face face = std::move(faces_.back());
  faces_.pop_back();
  const int len = static_cast<int>(face.size());
  const int slot = size_slot_[len];
  const std::size_t slots = slot_limit_.size();
  for (int i = 0; i < len; ++i) {
    const Vertex a = face[i];
    const Vertex b = face[(i + 1) % len];
    std::uint8_t& c1 = edge_count_[a * n_ + b];
    std::uint8_t& c2 = edge_count_[b * n_ + a];
    --c1;
    --c2;
    if (c1 == 1) {
      ++open_at_[a];
      ++open_at_[b];
    } else {
      --open_at_[a];
      --open_at_[b];
    }
    vertex_faces_[a].pop_back();
    --usage_[a * slots + slot];
  }
  next_free_ = next_free_history_.back();
  next_free_history_.pop_back();
}

bool PartialMap::link_single_cycle(Vertex v) const {
  const auto& at = vertex_faces_[v];
  // Each face at v contributes its two neighbors of v; walk the cycle.
  auto ends = [&](int f) {
    const Face& face = faces_[f];
    const int len = static_cast<int>(face.size());
    int j = static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
    return std::pair<Vertex, Vertex>{face[(j + 1) % len], face[(j + len - 1) % len]};
  };
  int face = at.front();
  Vertex from = ends(face).first;
  std::size_t steps = 0;
  do {
    ++steps;
    auto [x, y] = ends(face);
    Vertex to = x == from ? y : x;
    int next = -1;
    for (int g : at) {
      if (g == face) continue;
      auto [p, q] = ends(g);
      if (p == to || q == to) {
        next = g;
        break;
      }
    }
    if (next < 0) return false;
    from = to;
    face = next;
  } while (face != at.front() && steps <= at.size());
  return steps == at.size();
}

bool PartialMap::add_face(const Face& face) {
  if (!admissible(face)) return false;
  commit(face);
  for (Vertex x : face) {
    const int remaining = degree_ - faces_at(x);
    const int open = open_at_[x];
    // Joining k separate arcs into one cycle takes at least k more faces.
    bool ok = open <= 2 * remaining;
    if (ok && open == 0) ok = remaining == 0 && link_single_cycle(x);
    if (!ok) {
      pop_face();
      return false;
    }
  }
  return true;
}

bool PartialMap::complete() const {
  if (next_free_ != n_) return false;
  for (Vertex v = 0; v < n_; ++v) {
    if (faces_at(v) != degree_ || open_at_[v] != 0) return false;
  }
  return true;
}

PolyhedralMap PartialMap::to_map(std::string name) const {
  return PolyhedralMap(n_, faces_, std::move(name));
}

std::optional<PartialMap> assume_link(const PartialMap& partial, const VertexLink& link) {
  if (link.degree() != partial.type().degree()) {
    throw std::invalid_argument("link degree " + std::to_string(link.degree()) + " does not match type " +
                                partial.type().to_string());
  }
  PartialMap out = partial;
  for (const Face& face : link_faces(link)) {
    if (out.has_face(face)) continue;
    if (!out.add_face(face)) return std::nullopt;
  }
  return out;
}

std::vector<std::vector<int>> face_arrangements(const FaceSequence& type) {
  std::vector<int> sizes = type.sizes();
  std::sort(sizes.begin(), sizes.end());
  const int d = static_cast<int>(sizes.size());
  auto canonical = [d](const std::vector<int>& a) {
    std::vector<int> best;
    for (int shift = 0; shift < d; ++shift) {
      for (int dir : {1, -1}) {
        std::vector<int> r(d);
        for (int i = 0; i < d; ++i) r[i] = a[((shift + dir * i) % d + d) % d];
        if (best.empty() || r > best) best = std::move(r);
      }
    }
    return best;
  };
  std::set<std::vector<int>> out;
  do {
    out.insert(canonical(sizes));
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return {out.rbegin(), out.rend()};
}

VertexLink seed_link(const std::vector<int>& arrangement) {
  int length = 0;
  for (int s : arrangement) length += s - 2;
  // Link position k gets label k + 2, except the last one, which gets 1.
  auto label = [length](int k) { return k == length - 1 ? 1 : k + 2; };
  VertexLink link;
  link.center = 0;
  int pos = 0;
  for (int s : arrangement) {
    LinkCorner corner{label(pos), {}, -1};
    for (int k = 1; k <= s - 3; ++k) corner.interior.push_back(label(pos + k));
    link.corners.push_back(std::move(corner));
    pos += s - 2;
  }
  return link;
}

// ---------------------------------------------------------------------------

namespace {

struct Context {
  Context(const EnumerateOptions& o, std::atomic<std::uint64_t>& n, std::atomic<bool>& s)
      : options(o), shared_nodes(n), stop(s) {}

  const EnumerateOptions& options;
  std::atomic<std::uint64_t>& shared_nodes;
  std::atomic<bool>& stop;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  std::map<CanonicalForm, PolyhedralMap> classes;
  std::vector<std::pair<CanonicalForm, PolyhedralMap>> raw;
};

// Consistent second faces for the open edge (a, b). Stops once `limit`
// candidates are found.
void candidates(PartialMap& pm, Vertex a, Vertex b, std::size_t limit, std::vector<Face>& out) {
  const int n = pm.vertex_budget();
  const int base_free = pm.next_free();
  Face face;
  face.reserve(8);

  auto extend = [&](auto&& self, int size, int fresh_used) -> void {
    if (out.size() >= limit) return;
    if (static_cast<int>(face.size()) == size) {
      if (pm.add_face(face)) {
        out.push_back(face);
        pm.pop_face();
      }
      return;
    }
    const Vertex prev = face.back();
    const bool last = static_cast<int>(face.size()) == size - 1;
    const int fresh = base_free + fresh_used;
    const int top = std::min(fresh, n - 1);
    for (Vertex w = 0; w <= top; ++w) {
      if (std::find(face.begin(), face.end(), w) != face.end()) continue;
      if (w < base_free) {
        if (pm.faces_at(w) >= pm.type().degree()) continue;
        if (pm.edge_multiplicity(prev, w) >= 2) continue;
        if (last && pm.edge_multiplicity(w, a) >= 2) continue;
      }
      face.push_back(w);
      self(self, size, fresh_used + (w == fresh ? 1 : 0));
      face.pop_back();
      if (out.size() >= limit) return;
    }
  };

  for (const auto& [size, mult] : pm.type().entries()) {
    face.assign({a, b});
    extend(extend, size, 0);
  }
}

// Picks the open edge with the fewest candidates. Returns false if some
// open edge has none; `best` stays empty when there is no open edge.
bool choose_branch(PartialMap& pm, std::vector<Face>& best) {
  best.clear();
  bool have = false;
  std::vector<Face> cands;
  const int used = pm.next_free();
  for (Vertex a = 0; a < used; ++a) {
    if (pm.open_edges_at(a) == 0) continue;
    for (Vertex b = a + 1; b < used; ++b) {
      if (pm.edge_multiplicity(a, b) != 1) continue;
      cands.clear();
      candidates(pm, a, b, have ? best.size() : static_cast<std::size_t>(-1), cands);
      if (cands.empty()) return false;
      if (!have || cands.size() < best.size()) {
        best.swap(cands);
        have = true;
        if (best.size() == 1) return true;
      }
    }
  }
  return true;
}

void record_leaf(const PartialMap& pm, Context& ctx) {
  PolyhedralMap map = pm.to_map();
  if (!validate(map).ok()) return;
  TypeCheck t = semi_equivelar_type(map);
  if (!t.type || *t.type != pm.type()) return;
  ++ctx.solutions;
  CanonicalForm form = canonical_form(map);
  if (!ctx.options.dedup) ctx.raw.push_back({form, map});
  ctx.classes.emplace(std::move(form), std::move(map));
}

void search(PartialMap& pm, Context& ctx) {
  if (ctx.stop.load(std::memory_order_relaxed)) return;
  if (ctx.options.max_nodes) {
    if (ctx.shared_nodes.fetch_add(1, std::memory_order_relaxed) + 1 > ctx.options.max_nodes) {
      ctx.stop.store(true);
      return;
    }
  }
  ++ctx.nodes;
  std::vector<Face> branch;
  if (!choose_branch(pm, branch)) return;
  if (branch.empty()) {
    if (pm.complete()) record_leaf(pm, ctx);
    return;
  }
  for (const Face& face : branch) {
    if (!pm.add_face(face)) throw std::logic_error("candidate face rejected on replay");
    search(pm, ctx);
    pm.pop_face();
  }
}

void merge(Context& into, Context& from) {
  into.nodes += from.nodes;
  into.solutions += from.solutions;
  for (auto& [form, map] : from.classes) into.classes.emplace(form, std::move(map));
  for (auto& item : from.raw) into.raw.push_back(std::move(item));
}

}  // namespace

EnumerationResult complete_partial(const PartialMap& partial, const EnumerateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> shared_nodes{0};
  std::atomic<bool> stop{false};
  Context total(options, shared_nodes, stop);

  PartialMap root = partial;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    search(root, total);
  } else {
    // Expand the root here and farm its subtrees out; each worker owns a
    // copy of the partial map.
    ++total.nodes;
    shared_nodes.fetch_add(1);
    std::vector<Face> branch;
    if (choose_branch(root, branch)) {
      if (branch.empty()) {
        if (root.complete()) record_leaf(root, total);
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<Context> locals;
        locals.reserve(jobs);
        for (int j = 0; j < jobs; ++j) locals.emplace_back(options, shared_nodes, stop);
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) {
          threads.emplace_back([&, j] {
            for (;;) {
              std::size_t i = next.fetch_add(1);
              if (i >= branch.size()) return;
              PartialMap pm = root;
              if (!pm.add_face(branch[i])) continue;
              search(pm, locals[j]);
            }
          });
        }
        for (auto& t : threads) t.join();
        for (auto& local : locals) merge(total, local);
      }
    }
  }

  EnumerationResult result;
  result.stats.nodes = total.nodes;
  result.stats.solutions = total.solutions;
  result.stats.classes = total.classes.size();
  result.stats.complete = !stop.load();
  if (options.dedup) {
    for (auto& [form, map] : total.classes) result.maps.push_back(std::move(map));
  } else {
    std::stable_sort(total.raw.begin(), total.raw.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& item : total.raw) result.maps.push_back(std::move(item.second));
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

EnumerationResult enumerate_sems(const FaceSequence& type, int euler_characteristic,
                                 const EnumerateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationResult result;
  VertexCount count = sem_vertex_count(type, euler_characteristic);
  if (!count.exact()) {
    result.reason = count.reason;
    return result;
  }
  const int n = count.count;

  std::vector<PartialMap> seeds;
  if (options.normalize_seed) {
    if (type.link_length() + 1 <= n) {
      for (const auto& arrangement : face_arrangements(type)) {
        auto seeded = assume_link(PartialMap(n, type), seed_link(arrangement));
        if (seeded) seeds.push_back(*std::move(seeded));
      }
    }
  } else {
    const int size = type.entries().back().first;
    if (size <= n) {
      PartialMap pm(n, type);
      Face first(size);
      std::iota(first.begin(), first.end(), 0);
      if (pm.add_face(first)) seeds.push_back(std::move(pm));
    }
  }
  if (seeds.empty()) {
    result.reason = "no consistent starting configuration on " + std::to_string(n) + " vertices";
    return result;
  }

  std::map<CanonicalForm, PolyhedralMap> classes;
  std::vector<PolyhedralMap> raw;
  EnumerateOptions sub = options;
  std::uint64_t budget_left = options.max_nodes;
  for (const PartialMap& seed : seeds) {
    if (options.max_nodes) sub.max_nodes = budget_left;
    EnumerationResult part = complete_partial(seed, sub);
    result.stats.nodes += part.stats.nodes;
    result.stats.solutions += part.stats.solutions;
    if (!part.stats.complete) result.stats.complete = false;
    for (PolyhedralMap& map : part.maps) {
      if (options.dedup) {
        classes.emplace(canonical_form(map), std::move(map));
      } else {
        raw.push_back(std::move(map));
      }
    }
    if (options.max_nodes) {
      if (part.stats.nodes >= budget_left) break;
      budget_left -= part.stats.nodes;
    }
  }
  if (options.dedup) {
    int index = 0;
    for (auto& [form, map] : classes) {
      result.maps.push_back(map.with_name("sem_" + std::to_string(++index)));
    }
    result.stats.classes = result.maps.size();
  } else {
    std::set<CanonicalForm> forms;
    for (const auto& map : raw) forms.insert(canonical_form(map));
    result.stats.classes = forms.size();
    result.maps = std::move(raw);
  }
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace semmap
