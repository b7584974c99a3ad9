#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fourcolor/edgeset.hpp"
#include "fourcolor/multigraph.hpp"

namespace fourcolor {

/// Directed edge side: edge id plus the vertex it leaves from.
/// Unambiguous because self-loops are rejected everywhere.
struct Dart {
  EdgeId edge;
  VertexId from;
  auto operator<=>(const Dart&) const = default;
};

/// Per-vertex cyclic order of incident edges; a purely combinatorial
/// description of a plane drawing.
class RotationSystem {
 public:
  RotationSystem() = default;

  void set(VertexId v, std::vector<EdgeId> order) { order_[v] = std::move(order); }

  const std::vector<EdgeId>& at(VertexId v) const {
    auto it = order_.find(v);
    if (it == order_.end()) throw GraphError("rotation missing vertex " + std::to_string(v));
    return it->second;
  }

  bool covers(VertexId v) const { return order_.count(v) != 0; }

  EdgeId successor(VertexId v, EdgeId e) const {
    const auto& cyc = at(v);
    auto it = std::find(cyc.begin(), cyc.end(), e);
    if (it == cyc.end())
      throw GraphError("edge " + std::to_string(e) + " not in rotation of vertex " + std::to_string(v));
    ++it;
    return it == cyc.end() ? cyc.front() : *it;
  }

  EdgeId predecessor(VertexId v, EdgeId e) const {
    const auto& cyc = at(v);
    auto it = std::find(cyc.begin(), cyc.end(), e);
    if (it == cyc.end())
      throw GraphError("edge " + std::to_string(e) + " not in rotation of vertex " + std::to_string(v));
    return it == cyc.begin() ? cyc.back() : *(it - 1);
  }

  void remove(VertexId v, EdgeId e) {
    auto& cyc = order_.at(v);
    cyc.erase(std::find(cyc.begin(), cyc.end(), e));
  }

  void remove_vertex(VertexId v) { order_.erase(v); }

  /// Replaces one occurrence of `from` by `to`, keeping its cyclic position.
  void replace(VertexId v, EdgeId from, EdgeId to) {
    auto& cyc = order_.at(v);
    *std::find(cyc.begin(), cyc.end(), from) = to;
  }

  /// Inserts `e` directly after `after` in the cyclic order at v.
  void insert_after(VertexId v, EdgeId after, EdgeId e) {
    auto& cyc = order_.at(v);
    auto it = std::find(cyc.begin(), cyc.end(), after);
    if (it == cyc.end()) throw GraphError("rotation of " + std::to_string(v) + " lacks anchor edge");
    cyc.insert(it + 1, e);
  }

  const std::map<VertexId, std::vector<EdgeId>>& all() const { return order_; }

  /// Mirror image of the drawing.
  RotationSystem reversed() const {
    RotationSystem out = *this;
    for (auto& [v, cyc] : out.order_) std::reverse(cyc.begin(), cyc.end());
    return out;
  }

  void validate(const MultiGraph& g) const {
    for (VertexId v : g.vertex_ids()) {
      if (!covers(v)) throw GraphError("rotation missing vertex " + std::to_string(v));
      auto sorted = at(v);
      std::sort(sorted.begin(), sorted.end());
      auto inc = g.incident(v);
      std::sort(inc.begin(), inc.end());
      if (sorted != inc)
        throw GraphError("rotation of vertex " + std::to_string(v) +
                         " is not a permutation of its incident edges");
    }
    for (const auto& [v, _] : order_)
      if (!g.has_vertex(v)) throw GraphError("rotation lists foreign vertex " + std::to_string(v));
  }

 private:
  std::map<VertexId, std::vector<EdgeId>> order_;
};

/// One face of an embedding: the cyclic dart sequence produced by tracing.
struct Face {
  std::vector<Dart> darts;

  std::size_t length() const { return darts.size(); }

  EdgeSet edges() const {
    EdgeSet out;
    for (const Dart& d : darts) out.insert(d.edge);
    return out;
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.from);
    return out;
  }

  bool contains_edge(EdgeId e) const {
    for (const Dart& d : darts)
      if (d.edge == e) return true;
    return false;
  }
};

/// Traces the closed walks induced by a rotation system: from dart (e, v) the
/// walk continues along the successor of e in the rotation of e's far end.
/// Every dart of the graph lands in exactly one face; summed lengths are 2m.
inline std::vector<Face> trace_faces(const MultiGraph& g, const RotationSystem& rot) {
  rot.validate(g);
  std::set<Dart> pending;
  for (EdgeId e : g.edge_ids()) {
    auto [u, v] = g.endpoints(e);
    pending.insert({e, u});
    pending.insert({e, v});
  }
  std::vector<Face> faces;
  while (!pending.empty()) {
    Dart start = *pending.begin();
    Face face;
    Dart cur = start;
    do {
      pending.erase(cur);
      face.darts.push_back(cur);
      VertexId head = g.other_end(cur.edge, cur.from);
      cur = {rot.successor(head, cur.edge), head};
    } while (cur != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

/// Genus-0 certificate: the embedding is a sphere iff V - E + F = 2.
inline bool euler_planarity_check(const MultiGraph& g, const std::vector<Face>& faces) {
  long v = static_cast<long>(g.num_vertices());
  long e = static_cast<long>(g.num_edges());
  long f = static_cast<long>(faces.size());
  return v - e + f == 2;
}

/// Maclane functional over a candidate cycle set: sum of (a-1)(a-2) where a
/// counts the given cycles through each of the m edges. Zero on the face set
/// of any sphere embedding.
inline long maclane_functional(const std::vector<EdgeSet>& cycles, const std::vector<EdgeId>& edges) {
  std::map<EdgeId, long> count;
  for (EdgeId e : edges) count[e] = 0;
  for (const EdgeSet& c : cycles)
    for (EdgeId e : c) count[e] += 1;
  long total = 0;
  for (const auto& [e, a] : count) total += (a - 1) * (a - 2);
  return total;
}

/// Recovers a rotation system from a face list given as vertex cycles.
/// Orientations of the faces are reconciled by propagation across shared
/// edges so that every dart is used exactly once. Only for simple graphs,
/// where consecutive vertices identify an edge unambiguously.
inline RotationSystem rotation_from_faces(const MultiGraph& g,
                                          const std::vector<std::vector<VertexId>>& face_cycles) {
  if (!g.is_simple()) throw GraphError("rotation_from_faces requires a simple graph");
  std::map<std::pair<VertexId, VertexId>, EdgeId> lookup;
  for (EdgeId e : g.edge_ids()) {
    auto [u, v] = g.endpoints(e);
    lookup[{u, v}] = e;
    lookup[{v, u}] = e;
  }
  // Decide a direction for each face so that the darts partition.
  std::map<EdgeId, std::vector<std::size_t>> edge_faces;
  for (std::size_t i = 0; i < face_cycles.size(); ++i) {
    const auto& cyc = face_cycles[i];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      auto it = lookup.find({cyc[k], cyc[(k + 1) % cyc.size()]});
      if (it == lookup.end()) throw GraphError("face lists a non-edge");
      edge_faces[it->second].push_back(i);
    }
  }
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() != 2) throw GraphError("edge " + std::to_string(e) + " not on exactly two faces");

  std::vector<int> flip(face_cycles.size(), -1);
  std::vector<std::size_t> queue;
  auto face_dart_dir = [&](std::size_t i, EdgeId e) {
    const auto& cyc = face_cycles[i];
    for (std::size_t k = 0; k < cyc.size(); ++k)
      if (lookup[{cyc[k], cyc[(k + 1) % cyc.size()]}] == e) return std::pair{cyc[k], cyc[(k + 1) % cyc.size()]};
    throw GraphError("face/edge mismatch");
  };
  for (std::size_t seed = 0; seed < face_cycles.size(); ++seed) {
    if (flip[seed] != -1) continue;
    flip[seed] = 0;
    queue.assign(1, seed);
    while (!queue.empty()) {
      std::size_t i = queue.back();
      queue.pop_back();
      const auto& cyc = face_cycles[i];
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        EdgeId e = lookup[{cyc[k], cyc[(k + 1) % cyc.size()]}];
        for (std::size_t j : edge_faces[e]) {
          if (j == i) continue;
          auto di = face_dart_dir(i, e);
          auto dj = face_dart_dir(j, e);
          // Opposite sides must traverse e in opposite directions.
          int needed = (di == dj) ? 1 - flip[i] : flip[i];
          if (flip[j] == -1) {
            flip[j] = needed;
            queue.push_back(j);
          } else if (flip[j] != needed) {
            throw GraphError("face list is not consistently orientable");
          }
        }
      }
    }
  }

  // Corner rule: a face arriving at v via edge a and leaving via b pins b as
  // the rotation successor of a at v.
  std::map<VertexId, std::map<EdgeId, EdgeId>> succ;
  for (std::size_t i = 0; i < face_cycles.size(); ++i) {
    std::vector<VertexId> cyc = face_cycles[i];
    if (flip[i]) std::reverse(cyc.begin(), cyc.end());
    std::size_t n = cyc.size();
    for (std::size_t k = 0; k < n; ++k) {
      VertexId prev = cyc[(k + n - 1) % n];
      VertexId v = cyc[k];
      VertexId next = cyc[(k + 1) % n];
      succ[v][lookup[{prev, v}]] = lookup[{v, next}];
    }
  }
  RotationSystem rot;
  for (VertexId v : g.vertex_ids()) {
    const auto& m = succ[v];
    if (m.size() != g.incident(v).size())
      throw GraphError("face corners at vertex " + std::to_string(v) + " do not cover all edges");
    std::vector<EdgeId> cyc;
    EdgeId cur = m.begin()->first;
    for (std::size_t k = 0; k < m.size(); ++k) {
      cyc.push_back(cur);
      cur = m.at(cur);
    }
    rot.set(v, std::move(cyc));
  }
  rot.validate(g);
  return rot;
}

}  // namespace fourcolor
