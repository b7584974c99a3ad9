#pragma once

#include <optional>

#include "fourcolor/coloring.hpp"
#include "fourcolor/rotation.hpp"
#include "fourcolor/surgery.hpp"

namespace fourcolor {

enum class BaseKind { Theta, K4, None };

/// The two peel targets: the minimal cubic multigraph (two vertices joined by
/// three parallel edges) and the tetrahedron.
inline BaseKind classify_base(const MultiGraph& g) {
  if (g.num_vertices() == 2 && g.num_edges() == 3) return BaseKind::Theta;
  if (g.num_vertices() == 4 && g.num_edges() == 6 && g.is_simple()) {
    for (VertexId u : g.vertex_ids())
      for (VertexId v : g.vertex_ids())
        if (u < v && !g.adjacent(u, v)) return BaseKind::None;
    return BaseKind::K4;
  }
  return BaseKind::None;
}

/// Fixed canonical proper coloring of a base graph: theta edges get R,B,G in
/// id order; K4 gets its three perfect matchings colored R,B,G.
inline EdgeColoring color_base(const MultiGraph& g) {
  EdgeColoring col;
  BaseKind kind = classify_base(g);
  if (kind == BaseKind::Theta) {
    int i = 0;
    for (EdgeId e : g.edge_ids()) col.set(e, kEdgeColors[i++]);
    return col;
  }
  if (kind == BaseKind::K4) {
    int next = 0;
    for (EdgeId e : g.edge_ids()) {
      if (col.has(e)) continue;
      KleinColor c = kEdgeColors[next++];
      col.set(e, c);
      auto [u, v] = g.endpoints(e);
      for (EdgeId f : g.edge_ids()) {
        auto [x, y] = g.endpoints(f);
        if (x != u && x != v && y != u && y != v) col.set(f, c);
      }
    }
    return col;
  }
  throw GraphError("color_base expects a theta or K4 graph");
}

struct PeelResult {
  MultiGraph base;
  RotationSystem base_rot;
  std::vector<DeletionRecord> script;  // in deletion order
};

namespace detail {

/// Candidate order per step: edges on the smallest faces first, then edges
/// whose removal keeps the graph simple, then smallest id.
inline std::vector<EdgeId> peel_candidates(const MultiGraph& g, const RotationSystem& rot) {
  std::map<EdgeId, std::size_t> face_size;
  for (const Face& f : trace_faces(g, rot))
    for (const Dart& d : f.darts) {
      auto it = face_size.find(d.edge);
      if (it == face_size.end() || f.length() < it->second) face_size[d.edge] = f.length();
    }
  auto creates_parallel = [&](EdgeId e) {
    auto [a, b] = g.endpoints(e);
    if (g.multiplicity(a, b) > 1) return false;  // digon removal only shrinks
    auto would_pair = [&](VertexId v) {
      std::vector<VertexId> far;
      for (EdgeId f : g.incident(v))
        if (f != e) far.push_back(g.other_end(f, v));
      return far.size() == 2 && g.adjacent(far[0], far[1]);
    };
    return would_pair(a) || would_pair(b);
  };
  std::vector<EdgeId> order = g.edge_ids();
  std::map<EdgeId, std::pair<std::size_t, int>> rank;
  for (EdgeId e : order) rank[e] = {face_size[e], creates_parallel(e) ? 1 : 0};
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return a < b;
  });
  return order;
}

}  // namespace detail

/// Reduces a bridgeless planar cubic graph to a base graph by repeated
/// deletion with suppression, keeping every intermediate graph cubic and
/// bridgeless. The script replays the inverse insertions in reverse order.
inline PeelResult peel(const MultiGraph& graph, const RotationSystem& rotation) {
  if (!graph.is_cubic()) throw GraphError("peel expects a cubic graph");
  if (!graph.is_connected()) throw GraphError("peel expects a connected graph");
  MultiGraph g = graph;
  RotationSystem rot = rotation;
  PeelResult result;
  while (classify_base(g) == BaseKind::None) {
    bool removed = false;
    for (EdgeId e : detail::peel_candidates(g, rot)) {
      MultiGraph trial_g = g;
      RotationSystem trial_rot = rot;
      auto outcome = delete_with_suppression(trial_g, &trial_rot, e, /*bridgeless=*/true);
      if (std::holds_alternative<DeletionRecord>(outcome)) {
        result.script.push_back(std::get<DeletionRecord>(outcome));
        g = std::move(trial_g);
        rot = std::move(trial_rot);
        removed = true;
        break;
      }
    }
    if (!removed)
      throw GraphError("stuck peel: no removable edge in a graph with " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
  result.base = std::move(g);
  result.base_rot = std::move(rot);
  return result;
}

}  // namespace fourcolor
