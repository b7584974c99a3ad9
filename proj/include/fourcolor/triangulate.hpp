#pragma once

#include <functional>
#include <optional>

#include "fourcolor/bridges.hpp"
#include "fourcolor/edgeset.hpp"
#include "fourcolor/rotation.hpp"

namespace fourcolor {

namespace detail {

inline bool has_articulation_point(const MultiGraph& g) {
  if (g.num_vertices() < 3) return false;
  std::map<VertexId, int> disc, low;
  std::map<VertexId, VertexId> parent;
  int time = 0;
  bool found = false;
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    disc[u] = low[u] = time++;
    int children = 0;
    for (EdgeId e : g.incident(u)) {
      VertexId v = g.other_end(e, u);
      if (!disc.count(v)) {
        ++children;
        parent[v] = u;
        dfs(v);
        low[u] = std::min(low[u], low[v]);
        if (!parent.count(u) && children > 1) found = true;
        if (parent.count(u) && low[v] >= disc[u]) found = true;
      } else if (!parent.count(u) || v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(g.vertex_ids().front());
  return found || disc.size() != g.num_vertices();
}

}  // namespace detail

struct TriangulationResult {
  MultiGraph graph;
  RotationSystem rotation;
  EdgeSet added;
};

/// Splits every non-triangular face of a 2-connected simple embedded graph
/// into triangles by fanning chords from one face vertex. The fan apex starts
/// at the smallest vertex id and rotates onward when an existing edge blocks
/// a chord. Removing the added chords restores the input exactly.
inline TriangulationResult triangulate(const MultiGraph& graph, const RotationSystem& rotation) {
  if (!graph.is_simple()) throw GraphError("triangulate expects a simple graph");
  if (!graph.is_connected()) throw GraphError("triangulate expects a connected graph");
  if (graph.num_vertices() < 3) throw GraphError("triangulate expects at least three vertices");
  for (VertexId v : graph.vertex_ids())
    if (graph.degree(v) < 2)
      throw GraphError("vertex " + std::to_string(v) + " has degree below two");
  if (detail::has_articulation_point(graph))
    throw GraphError("triangulate expects a 2-connected graph");
  {
    auto faces = trace_faces(graph, rotation);
    if (!euler_planarity_check(graph, faces))
      throw GraphError("rotation system is not a sphere embedding");
  }

  TriangulationResult result{graph, rotation, {}};
  MultiGraph& g = result.graph;
  RotationSystem& rot = result.rotation;

  while (true) {
    std::optional<Face> big;
    for (const Face& f : trace_faces(g, rot))
      if (f.length() > 3) {
        big = f;
        break;
      }
    if (!big) break;

    std::size_t k = big->length();
    std::vector<VertexId> cyc = big->vertices();
    {
      std::set<VertexId> uniq(cyc.begin(), cyc.end());
      if (uniq.size() != cyc.size()) {
        std::string face_text;
        for (VertexId v : cyc) face_text += " " + std::to_string(v);
        throw GraphError("triangulation failure: face with repeated vertices:" + face_text);
      }
    }

    // Pick the fan apex: smallest vertex id whose fan stays chord-legal.
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cyc[a] < cyc[b]; });
    std::optional<std::size_t> apex;
    for (std::size_t p : order) {
      bool legal = true;
      for (std::size_t j = 2; j + 1 < k; ++j)
        if (g.adjacent(cyc[p], cyc[(p + j) % k])) {
          legal = false;
          break;
        }
      if (legal) {
        apex = p;
        break;
      }
    }
    if (!apex) {
      std::string face_text;
      for (VertexId v : cyc) face_text += " " + std::to_string(v);
      throw GraphError("triangulation failure: no legal fan apex for face:" + face_text);
    }

    std::size_t p = *apex;
    VertexId u0 = cyc[p];
    EdgeId arriving0 = big->darts[(p + k - 1) % k].edge;
    for (std::size_t j = 2; j + 1 < k; ++j) {
      VertexId uj = cyc[(p + j) % k];
      EdgeId chord = g.add_edge(u0, uj);
      result.added.insert(chord);
      rot.insert_after(u0, arriving0, chord);
      rot.insert_after(uj, big->darts[(p + j - 1) % k].edge, chord);
    }
  }

  std::size_t n = result.graph.num_vertices();
  if (result.graph.num_edges() != 3 * n - 6)
    throw GraphError("triangulation did not reach 3n-6 edges");
  return result;
}

}  // namespace fourcolor
