#pragma once

#include <tuple>

#include "fourcolor/bridges.hpp"
#include "fourcolor/rotation.hpp"

namespace fourcolor {

/// Three bijections tying a maximal planar graph to its cubic dual, plus the
/// recorded outer-face and rim choices that make later lifts deterministic.
struct DualCorrespondence {
  std::map<std::size_t, VertexId> face_to_vertex;        // primal face index -> dual vertex
  std::map<EdgeId, EdgeId> primal_to_dual_edge;          // identity by construction, kept explicit
  std::map<EdgeId, EdgeId> dual_to_primal_edge;
  std::map<VertexId, std::size_t> vertex_to_dual_face;   // primal vertex -> dual face index
  std::size_t outer_face_primal = 0;                     // the designated face s
  VertexId outer_vertex_dual = -1;
  VertexId rim_vertex_primal = -1;                       // chosen primal vertex
  std::size_t rim_face_dual = 0;                         // its dual face: the rim c0
};

struct DualResult {
  MultiGraph graph;
  RotationSystem rotation;
  DualCorrespondence corr;
};

/// Embedding-based dual of any connected sphere embedding: one vertex per
/// face, one edge per primal edge (same id), rotation given by the face walk.
inline DualResult dual_graph(const MultiGraph& g, const RotationSystem& rot,
                             std::size_t outer_face = SIZE_MAX, VertexId rim_vertex = -1) {
  std::vector<Face> faces = trace_faces(g, rot);
  if (!euler_planarity_check(g, faces))
    throw GraphError("rotation system is not a sphere embedding");

  DualResult out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out.graph.add_vertex_with_id(static_cast<VertexId>(i));
    out.corr.face_to_vertex[i] = static_cast<VertexId>(i);
  }
  std::map<EdgeId, std::vector<std::size_t>> sides;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Dart& d : faces[i].darts) sides[d.edge].push_back(i);
  for (EdgeId e : g.edge_ids()) {
    const auto& s = sides.at(e);
    if (s.size() != 2) throw GraphError("edge " + std::to_string(e) + " is not on exactly two faces");
    out.graph.add_edge_with_id(e, static_cast<VertexId>(s[0]), static_cast<VertexId>(s[1]));
    out.corr.primal_to_dual_edge[e] = e;
    out.corr.dual_to_primal_edge[e] = e;
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<EdgeId> order;
    order.reserve(faces[i].length());
    for (const Dart& d : faces[i].darts) order.push_back(d.edge);
    out.rotation.set(static_cast<VertexId>(i), std::move(order));
  }

  // Dual faces surround exactly one primal vertex each.
  std::vector<Face> dual_faces = trace_faces(out.graph, out.rotation);
  if (!euler_planarity_check(out.graph, dual_faces)) throw GraphError("dual embedding lost genus zero");
  for (std::size_t i = 0; i < dual_faces.size(); ++i) {
    std::set<VertexId> common;
    bool first = true;
    for (const Dart& d : dual_faces[i].darts) {
      auto [a, b] = g.endpoints(d.edge);
      std::set<VertexId> ends{a, b};
      if (first) {
        common = ends;
        first = false;
      } else {
        std::set<VertexId> keep;
        for (VertexId v : common)
          if (ends.count(v)) keep.insert(v);
        common = keep;
      }
    }
    if (common.size() != 1) throw GraphError("dual face does not surround a single primal vertex");
    out.corr.vertex_to_dual_face[*common.begin()] = i;
  }
  if (out.corr.vertex_to_dual_face.size() != g.num_vertices())
    throw GraphError("dual face / primal vertex correspondence is not a bijection");

  out.corr.outer_face_primal = outer_face == SIZE_MAX ? 0 : outer_face;
  out.corr.outer_vertex_dual = out.corr.face_to_vertex.at(out.corr.outer_face_primal);
  out.corr.rim_vertex_primal = rim_vertex >= 0 ? rim_vertex : g.vertex_ids().front();
  out.corr.rim_face_dual = out.corr.vertex_to_dual_face.at(out.corr.rim_vertex_primal);
  return out;
}

/// Dual of a maximal planar graph: checks the all-triangles precondition and
/// the cubic-graph count identities m = 3n/2, n even.
inline DualResult dual_cubic(const MultiGraph& g, const RotationSystem& rot,
                             std::size_t outer_face = SIZE_MAX, VertexId rim_vertex = -1) {
  std::vector<Face> faces = trace_faces(g, rot);
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].length() != 3) {
      std::string face_text;
      for (VertexId v : faces[i].vertices()) face_text += " " + std::to_string(v);
      throw GraphError("non-triangular face:" + face_text);
    }
  DualResult out = dual_graph(g, rot, outer_face, rim_vertex);
  if (!out.graph.is_cubic()) throw GraphError("dual of a triangulation must be cubic");
  if (!out.graph.is_connected()) throw GraphError("dual must be connected");
  if (!is_bridgeless(out.graph)) throw GraphError("dual must be bridgeless");
  std::size_t n = out.graph.num_vertices();
  if (n % 2 != 0 || out.graph.num_edges() * 2 != 3 * n)
    throw GraphError("dual violates the cubic count identities");
  return out;
}

}  // namespace fourcolor
