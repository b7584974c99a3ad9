#pragma once

#include <array>

#include "fourcolor/coloring.hpp"
#include "fourcolor/rotation.hpp"
#include "fourcolor/surgery.hpp"

namespace fourcolor::fixtures {

struct EmbeddedGraph {
  MultiGraph graph;
  RotationSystem rot;
};

struct ColoredFixture {
  MultiGraph graph;
  RotationSystem rot;
  EdgeColoring coloring;
};

/// Index of the traced face whose edge set matches `edges`.
inline std::size_t find_face_index(const std::vector<Face>& faces, const EdgeSet& edges) {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].edges() == edges) return i;
  throw GraphError("no traced face has the requested edge set");
}

/// Minimal cubic multigraph: two vertices joined by three parallel edges.
inline EmbeddedGraph theta() {
  EmbeddedGraph out;
  out.graph = build_graph({{1, 2}, {1, 2}, {1, 2}});
  out.rot.set(1, {1, 2, 3});
  out.rot.set(2, {3, 2, 1});
  return out;
}

inline EmbeddedGraph k4() {
  EmbeddedGraph out;
  out.graph = build_graph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  out.rot = rotation_from_faces(out.graph, {{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}});
  return out;
}

/// Triangular prism, the cubic companion of the 9-edge incidence
/// table fixture (edges 1..9 keep that numbering).
inline EmbeddedGraph prism3() {
  EmbeddedGraph out;
  out.graph = build_graph(
      {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  out.rot = rotation_from_faces(out.graph,
                                {{1, 3, 4}, {2, 5, 6}, {1, 2, 5, 3}, {3, 5, 6, 4}, {1, 4, 6, 2}});
  return out;
}

inline EmbeddedGraph octahedron() {
  EmbeddedGraph out;
  out.graph = build_graph({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2},
                           {6, 2}, {6, 3}, {6, 4}, {6, 5}});
  out.rot = rotation_from_faces(out.graph, {{1, 2, 3},
                                            {1, 3, 4},
                                            {1, 4, 5},
                                            {1, 5, 2},
                                            {6, 3, 2},
                                            {6, 4, 3},
                                            {6, 5, 4},
                                            {6, 2, 5}});
  return out;
}

/// Pentagonal prism with its reference coloring; edge ids 1..15 follow the
/// reference drawing, so the recorded cycle and factor sets apply verbatim.
inline ColoredFixture pentaprism() {
  ColoredFixture out;
  out.graph = build_graph({{1, 2},   // e1
                           {5, 1},   // e2
                           {1, 6},   // e3
                           {2, 3},   // e4
                           {2, 7},   // e5
                           {3, 4},   // e6
                           {3, 8},   // e7
                           {4, 5},   // e8
                           {4, 9},   // e9
                           {5, 10},  // e10
                           {6, 7},   // e11
                           {10, 6},  // e12
                           {7, 8},   // e13
                           {8, 9},   // e14
                           {9, 10}});// e15
  out.rot = rotation_from_faces(out.graph, {{1, 2, 3, 4, 5},
                                            {1, 2, 7, 6},
                                            {2, 3, 8, 7},
                                            {3, 4, 9, 8},
                                            {4, 5, 10, 9},
                                            {5, 1, 6, 10},
                                            {6, 7, 8, 9, 10}});
  for (EdgeId e : {3, 5, 7, 8, 15}) out.coloring.set(e, kRed);
  for (EdgeId e : {2, 4, 9, 12, 13}) out.coloring.set(e, kBlue);
  for (EdgeId e : {1, 6, 10, 11, 14}) out.coloring.set(e, kGreen);
  return out;
}

/// Octagonal prism with the reference coloring under which the hosts e8, e17
/// lack a coupling disk until two green squares are rotated.
inline ColoredFixture octaprism() {
  ColoredFixture out;
  out.graph = build_graph({{1, 2},    // e1
                           {2, 10},   // e2
                           {2, 3},    // e3
                           {1, 9},    // e4
                           {8, 1},    // e5
                           {9, 10},   // e6
                           {16, 9},   // e7
                           {10, 11},  // e8
                           {11, 12},  // e9
                           {3, 11},   // e10
                           {4, 12},   // e11
                           {12, 13},  // e12
                           {3, 4},    // e13
                           {4, 5},    // e14
                           {15, 16},  // e15
                           {7, 15},   // e16
                           {14, 15},  // e17
                           {8, 16},   // e18
                           {7, 8},    // e19
                           {6, 7},    // e20
                           {5, 6},    // e21
                           {6, 14},   // e22
                           {5, 13},   // e23
                           {13, 14}});// e24
  out.rot = rotation_from_faces(out.graph, {{1, 2, 3, 4, 5, 6, 7, 8},
                                            {9, 10, 11, 12, 13, 14, 15, 16},
                                            {1, 2, 10, 9},
                                            {2, 3, 11, 10},
                                            {3, 4, 12, 11},
                                            {4, 5, 13, 12},
                                            {5, 6, 14, 13},
                                            {6, 7, 15, 14},
                                            {7, 8, 16, 15},
                                            {8, 1, 9, 16}});
  for (EdgeId e : {3, 4, 8, 11, 17, 18, 20, 23}) out.coloring.set(e, kRed);
  for (EdgeId e : {2, 5, 7, 10, 12, 14, 16, 22}) out.coloring.set(e, kBlue);
  for (EdgeId e : {1, 6, 9, 13, 15, 19, 21, 24}) out.coloring.set(e, kGreen);
  return out;
}

/// The 12-vertex cubic graph whose four odd (pentagonal) faces drive the
/// even-face walkthrough: two joining edges suffice.
inline EmbeddedGraph even_face_demo() {
  EmbeddedGraph out;
  out.graph = build_graph({{1, 2},
                           {1, 4},
                           {1, 8},
                           {2, 3},
                           {2, 5},
                           {3, 4},
                           {3, 6},
                           {4, 12},
                           {5, 6},
                           {5, 7},
                           {6, 11},
                           {7, 8},
                           {7, 9},
                           {8, 10},
                           {9, 10},
                           {9, 11},
                           {10, 12},
                           {11, 12}});
  out.rot = rotation_from_faces(out.graph, {{1, 2, 3, 4},
                                            {2, 5, 6, 3},
                                            {7, 8, 10, 9},
                                            {9, 10, 12, 11},
                                            {1, 4, 12, 10, 8},
                                            {5, 7, 9, 11, 6},
                                            {1, 2, 5, 7, 8},
                                            {3, 6, 11, 12, 4}});
  return out;
}

/// Six-vertex graph with an explicit vertex-rotation diagram; exercises face
/// tracing on a non-regular embedding.
inline EmbeddedGraph rotation_demo() {
  EmbeddedGraph out;
  out.graph = build_graph({{1, 2},   // e1
                           {1, 3},   // e2
                           {1, 4},   // e3
                           {2, 3},   // e4
                           {2, 5},   // e5
                           {2, 6},   // e6
                           {3, 4},   // e7
                           {3, 5},   // e8
                           {4, 5},   // e9
                           {4, 6},   // e10
                           {5, 6}}); // e11
  out.rot.set(1, {1, 2, 3});
  out.rot.set(2, {6, 5, 4, 1});
  out.rot.set(3, {2, 4, 8, 7});
  out.rot.set(4, {3, 7, 9, 10});
  out.rot.set(5, {9, 8, 5, 11});
  out.rot.set(6, {6, 10, 11});
  return out;
}

/// Icosahedral triangulation assembled from its twenty reference triangles.
/// Edge ids run 1..30 in sorted endpoint order.
inline EmbeddedGraph icosahedron() {
  static const std::vector<std::array<VertexId, 3>> tris = {
      {1, 4, 6},   {1, 3, 4},   {1, 2, 5},  {1, 5, 6},  {3, 4, 7},   {3, 7, 8},   {2, 3, 8},
      {2, 8, 9},   {2, 5, 9},   {4, 7, 11}, {7, 8, 10}, {8, 9, 10},  {5, 9, 12},  {5, 6, 12},
      {7, 10, 11}, {10, 11, 12},{6, 11, 12},{1, 2, 3},  {9, 10, 12}, {4, 6, 11}};
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) pairs.insert(std::minmax(t[i], t[(i + 1) % 3]));
  EmbeddedGraph out;
  std::vector<std::pair<VertexId, VertexId>> edges(pairs.begin(), pairs.end());
  out.graph = build_graph(edges);
  std::vector<std::vector<VertexId>> faces;
  for (const auto& t : tris) faces.push_back({t[0], t[1], t[2]});
  out.rot = rotation_from_faces(out.graph, faces);
  return out;
}

/// The icosahedron's reference triangle list in trace-face order is needed by
/// orientation tests; expose the raw triples.
inline const std::vector<std::array<VertexId, 3>>& icosahedron_triangles() {
  static const std::vector<std::array<VertexId, 3>> tris = {
      {1, 4, 6},   {1, 3, 4},   {1, 2, 5},  {1, 5, 6},  {3, 4, 7},   {3, 7, 8},   {2, 3, 8},
      {2, 8, 9},   {2, 5, 9},   {4, 7, 11}, {7, 8, 10}, {8, 9, 10},  {5, 9, 12},  {5, 6, 12},
      {7, 10, 11}, {10, 11, 12},{6, 11, 12},{1, 2, 3},  {9, 10, 12}, {4, 6, 11}};
  return tris;
}

/// Cubic 20-vertex graph given by a reference colored-rotation diagram, with
/// the edge coloring that diagram encodes (edge color = its slot in the
/// R,B,G cycle at both ends, recovered by propagation).
inline ColoredFixture colored_rotation_demo() {
  static const std::vector<std::array<VertexId, 3>> nbr = {
      {2, 5, 6},   {1, 3, 14},  {2, 12, 4},  {5, 3, 10},  {4, 8, 1},   {7, 15, 1},  {8, 6, 20},
      {7, 5, 9},   {8, 10, 19}, {4, 9, 11},  {10, 12, 18},{3, 13, 11}, {14, 17, 12},{2, 15, 13},
      {6, 16, 14}, {20, 17, 15},{13, 18, 16},{11, 17, 19},{20, 9, 18}, {19, 16, 7}};
  ColoredFixture out;
  std::map<std::pair<VertexId, VertexId>, EdgeId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v <= 20; ++v)
    for (VertexId w : nbr[v - 1])
      if (v < w) {
        ids[{v, w}] = static_cast<EdgeId>(edges.size()) + 1;
        edges.push_back({v, w});
      }
  out.graph = build_graph(edges);
  auto edge_id = [&](VertexId a, VertexId b) { return ids.at(std::minmax(a, b)); };

  // The diagram lists each vertex's neighbours in R,B,G cyclic order; fix one
  // edge and propagate around every vertex cycle.
  std::map<EdgeId, KleinColor> color;
  color[edge_id(1, 2)] = kRed;
  std::vector<EdgeId> queue{edge_id(1, 2)};
  auto span_vertex = [&](VertexId v) {
    const auto& lst = nbr[v - 1];
    for (int i = 0; i < 3; ++i) {
      EdgeId ei = edge_id(v, lst[i]);
      auto it = color.find(ei);
      if (it == color.end()) continue;
      KleinColor c = it->second;
      for (int k = 1; k < 3; ++k) {
        EdgeId en = edge_id(v, lst[(i + k) % 3]);
        KleinColor want = k == 1 ? next_edge_color(c) : next_edge_color(next_edge_color(c));
        auto itn = color.find(en);
        if (itn == color.end()) {
          color[en] = want;
          queue.push_back(en);
        } else if (itn->second != want) {
          throw GraphError("colored rotation diagram is inconsistent");
        }
      }
      return;
    }
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [a, b] = out.graph.endpoints(queue[qi]);
    span_vertex(a);
    span_vertex(b);
  }
  for (const auto& [e, c] : color) out.coloring.set(e, c);

  // Rotation in the diagram's own order, so induced walks can be compared
  // against the recorded ones.
  for (VertexId v = 1; v <= 20; ++v) {
    std::vector<EdgeId> cyc;
    for (VertexId w : nbr[v - 1]) cyc.push_back(edge_id(v, w));
    out.rot.set(v, cyc);
  }
  return out;
}

/// The four recorded closed walks of the colored-rotation diagram, as vertex
/// sequences.
inline std::vector<std::vector<VertexId>> colored_rotation_demo_walks() {
  return {{1, 5, 4, 3, 2, 14, 15, 6, 1, 2, 3, 12, 13, 14, 2},
          {5, 1, 6, 7, 20, 19, 9, 8, 7, 6, 15, 16, 20, 7, 8},
          {15, 14, 13, 17, 18, 19, 20, 16, 17, 13, 12, 11, 18, 17, 16},
          {11, 12, 3, 4, 10, 9, 19, 18, 11, 10, 4, 5, 8, 9, 10}};
}

/// The twelve reference pentagons of the Petersen graph, edges numbered 1..15.
inline std::vector<EdgeSet> petersen_pentagons() {
  return {{1, 2, 4, 6, 8},   {1, 2, 5, 10, 14},  {1, 3, 4, 7, 11},  {1, 3, 5, 12, 13},
          {2, 3, 10, 11, 15},{2, 3, 8, 9, 12},   {4, 5, 6, 9, 13},  {4, 5, 7, 14, 15},
          {6, 7, 9, 11, 12}, {6, 7, 8, 10, 15},  {8, 9, 10, 13, 14},{11, 12, 13, 14, 15}};
}

/// Reconstructs the Petersen graph from its pentagon system: two
/// edges are adjacent exactly when two pentagons pass through both, and the
/// triangles of that adjacency are the Petersen vertices.
inline MultiGraph petersen() {
  auto pents = petersen_pentagons();
  std::map<std::pair<EdgeId, EdgeId>, int> together;
  for (const EdgeSet& c : pents)
    for (EdgeId a : c)
      for (EdgeId b : c)
        if (a < b) together[{a, b}] += 1;
  std::map<EdgeId, std::set<EdgeId>> adj;
  for (const auto& [pair, k] : together)
    if (k == 2) {
      adj[pair.first].insert(pair.second);
      adj[pair.second].insert(pair.first);
    }
  // Vertices = triangles of the line-graph adjacency.
  std::vector<std::array<EdgeId, 3>> triangles;
  for (EdgeId a = 1; a <= 15; ++a)
    for (EdgeId b : adj[a])
      for (EdgeId c : adj[b])
        if (a < b && b < c && adj[a].count(c)) triangles.push_back({a, b, c});
  if (triangles.size() != 10) throw GraphError("pentagon system did not yield ten vertices");
  std::map<EdgeId, std::vector<VertexId>> ends;
  for (std::size_t i = 0; i < triangles.size(); ++i)
    for (EdgeId e : triangles[i]) ends[e].push_back(static_cast<VertexId>(i + 1));
  MultiGraph g;
  for (VertexId v = 1; v <= 10; ++v) g.add_vertex_with_id(v);
  for (EdgeId e = 1; e <= 15; ++e) {
    if (ends[e].size() != 2) throw GraphError("edge " + std::to_string(e) + " is not on two vertices");
    g.add_edge_with_id(e, ends[e][0], ends[e][1]);
  }
  return g;
}

/// The six-cycle basis of the Maclane counterexample.
inline std::vector<EdgeSet> petersen_basis() {
  auto p = petersen_pentagons();
  return {p[0], p[2], p[4], p[5], p[7], p[11]};  // c1, c3, c5, c6, c8, c12
}

/// A 46-vertex planar cubic bridgeless graph built from three 15-vertex
/// fragments arranged around a hub, in the classical three-fragment pattern:
/// each fragment is a pentagonal prism with three boundary contacts and an
/// internal chord. Validity rests on structural checks, not on matching any
/// particular drawing.
inline EmbeddedGraph tutte_like() {
  // Fragment-local ids: 1..5 outer ring, 6..10 inner ring, 11 apex contact,
  // 12/13 side contacts, 14/15 chord ends. Global = local + 15k; hub is 46.
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<VertexId>> faces;
  for (int k = 0; k < 3; ++k) {
    VertexId s = 15 * k;
    auto add = [&](VertexId a, VertexId b) { edges.push_back({a + s, b + s}); };
    add(1, 11); add(11, 2); add(2, 3); add(3, 12); add(12, 4); add(4, 13); add(13, 5); add(5, 1);
    add(1, 6); add(2, 7); add(3, 8); add(4, 9); add(5, 10);
    add(6, 14); add(14, 7); add(7, 8); add(8, 15); add(15, 9); add(9, 10); add(10, 6);
    add(14, 15);
    auto face = [&](std::initializer_list<VertexId> vs) {
      std::vector<VertexId> f;
      for (VertexId v : vs) f.push_back(v + s);
      faces.push_back(f);
    };
    face({2, 3, 8, 7});
    face({5, 1, 6, 10});
    face({1, 11, 2, 7, 14, 6});
    face({3, 12, 4, 9, 15, 8});
    face({4, 13, 5, 10, 9});
    face({14, 7, 8, 15});
    face({14, 15, 9, 10, 6});
  }
  const VertexId hub = 46;
  for (int k = 0; k < 3; ++k) {
    VertexId s = 15 * k, t = 15 * ((k + 1) % 3);
    edges.push_back({hub, 11 + s});
    edges.push_back({12 + s, 13 + t});
    faces.push_back({hub, 11 + s, 2 + s, 3 + s, 12 + s, 13 + t, 5 + t, 1 + t, 11 + t});
  }
  faces.push_back({12, 4, 13, 42, 34, 43, 27, 19, 28});

  EmbeddedGraph out;
  out.graph = build_graph(edges);
  out.rot = rotation_from_faces(out.graph, faces);
  return out;
}

}  // namespace fourcolor::fixtures
