#pragma once

#include <array>

#include "fourcolor/rotation.hpp"

namespace fourcolor {

/// Ties the biquadratic graph to its cubic source: B2 vertices carry the ids
/// of H's edges, and every B2 edge belongs to exactly one base triangle,
/// tagged with the H vertex (corner) that spawned it.
struct LineCorrespondence {
  std::map<VertexId, std::array<EdgeId, 3>> base_triangle_edges;  // H vertex -> B2 edge triple
  std::map<EdgeId, VertexId> corner_of_b2_edge;                   // B2 edge -> H vertex
};

struct LineGraphResult {
  MultiGraph graph;     // B2; vertex ids equal H's edge ids
  RotationSystem rotation;
  LineCorrespondence corr;
};

/// Biquadratic (line) graph of an embedded cubic graph, with the embedding
/// inherited from the rotation of H: around the midpoint of edge e the four
/// line edges appear in the order (next, prev) at one end, (next, prev) at
/// the other.
inline LineGraphResult line_graph(const MultiGraph& h, const RotationSystem& rot) {
  if (!h.is_cubic()) throw GraphError("line_graph expects a cubic graph");
  rot.validate(h);

  LineGraphResult out;
  for (EdgeId e : h.edge_ids()) out.graph.add_vertex_with_id(e);

  // One triangle per H vertex; lookup (corner, {e,f}) -> B2 edge id.
  std::map<VertexId, std::map<std::pair<EdgeId, EdgeId>, EdgeId>> at_corner;
  for (VertexId v : h.vertex_ids()) {
    const auto& cyc = rot.at(v);
    std::array<EdgeId, 3> tri{};
    for (int i = 0; i < 3; ++i) {
      EdgeId a = cyc[i], b = cyc[(i + 1) % 3];
      EdgeId id = out.graph.add_edge(a, b);
      tri[i] = id;
      at_corner[v][std::minmax(a, b)] = id;
      out.corr.corner_of_b2_edge[id] = v;
    }
    out.corr.base_triangle_edges[v] = tri;
  }

  for (EdgeId e : h.edge_ids()) {
    auto [u, w] = h.endpoints(e);
    auto pick = [&](VertexId v, EdgeId other) { return at_corner.at(v).at(std::minmax(e, other)); };
    std::vector<EdgeId> order{pick(u, rot.successor(u, e)), pick(u, rot.predecessor(u, e)),
                              pick(w, rot.successor(w, e)), pick(w, rot.predecessor(w, e))};
    out.rotation.set(e, std::move(order));
  }

  if (out.graph.num_edges() != 2 * h.num_edges())
    throw GraphError("line graph edge count is off");
  for (VertexId v : out.graph.vertex_ids())
    if (out.graph.degree(v) != 4) throw GraphError("line graph of a cubic graph must be 4-regular");
  return out;
}

/// The boolean incidence-matrix product with xor arithmetic, kept as a
/// cross-check only: it drops parallel adjacencies (1+1=0) and clears the
/// diagonal, so it matches the embedding-based construction on simple graphs.
inline std::map<EdgeId, std::set<EdgeId>> line_graph_xor_adjacency(const MultiGraph& h) {
  std::map<EdgeId, std::set<EdgeId>> out;
  for (EdgeId e : h.edge_ids()) {
    auto [a, b] = h.endpoints(e);
    for (EdgeId f : h.edge_ids()) {
      if (e == f) continue;
      auto [c, d] = h.endpoints(f);
      int shared = 0;
      for (VertexId v : {a, b}) shared += (v == c) + (v == d);
      if (shared % 2 == 1) out[e].insert(f);
    }
  }
  return out;
}

/// The eight count identities tying G', H and B2 together.
struct CorrespondenceLedger {
  bool edges_match;            // m(G') == m(H)
  bool triangles_match;        // faces(G') == n(H)
  bool vertices_match;         // n(G') == faces(H)
  bool b2_vertices_match;      // n(B2) == m(H)
  bool base_triangles_match;   // base triangles(B2) == n(H)
  bool nonbase_faces_match;    // non-base faces(B2) == faces(H), sizes included
  bool total_faces_match;      // faces(B2) == n(H) + faces(H)
  bool b2_edges_match;         // m(B2) == 3 n(H) == 2 m(H)

  bool all() const {
    return edges_match && triangles_match && vertices_match && b2_vertices_match &&
           base_triangles_match && nonbase_faces_match && total_faces_match && b2_edges_match;
  }
};

inline CorrespondenceLedger correspondence_ledger(const MultiGraph& gprime, const RotationSystem& rotg,
                                                  const MultiGraph& h, const RotationSystem& roth,
                                                  const LineGraphResult& b2) {
  CorrespondenceLedger led{};
  auto faces_g = trace_faces(gprime, rotg);
  auto faces_h = trace_faces(h, roth);
  auto faces_b = trace_faces(b2.graph, b2.rotation);

  led.edges_match = gprime.num_edges() == h.num_edges();
  led.triangles_match = faces_g.size() == h.num_vertices();
  led.vertices_match = gprime.num_vertices() == faces_h.size();
  led.b2_vertices_match = b2.graph.num_vertices() == h.num_edges();
  led.base_triangles_match = b2.corr.base_triangle_edges.size() == h.num_vertices();

  // Split B2 faces into base triangles (all three edges from one corner) and
  // the rest; the rest must reproduce H's face length multiset.
  std::multiset<std::size_t> h_sizes, nonbase_sizes;
  for (const Face& f : faces_h) h_sizes.insert(f.length());
  std::size_t base_count = 0;
  for (const Face& f : faces_b) {
    bool base = f.length() == 3;
    if (base) {
      VertexId corner = b2.corr.corner_of_b2_edge.at(f.darts[0].edge);
      for (const Dart& d : f.darts)
        if (b2.corr.corner_of_b2_edge.at(d.edge) != corner) base = false;
    }
    if (base)
      ++base_count;
    else
      nonbase_sizes.insert(f.length());
  }
  led.nonbase_faces_match = base_count == h.num_vertices() && nonbase_sizes == h_sizes;
  led.total_faces_match = faces_b.size() == h.num_vertices() + faces_h.size();
  led.b2_edges_match = b2.graph.num_edges() == 3 * h.num_vertices() &&
                       b2.graph.num_edges() == 2 * h.num_edges();
  return led;
}

}  // namespace fourcolor
