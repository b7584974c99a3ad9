#pragma once

#include <random>

#include "fourcolor/fixtures.hpp"
#include "fourcolor/rotation.hpp"

namespace fourcolor {

/// Seeded random maximal planar graph on n vertices: grow an embedded
/// triangulation by placing vertices into random faces, then mix with random
/// diagonal flips. Every face, the outer one included, stays a triangle.
inline fixtures::EmbeddedGraph random_maximal_planar(int n, std::uint64_t seed, int flips = -1) {
  if (n < 4) throw GraphError("random triangulations start at four vertices");
  std::mt19937_64 rng(seed);
  fixtures::EmbeddedGraph out = fixtures::k4();
  MultiGraph& g = out.graph;
  RotationSystem& rot = out.rot;

  while (static_cast<int>(g.num_vertices()) < n) {
    std::vector<Face> faces = trace_faces(g, rot);
    const Face& f = faces[rng() % faces.size()];
    VertexId a = f.darts[0].from, b = f.darts[1].from, c = f.darts[2].from;
    VertexId w = g.add_vertex();
    EdgeId fa = g.add_edge(w, a);
    EdgeId fb = g.add_edge(w, b);
    EdgeId fc = g.add_edge(w, c);
    rot.set(w, {fa, fc, fb});
    rot.insert_after(a, f.darts[2].edge, fa);
    rot.insert_after(b, f.darts[0].edge, fb);
    rot.insert_after(c, f.darts[1].edge, fc);
  }

  if (flips < 0) flips = 4 * n;
  for (int i = 0; i < flips; ++i) {
    std::vector<EdgeId> ids = g.edge_ids();
    EdgeId e = ids[rng() % ids.size()];
    auto [a, b] = g.endpoints(e);
    if (g.degree(a) <= 3 || g.degree(b) <= 3) continue;  // keep the graph simple and 3-connected

    std::vector<Face> faces = trace_faces(g, rot);
    const Face *f1 = nullptr, *f2 = nullptr;
    for (const Face& f : faces)
      if (f.contains_edge(e)) {
        if (!f1)
          f1 = &f;
        else
          f2 = &f;
      }
    if (!f1 || !f2) continue;
    auto third = [&](const Face& f) {
      for (const Dart& d : f.darts)
        if (d.from != a && d.from != b) return d;
      throw GraphError("triangle face without a third corner");
    };
    Dart dc = third(*f1);  // c -> x
    Dart dd = third(*f2);  // d -> y
    VertexId c = dc.from, d = dd.from;
    if (c == d || g.adjacent(c, d)) continue;

    // Arrival edges at c and d within their faces anchor the new diagonal.
    auto arriving = [&](const Face& f, VertexId v) {
      for (std::size_t k = 0; k < f.darts.size(); ++k)
        if (f.darts[(k + 1) % f.darts.size()].from == v) return f.darts[k].edge;
      throw GraphError("face corner not found");
    };
    EdgeId at_c = arriving(*f1, c);
    EdgeId at_d = arriving(*f2, d);
    g.remove_edge(e);
    rot.remove(a, e);
    rot.remove(b, e);
    EdgeId diag = g.add_edge(c, d);
    rot.insert_after(c, at_c, diag);
    rot.insert_after(d, at_d, diag);
  }

  std::vector<Face> faces = trace_faces(g, rot);
  if (!euler_planarity_check(g, faces)) throw GraphError("generator lost planarity");
  for (const Face& f : faces)
    if (f.length() != 3) throw GraphError("generator produced a non-triangular face");
  return out;
}

}  // namespace fourcolor
