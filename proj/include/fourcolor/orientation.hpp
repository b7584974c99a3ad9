#pragma once

#include "fourcolor/coloring.hpp"
#include "fourcolor/dual.hpp"

namespace fourcolor {

/// +1 when a triangle's edge colors read R -> B -> G along the face-tracing
/// direction (the fixed clockwise convention of this embedding), -1 when they
/// read against it.
struct TriangleOrientation {
  std::vector<int> sign;  // by face index of the triangulation's trace
};

/// Moves an edge coloring across the edge bijection of a dual correspondence.
inline EdgeColoring transfer_edge_coloring(const DualCorrespondence& corr,
                                           const EdgeColoring& dual_coloring) {
  EdgeColoring out;
  for (const auto& [primal, dual] : corr.primal_to_dual_edge) out.set(primal, dual_coloring.at(dual));
  return out;
}

inline TriangleOrientation triangle_orientations(const MultiGraph& g, const RotationSystem& rot,
                                                 const EdgeColoring& coloring) {
  TriangleOrientation out;
  for (const Face& f : trace_faces(g, rot)) {
    if (f.length() != 3) throw GraphError("orientation expects a triangulation");
    KleinColor a = coloring.at(f.darts[0].edge);
    KleinColor b = coloring.at(f.darts[1].edge);
    KleinColor c = coloring.at(f.darts[2].edge);
    if (!proper_vertex_triple(a, b, c)) {
      std::string face_text;
      for (VertexId v : f.vertices()) face_text += " " + std::to_string(v);
      throw GraphError("invalid coloring: triangle without all three colors:" + face_text);
    }
    out.sign.push_back(next_edge_color(a) == b ? +1 : -1);
  }
  return out;
}

struct HeawoodReport {
  std::map<VertexId, int> vertex_residue;  // mod 3, normalized to 0..2
  int global_residue = 0;                  // mod 4, normalized to 0..3

  bool all_zero() const {
    if (global_residue != 0) return false;
    for (const auto& [v, r] : vertex_residue)
      if (r != 0) return false;
    return true;
  }
};

inline std::map<VertexId, std::vector<std::size_t>> vertex_face_incidence(
    const std::vector<Face>& faces) {
  std::map<VertexId, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (VertexId v : faces[i].vertices()) out[v].push_back(i);
  return out;
}

/// Per-vertex sums of incident triangle signs mod 3 and the global sum mod 4.
/// Proper colorings yield all zeros; non-zero residues are reported, never
/// thrown.
inline HeawoodReport heawood_check(const TriangleOrientation& orient,
                                   const std::map<VertexId, std::vector<std::size_t>>& incidence) {
  HeawoodReport report;
  long total = 0;
  for (int s : orient.sign) total += s;
  report.global_residue = static_cast<int>(((total % 4) + 4) % 4);
  for (const auto& [v, faces] : incidence) {
    long sum = 0;
    for (std::size_t f : faces) sum += orient.sign.at(f);
    report.vertex_residue[v] = static_cast<int>(((sum % 3) + 3) % 3);
  }
  return report;
}

struct ColoredRotationResult {
  RotationSystem rotation;   // per vertex: its R, B, G edges in that order
  std::vector<Face> walks;   // induced closed walks; lengths are all = 0 mod 3
};

/// The colored rotation: every vertex cycles through its red, blue, green
/// edge. Along any induced walk the colors repeat R, B, G, so each walk's
/// length is divisible by three and every edge occurs twice, once per
/// direction.
inline ColoredRotationResult colored_rotation(const MultiGraph& h, const EdgeColoring& coloring) {
  if (!h.is_cubic()) throw GraphError("colored_rotation expects a cubic graph");
  ColoredRotationResult out;
  for (VertexId v : h.vertex_ids()) {
    std::vector<EdgeId> cyc(3, -1);
    for (EdgeId e : h.incident(v)) {
      int slot = code(coloring.at(e)) - 1;
      if (slot < 0 || cyc[slot] != -1)
        throw GraphError("coloring is not proper at vertex " + std::to_string(v));
      cyc[slot] = e;
    }
    out.rotation.set(v, std::move(cyc));
  }
  out.walks = trace_faces(h, out.rotation);
  return out;
}

}  // namespace fourcolor
