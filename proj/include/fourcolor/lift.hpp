#pragma once

#include <array>

#include "fourcolor/coloring.hpp"
#include "fourcolor/dual.hpp"

namespace fourcolor {

/// Assignment face -> Klein color, indexed by the face order of trace_faces,
/// with the designated rim face. Adjacent faces differ because every edge
/// color is non-white and color(F1) + color(F2) = edgecolor(e).
struct FaceColoring {
  std::vector<KleinColor> color;  // by face index
  std::size_t rim = 0;

  bool operator==(const FaceColoring&) const = default;
};

/// Breadth-first lift from the rim: the rim face takes W and crossing edge e
/// adds edgecolor(e). Every non-tree edge re-checks the identity; a conflict
/// certifies an invalid coloring or a non-spherical embedding.
inline FaceColoring lift_face_coloring(const MultiGraph& g, const RotationSystem& rot,
                                       const EdgeColoring& coloring, std::size_t rim) {
  std::vector<Face> faces = trace_faces(g, rot);
  if (rim >= faces.size()) throw GraphError("rim face index out of range");

  std::map<EdgeId, std::vector<std::size_t>> sides;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Dart& d : faces[i].darts) sides[d.edge].push_back(i);

  FaceColoring fc;
  fc.rim = rim;
  fc.color.assign(faces.size(), kWhite);
  std::vector<bool> done(faces.size(), false);
  std::vector<std::size_t> queue{rim};
  done[rim] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t f = queue[qi];
    for (const Dart& d : faces[f].darts) {
      const auto& s = sides.at(d.edge);
      std::size_t other = s[0] == f ? s[1] : s[0];
      KleinColor want = klein_add(fc.color[f], coloring.at(d.edge));
      if (!done[other]) {
        fc.color[other] = want;
        done[other] = true;
        queue.push_back(other);
      } else if (fc.color[other] != want) {
        throw GraphError("lift failure at edge " + std::to_string(d.edge) +
                         ": face colors are inconsistent");
      }
    }
  }
  return fc;
}

/// Adds c to every face color; a Klein shift preserves adjacency-properness.
inline FaceColoring shift_face_coloring(const FaceColoring& fc, KleinColor c) {
  FaceColoring out = fc;
  for (KleinColor& x : out.color) x = klein_add(x, c);
  return out;
}

/// Vertex coloring of the primal graph: each vertex takes the color of its
/// dual face.
inline std::map<VertexId, KleinColor> lift_vertex_coloring(const DualCorrespondence& corr,
                                                           const FaceColoring& fc) {
  std::map<VertexId, KleinColor> out;
  for (const auto& [v, face] : corr.vertex_to_dual_face) {
    if (face >= fc.color.size()) throw GraphError("face coloring does not cover the dual face");
    out[v] = fc.color[face];
  }
  return out;
}

/// Membership coefficients a_{i,j}: face i belongs to the face-basis
/// decomposition of the j-th colored 2-factor, computed by parity flips from
/// the rim. The W column is identically zero. Exposed as a derived report.
struct FaceCoefficients {
  std::vector<std::array<int, 4>> a;  // per face: [R, B, G, W]
  std::size_t rim = 0;
};

inline FaceCoefficients face_coefficients(const MultiGraph& g, const RotationSystem& rot,
                                          const EdgeColoring& coloring, std::size_t rim) {
  std::vector<Face> faces = trace_faces(g, rot);
  if (rim >= faces.size()) throw GraphError("rim face index out of range");
  std::map<EdgeId, std::vector<std::size_t>> sides;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Dart& d : faces[i].darts) sides[d.edge].push_back(i);

  FaceCoefficients out;
  out.rim = rim;
  out.a.assign(faces.size(), {0, 0, 0, 0});
  for (int ci = 0; ci < 3; ++ci) {
    KleinColor owner = kEdgeColors[ci];
    std::vector<int> parity(faces.size(), -1);
    parity[rim] = 0;
    std::vector<std::size_t> queue{rim};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t f = queue[qi];
      for (const Dart& d : faces[f].darts) {
        const auto& s = sides.at(d.edge);
        std::size_t other = s[0] == f ? s[1] : s[0];
        int want = parity[f] ^ (coloring.at(d.edge) != owner ? 1 : 0);
        if (parity[other] < 0) {
          parity[other] = want;
          queue.push_back(other);
        } else if (parity[other] != want) {
          throw GraphError("2-factor is not a cycle-space element");
        }
      }
    }
    for (std::size_t i = 0; i < faces.size(); ++i) out.a[i][ci] = parity[i];
  }
  return out;
}

/// Ring sum of the faces outside every colored decomposition (rim included):
/// the leftover white view W_c.
inline EdgeSet derived_white_view(const MultiGraph& g, const RotationSystem& rot,
                                  const EdgeColoring& coloring, std::size_t rim) {
  FaceCoefficients coef = face_coefficients(g, rot, coloring, rim);
  std::vector<Face> faces = trace_faces(g, rot);
  EdgeSet out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (coef.a[i][0] == 0 && coef.a[i][1] == 0 && coef.a[i][2] == 0) out ^= faces[i].edges();
  return out;
}

/// Complement view of one colored 2-factor over the face basis plus rim;
/// equals the 2-factor itself on any sphere embedding.
inline EdgeSet basis_complement(const MultiGraph& g, const RotationSystem& rot,
                                const EdgeColoring& coloring, std::size_t rim, KleinColor owner) {
  FaceCoefficients coef = face_coefficients(g, rot, coloring, rim);
  std::vector<Face> faces = trace_faces(g, rot);
  int ci = code(owner) - 1;
  if (ci < 0) throw GraphError("white has no 2-factor");
  EdgeSet out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (coef.a[i][ci] == 0) out ^= faces[i].edges();
  return out;
}

}  // namespace fourcolor
