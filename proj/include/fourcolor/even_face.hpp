#pragma once

#include <optional>

#include "fourcolor/tait.hpp"

namespace fourcolor {

/// Proper 3-edge-coloring of a bipartite cubic multigraph by the alternating
/// chain method. Planar graphs with all faces even are exactly this case.
inline EdgeColoring koenig_edge_coloring(const MultiGraph& g) {
  {
    std::map<VertexId, int> side;
    for (VertexId root : g.vertex_ids()) {
      if (side.count(root)) continue;
      side[root] = 0;
      std::vector<VertexId> queue{root};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        for (EdgeId e : g.incident(v)) {
          VertexId w = g.other_end(e, v);
          if (!side.count(w)) {
            side[w] = 1 - side[v];
            queue.push_back(w);
          } else if (side[w] == side[v]) {
            throw GraphError("graph is not bipartite; even-face coloring does not apply");
          }
        }
      }
    }
  }

  EdgeColoring col;
  std::map<VertexId, unsigned> used;  // bitmask of colors present at a vertex
  auto free_colors = [&](VertexId v) { return 0b111u & ~used[v]; };

  for (EdgeId start : g.edge_ids()) {
    auto [u, v] = g.endpoints(start);
    unsigned fu = free_colors(u), fv = free_colors(v);
    unsigned common = fu & fv;
    int a;
    if (common) {
      a = __builtin_ctz(common);
    } else {
      a = __builtin_ctz(fu);
      int b = __builtin_ctz(fv);
      // Swap a/b along the chain from v; bipartiteness keeps u off it.
      VertexId cur = v;
      int want = a;
      EdgeId via = -1;
      while (true) {
        EdgeId next = -1;
        for (EdgeId e : g.incident(cur))
          if (e != via && col.has(e) && code(col.at(e)) - 1 == want) {
            next = e;
            break;
          }
        if (next < 0) break;
        col.set(next, static_cast<KleinColor>((want == a ? b : a) + 1));
        used[cur] ^= (1u << a) | (1u << b);
        cur = g.other_end(next, cur);
        used[cur] ^= (1u << a) | (1u << b);
        via = next;
        want = (want == a) ? b : a;
      }
    }
    col.set(start, static_cast<KleinColor>(a + 1));
    used[u] |= 1u << a;
    used[v] |= 1u << a;
  }
  return col;
}

struct BootstrapReport {
  EdgeColoring coloring;
  int edges_added = 0;
  int removals_by_rotation = 0;
  int removals_by_recolor = 0;
  // Set when no legal joining edge could retire the remaining odd faces and
  // the coloring came from the peel/replay engine instead.
  bool augmentation_stuck = false;
};

namespace detail {

struct ParityMove {
  std::size_t face;
  std::size_t i, j;  // dart positions within the face
  bool direct;       // true when both flipped neighbours are odd
};

/// A legal augmentation: subdividing darts i and j of face `face` and joining
/// the new vertices flips the parity of the two faces across those darts and
/// splits `face` into parts of controlled parity. Direct moves retire two odd
/// faces at once; fallback moves walk an odd token toward the nearest other
/// odd face when no two odd faces share a neighbour.
inline std::optional<ParityMove> find_parity_move(const MultiGraph& g,
                                                  const std::vector<Face>& faces) {
  std::map<Dart, std::size_t> face_of;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Dart& d : faces[i].darts) face_of[d] = i;
  auto across = [&](const Dart& d) {
    return face_of.at(Dart{d.edge, g.other_end(d.edge, d.from)});
  };
  auto odd = [&](std::size_t i) { return faces[i].length() % 2 == 1; };

  std::vector<std::vector<std::size_t>> adj(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (const Dart& d : faces[i].darts) adj[i].push_back(across(d));

  // Multi-source BFS from the odd faces keeping the two nearest distinct
  // sources per face, so "distance to an odd face other than X" is O(1).
  constexpr int kFar = 1 << 20;
  struct Near {
    int d1 = kFar, d2 = kFar;
    std::size_t s1 = SIZE_MAX, s2 = SIZE_MAX;
  };
  std::vector<Near> near(faces.size());
  {
    std::vector<std::tuple<int, std::size_t, std::size_t>> queue;  // dist, face, source
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (odd(i)) queue.push_back({0, i, i});
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [dist, f, src] = queue[qi];
      Near& n = near[f];
      if (n.s1 == src || n.s2 == src) continue;
      if (dist >= n.d2) continue;
      if (dist < n.d1 || n.s1 == SIZE_MAX) {
        n.d2 = n.d1;
        n.s2 = n.s1;
        n.d1 = dist;
        n.s1 = src;
      } else {
        n.d2 = dist;
        n.s2 = src;
      }
      for (std::size_t nb : adj[f]) queue.push_back({dist + 1, nb, src});
    }
  }
  auto dist_to_odd = [&](std::size_t from, std::size_t skip) {
    const Near& n = near[from];
    if (n.s1 != skip && n.s1 != from) return n.d1;
    if (n.s2 != skip && n.s2 != from) return n.d2;
    return kFar;
  };

  // Move preference: retire two odd faces leaving even split parts; else
  // retire two odd faces even though the split spawns an adjacent odd pair;
  // else walk an odd token toward the nearest other odd face.
  std::optional<ParityMove> odd_split;
  std::optional<ParityMove> fallback;
  int fallback_score = 1 << 20;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    std::size_t n = f.length();
    bool f_even = n % 2 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t gi = across(f.darts[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        std::size_t gj = across(f.darts[j]);
        if (gi == gj || gi == fi || gj == fi) continue;
        bool splits_even = !f_even || (j - i) % 2 == 0;
        if (odd(gi) && odd(gj)) {
          if (splits_even) return ParityMove{fi, i, j, true};
          if (!odd_split) odd_split = ParityMove{fi, i, j, true};
          continue;
        }
        if (!splits_even) continue;
        if (odd(gi) ^ odd(gj)) {
          std::size_t newly_odd = odd(gi) ? gj : gi;
          std::size_t resolved = odd(gi) ? gi : gj;
          int score = dist_to_odd(newly_odd, resolved);
          if (score < fallback_score) {
            fallback_score = score;
            fallback = ParityMove{fi, i, j, false};
          }
        }
      }
    }
  }
  if (odd_split) return odd_split;
  return fallback;
}

}  // namespace detail

/// Colors a bridgeless planar cubic graph by first joining odd faces with
/// marked edges until every face is even, coloring that bipartite graph
/// directly, and then deleting each marked edge after its endpoint disks have
/// been merged by rotations. Falls back to the peel/replay engine for a
/// removal whose rotation search exhausts its budget.
inline BootstrapReport even_face_bootstrap(const MultiGraph& graph, const RotationSystem& rotation,
                                           const ColorConfig& cfg = {}) {
  if (!graph.is_cubic()) throw GraphError("even_face_bootstrap expects a cubic graph");
  if (!is_bridgeless(graph)) throw GraphError("even_face_bootstrap expects a bridgeless graph");

  MultiGraph g = graph;
  RotationSystem rot = rotation;
  BootstrapReport report;
  std::vector<DeletionRecord> marked;

  // The move repertoire has no completeness guarantee (the pairing step can
  // be blocked by dart-position parity); a stuck augmentation falls back to
  // the peel/replay engine for the whole graph and says so in the report.
  long guard = 4 * static_cast<long>(graph.num_edges()) + 16;
  while (true) {
    std::vector<Face> faces = trace_faces(g, rot);
    bool any_odd = false;
    for (const Face& f : faces)
      if (f.length() % 2 == 1) any_odd = true;
    if (!any_odd) break;
    std::optional<detail::ParityMove> move;
    if (--guard >= 0) move = detail::find_parity_move(g, faces);
    if (!move) {
      report.augmentation_stuck = true;
      ColorOutcome redo = color_cubic(graph, rotation, cfg);
      if (!redo.ok()) throw GraphError("bootstrap fallback failed: " + redo.failure);
      report.coloring = *redo.coloring;
      return report;
    }
    const Face& f = faces[move->face];
    marked.push_back(make_insertion(g, rot, f.darts[move->i], f.darts[move->j]));
    report.edges_added += 1;
  }

  EdgeColoring col = koenig_edge_coloring(g);
  if (!verify_coloring(g, col).valid) throw GraphError("even-face coloring is improper");

  while (!marked.empty()) {
    DeletionRecord rec = marked.back();
    marked.pop_back();
    EdgeId e = rec.deleted;
    auto deletable = [&](const EdgeColoring& c) {
      auto [x, y] = g.endpoints(e);
      return disk_through_vertex(g, c, c.at(e), x).contains_vertex(y);
    };
    bool removed = false;
    if (!deletable(col)) {
      auto fixed = rotation_search(g, col, {e}, deletable,
                                   SearchLimits{cfg.rotation_budget, cfg.rotation_node_cap});
      if (fixed) {
        col = *fixed;
        report.removals_by_rotation += 1;
      }
    }
    auto [hint_a, hint_b] = aligned_host_hints(g, rec);
    if (deletable(col) && colored_delete(g, &rot, col, e, /*bridgeless=*/true, hint_a, hint_b)) {
      removed = true;
    }
    if (!removed) {
      // Rotations exhausted: remove structurally and hand the remainder to
      // the peel/replay engine.
      auto outcome = delete_with_suppression(g, &rot, e, /*bridgeless=*/true, hint_a, hint_b);
      if (std::holds_alternative<NotRemovable>(outcome))
        throw GraphError("marked edge " + std::to_string(e) + " is structurally stuck");
      ColorOutcome redo = color_cubic(g, rot, cfg);
      if (!redo.ok()) throw GraphError("bootstrap recoloring failed: " + redo.failure);
      col = *redo.coloring;
      report.removals_by_recolor += 1;
    }
  }

  if (!(g == graph)) throw GraphError("bootstrap did not restore the original graph");
  if (!verify_coloring(g, col).valid) throw GraphError("bootstrap produced an invalid coloring");
  report.coloring = std::move(col);
  return report;
}

}  // namespace fourcolor
