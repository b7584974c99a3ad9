#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourcolor/edgeset.hpp"
#include "fourcolor/klein.hpp"
#include "fourcolor/multigraph.hpp"

namespace fourcolor {

/// Total assignment edge -> {R,B,G}. W never appears in a proper coloring;
/// verify_coloring flags it like any other violation.
struct EdgeColoring {
  std::map<EdgeId, KleinColor> color;

  KleinColor at(EdgeId e) const {
    auto it = color.find(e);
    if (it == color.end()) throw GraphError("edge " + std::to_string(e) + " is uncolored");
    return it->second;
  }

  bool has(EdgeId e) const { return color.count(e) != 0; }
  void set(EdgeId e, KleinColor c) { color[e] = c; }

  /// Edges of color c (the 1-factor X_f when the coloring is proper).
  EdgeSet color_class(KleinColor c) const {
    EdgeSet out;
    for (const auto& [e, col] : color)
      if (col == c) out.insert(e);
    return out;
  }

  bool operator==(const EdgeColoring&) const = default;
};

struct ColoringViolation {
  VertexId vertex;
  std::string reason;
};

struct ColoringVerdict {
  bool valid = false;
  std::vector<ColoringViolation> violations;
};

/// Proper at a cubic vertex = its three edge ends carry three distinct
/// non-white colors. Uncolored edges are reported per vertex.
inline ColoringVerdict verify_coloring(const MultiGraph& g, const EdgeColoring& coloring) {
  ColoringVerdict verdict;
  for (VertexId v : g.vertex_ids()) {
    const auto& inc = g.incident(v);
    if (inc.size() != 3) {
      verdict.violations.push_back({v, "vertex is not cubic"});
      continue;
    }
    bool uncolored = false;
    for (EdgeId e : inc)
      if (!coloring.has(e)) {
        verdict.violations.push_back({v, "uncolored edge " + std::to_string(e)});
        uncolored = true;
      }
    if (uncolored) continue;
    KleinColor a = coloring.at(inc[0]);
    KleinColor b = coloring.at(inc[1]);
    KleinColor c = coloring.at(inc[2]);
    if (!proper_vertex_triple(a, b, c))
      verdict.violations.push_back({v, "incident colors are not {R,B,G}"});
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

/// Spanning 2-regular subgraph owned by color c: all edges NOT colored c.
/// Its cycles alternate the two other colors.
struct TwoFactor {
  KleinColor owner;
  EdgeSet edges;
};

inline TwoFactor two_factor(const MultiGraph& g, const EdgeColoring& coloring, KleinColor c) {
  TwoFactor tf;
  tf.owner = c;
  for (EdgeId e : g.edge_ids())
    if (coloring.at(e) != c) tf.edges.insert(e);
  return tf;
}

/// One cycle of a 2-factor. Edges and vertices are aligned: edges[i] joins
/// vertices[i] and vertices[(i+1) % size].
struct Disk {
  KleinColor owner;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  std::size_t length() const { return edges.size(); }

  bool contains_edge(EdgeId e) const {
    for (EdgeId d : edges)
      if (d == e) return true;
    return false;
  }

  bool contains_vertex(VertexId v) const {
    for (VertexId u : vertices)
      if (u == v) return true;
    return false;
  }

  /// Stable identity for visited-set bookkeeping in searches.
  std::pair<KleinColor, EdgeId> key() const {
    EdgeId least = edges.front();
    for (EdgeId e : edges) least = std::min(least, e);
    return {owner, least};
  }
};

namespace detail {

/// Canonical walk of the cycle through `start` inside the 2-regular edge set.
inline Disk walk_disk(const MultiGraph& g, const EdgeSet& tf, KleinColor owner, EdgeId start) {
  Disk disk;
  disk.owner = owner;
  auto [sv, sw] = g.endpoints(start);
  VertexId anchor = std::min(sv, sw);
  VertexId cur = anchor;
  EdgeId via = start;
  do {
    disk.vertices.push_back(cur);
    disk.edges.push_back(via);
    cur = g.other_end(via, cur);
    EdgeId next = -1;
    for (EdgeId e : g.incident(cur))
      if (e != via && tf.contains(e)) {
        next = e;
        break;
      }
    if (next < 0) throw GraphError("edge set is not 2-regular at vertex " + std::to_string(cur));
    via = next;
  } while (cur != anchor);
  // Canonical form: rotate so the smallest edge comes first.
  std::size_t best = 0;
  for (std::size_t i = 1; i < disk.edges.size(); ++i)
    if (disk.edges[i] < disk.edges[best]) best = i;
  std::rotate(disk.edges.begin(), disk.edges.begin() + best, disk.edges.end());
  std::rotate(disk.vertices.begin(), disk.vertices.begin() + best, disk.vertices.end());
  return disk;
}

}  // namespace detail

/// Decomposes a 2-factor into its disks. Every disk must have even length;
/// an odd cycle means the coloring upstream is corrupt.
inline std::vector<Disk> disks(const MultiGraph& g, const TwoFactor& tf) {
  std::vector<Disk> out;
  std::set<EdgeId> seen;
  for (EdgeId e : tf.edges) {
    if (seen.count(e)) continue;
    Disk d = detail::walk_disk(g, tf.edges, tf.owner, e);
    for (EdgeId de : d.edges) seen.insert(de);
    if (d.length() % 2 != 0)
      throw GraphError("corrupt coloring: odd disk of length " + std::to_string(d.length()));
    out.push_back(std::move(d));
  }
  return out;
}

/// The disk of the c-owned 2-factor passing through edge e (requires e not
/// colored c). Cheaper than a full decomposition.
inline Disk disk_through(const MultiGraph& g, const EdgeColoring& coloring, KleinColor owner, EdgeId e) {
  if (coloring.at(e) == owner)
    throw GraphError("edge " + std::to_string(e) + " is not in the 2-factor of its own color");
  TwoFactor tf = two_factor(g, coloring, owner);
  Disk d = detail::walk_disk(g, tf.edges, owner, e);
  if (d.length() % 2 != 0)
    throw GraphError("corrupt coloring: odd disk of length " + std::to_string(d.length()));
  return d;
}

/// The c-owned disk through vertex v (every vertex lies on exactly one).
inline Disk disk_through_vertex(const MultiGraph& g, const EdgeColoring& coloring, KleinColor owner,
                                VertexId v) {
  for (EdgeId e : g.incident(v))
    if (coloring.at(e) != owner) return disk_through(g, coloring, owner, e);
  throw GraphError("no 2-factor edge at vertex " + std::to_string(v));
}

/// Swaps the two alternating colors along a disk; an involution that leaves
/// every other edge untouched. Rejects disks stale under the given coloring.
inline EdgeColoring rotate_disk(const EdgeColoring& coloring, const Disk& disk) {
  KleinColor a = coloring.at(disk.edges[0]);
  if (a == disk.owner || a == kWhite) throw GraphError("stale disk: colors no longer alternate");
  KleinColor b = third_edge_color(a, disk.owner);
  EdgeColoring out = coloring;
  for (std::size_t i = 0; i < disk.edges.size(); ++i) {
    KleinColor expect = (i % 2 == 0) ? a : b;
    if (coloring.at(disk.edges[i]) != expect) throw GraphError("stale disk: colors no longer alternate");
    out.set(disk.edges[i], expect == a ? b : a);
  }
  return out;
}

}  // namespace fourcolor
