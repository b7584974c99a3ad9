#pragma once

#include <optional>
#include <utility>

#include "fourcolor/coloring.hpp"
#include "fourcolor/rotation.hpp"
#include "fourcolor/surgery.hpp"

namespace fourcolor {

/// Searches for one disk passing through both coupled edges. Same-colored
/// hosts are probed in the two other 2-factors; differently-colored hosts
/// meet only in the third color's 2-factor. Absence is a normal result.
inline std::optional<std::pair<KleinColor, Disk>> find_coupling_disk(const MultiGraph& g,
                                                                     const EdgeColoring& coloring,
                                                                     EdgeId e1, EdgeId e2) {
  KleinColor c1 = coloring.at(e1);
  KleinColor c2 = coloring.at(e2);
  std::vector<KleinColor> owners;
  if (e1 == e2) {
    for (KleinColor c : kEdgeColors)
      if (c != c1) owners.push_back(c);
  } else if (c1 == c2) {
    for (KleinColor c : kEdgeColors)
      if (c != c1) owners.push_back(c);
  } else {
    owners.push_back(third_edge_color(c1, c2));
  }
  for (KleinColor owner : owners) {
    Disk d = disk_through(g, coloring, owner, e1);
    if (e1 == e2 || d.contains_edge(e2)) return std::make_pair(owner, d);
  }
  return std::nullopt;
}

/// Recolors after a structural insertion: the new edge takes the owner color
/// of the coupling disk and the expanded disk is re-alternated over its
/// length+2 edge sequence. The graph must already contain the replayed edges.
inline EdgeColoring colored_insert_recolor(const MultiGraph& g, const EdgeColoring& before,
                                           const DeletionRecord& rec, KleinColor owner) {
  EdgeColoring col = before;
  if (rec.parallel_pattern) {
    KleinColor h = col.at(rec.end_a.host);
    col.color.erase(rec.end_a.host);
    col.set(rec.end_a.edge1, h);
    col.set(rec.end_b.edge1, h);
    col.set(rec.middle, h);
  } else {
    KleinColor ha = col.at(rec.end_a.host);
    KleinColor hb = col.at(rec.end_b.host);
    col.color.erase(rec.end_a.host);
    col.color.erase(rec.end_b.host);
    col.set(rec.end_a.edge1, ha);
    col.set(rec.end_a.edge2, ha);
    col.set(rec.end_b.edge1, hb);
    col.set(rec.end_b.edge2, hb);
  }
  col.set(rec.deleted, owner);

  Disk expanded = disk_through_vertex(g, col, owner, rec.end_a.vertex);
  KleinColor x = col.at(expanded.edges[0]);
  KleinColor y = third_edge_color(x, owner);
  for (std::size_t i = 0; i < expanded.edges.size(); ++i)
    col.set(expanded.edges[i], (i % 2 == 0) ? x : y);
  return col;
}

struct InsertionResult {
  DeletionRecord record;
  EdgeColoring coloring;
};

/// Public insertion: subdivides the two hosts inside a face they share,
/// joins the new vertices by an edge colored with the disk's owner color, and
/// re-alternates that disk. The disk must be a live coupling disk.
inline InsertionResult insert_colored_edge(MultiGraph& g, RotationSystem& rot,
                                           const EdgeColoring& coloring, EdgeId host1, EdgeId host2,
                                           const std::pair<KleinColor, Disk>& coupling) {
  const auto& [owner, disk] = coupling;
  if (!disk.contains_edge(host1) || (host1 != host2 && !disk.contains_edge(host2)))
    throw GraphError("stale disk: it does not pass through the host edges");
  for (EdgeId e : disk.edges)
    if (coloring.at(e) == owner) throw GraphError("stale disk: colors no longer alternate");

  std::optional<Dart> d1, d2;
  for (const Face& f : trace_faces(g, rot)) {
    if (!f.contains_edge(host1) || !f.contains_edge(host2)) continue;
    for (const Dart& d : f.darts) {
      if (d.edge == host1 && !d1) d1 = d;
      if (d.edge == host2 && !d2 && (host1 != host2 || d1)) d2 = d;
    }
    break;
  }
  if (host1 == host2) d2 = d1;
  if (!d1 || !d2)
    throw GraphError("hosts " + std::to_string(host1) + "," + std::to_string(host2) +
                     " do not lie on a common face");
  DeletionRecord rec = make_insertion(g, rot, *d1, *d2);
  EdgeColoring col = colored_insert_recolor(g, coloring, rec, owner);
  return {rec, col};
}

/// Deletes a colored edge while keeping the coloring proper. Requires both
/// endpoints on one disk owned by the edge's color; the shrunk disk is
/// re-alternated. Host id hints restore ids recorded by a prior insertion.
/// Returns nothing (and leaves state untouched) when the disk condition or a
/// structural guard fails.
inline std::optional<DeletionRecord> colored_delete(MultiGraph& g, RotationSystem* rot,
                                                    EdgeColoring& coloring, EdgeId e,
                                                    bool bridgeless_mode = true, EdgeId hint_a = -1,
                                                    EdgeId hint_b = -1) {
  KleinColor owner = coloring.at(e);
  auto [a, b] = g.endpoints(e);
  Disk da = disk_through_vertex(g, coloring, owner, a);
  if (!da.contains_vertex(b)) return std::nullopt;

  MultiGraph backup_g = g;
  std::optional<RotationSystem> backup_rot;
  if (rot) backup_rot = *rot;
  auto outcome = delete_with_suppression(g, rot, e, bridgeless_mode, hint_a, hint_b);
  if (std::holds_alternative<NotRemovable>(outcome)) {
    g = std::move(backup_g);
    if (rot) *rot = std::move(*backup_rot);
    return std::nullopt;
  }
  const DeletionRecord& rec = std::get<DeletionRecord>(outcome);

  EdgeColoring col = coloring;
  col.color.erase(rec.deleted);
  if (rec.parallel_pattern) {
    KleinColor cf = col.at(rec.end_a.edge1);
    col.color.erase(rec.end_a.edge1);
    col.color.erase(rec.end_b.edge1);
    col.color.erase(rec.middle);
    col.set(rec.end_a.host, cf);
  } else {
    KleinColor cfa = col.at(rec.end_a.edge1);
    KleinColor cfb = col.at(rec.end_b.edge1);
    col.color.erase(rec.end_a.edge1);
    col.color.erase(rec.end_a.edge2);
    col.color.erase(rec.end_b.edge1);
    col.color.erase(rec.end_b.edge2);
    col.set(rec.end_a.host, cfa);
    col.set(rec.end_b.host, cfb);
  }
  Disk shrunk = disk_through(g, col, owner, rec.end_a.host);
  KleinColor x = col.at(shrunk.edges[0]);
  KleinColor y = third_edge_color(x, owner);
  for (std::size_t i = 0; i < shrunk.edges.size(); ++i)
    col.set(shrunk.edges[i], (i % 2 == 0) ? x : y);
  coloring = std::move(col);
  return rec;
}

}  // namespace fourcolor
