#pragma once

#include <array>
#include <optional>
#include <variant>

#include "fourcolor/bridges.hpp"
#include "fourcolor/multigraph.hpp"
#include "fourcolor/rotation.hpp"

namespace fourcolor {

/// One suppressed endpoint of a deleted edge: the vertex that vanished, its
/// original cyclic rotation, the two original edges merged away (with the far
/// endpoints they kept), and the host edge the merge produced.
struct SuppressedEnd {
  VertexId vertex = -1;
  std::array<EdgeId, 3> rotation{};
  EdgeId edge1 = -1;
  VertexId far1 = -1;
  EdgeId edge2 = -1;  // unused for the parallel-edge pattern
  VertexId far2 = -1;
  EdgeId host = -1;
};

/// Everything needed to replay the inverse insertion exactly, ids included.
struct DeletionRecord {
  EdgeId deleted = -1;
  bool parallel_pattern = false;  // endpoints were joined by a second edge
  EdgeId middle = -1;             // that second edge (parallel pattern only)
  SuppressedEnd end_a, end_b;

  /// The host edges subdivided by the inverse insertion; equal when the new
  /// edge stands on a single host edge.
  std::pair<EdgeId, EdgeId> hosts() const { return {end_a.host, end_b.host}; }
};

enum class RemovalBlock { SelfLoop, Bridge };

struct NotRemovable {
  RemovalBlock reason;
  EdgeId edge;
};

using DeletionOutcome = std::variant<DeletionRecord, NotRemovable>;

namespace detail {

inline void suppress_end(MultiGraph& g, RotationSystem* rot, SuppressedEnd& end, EdgeId host_hint) {
  VertexId v = end.vertex;
  EdgeId host = host_hint >= 0 ? host_hint : -1;
  g.remove_edge(end.edge1);
  g.remove_edge(end.edge2);
  g.remove_vertex(v);
  end.host = host >= 0 ? g.add_edge_with_id(host, end.far1, end.far2) : g.add_edge(end.far1, end.far2);
  if (rot) {
    rot->replace(end.far1, end.edge1, end.host);
    rot->replace(end.far2, end.edge2, end.host);
    rot->remove_vertex(v);
  }
}

}  // namespace detail

/// Deletes edge e from a cubic graph and suppresses both degree-2 endpoints.
/// The record stores enough to replay the inverse insertion with the original
/// ids. Refuses deletions that would create a self-loop and, when
/// `bridgeless_mode` is set, deletions whose result has a bridge.
/// Host ids are fresh unless hints are given (hints restore prior ids).
inline DeletionOutcome delete_with_suppression(MultiGraph& g, RotationSystem* rot, EdgeId e,
                                               bool bridgeless_mode = true, EdgeId host_hint_a = -1,
                                               EdgeId host_hint_b = -1) {
  auto [a, b] = g.endpoints(e);
  if (g.degree(a) != 3 || g.degree(b) != 3)
    throw GraphError("deletion endpoints must have degree 3 (edge " + std::to_string(e) + ")");

  DeletionRecord rec;
  rec.deleted = e;
  rec.end_a.vertex = a;
  rec.end_b.vertex = b;
  if (rot) {
    const auto& ra = rot->at(a);
    const auto& rb = rot->at(b);
    std::copy(ra.begin(), ra.end(), rec.end_a.rotation.begin());
    std::copy(rb.begin(), rb.end(), rec.end_b.rotation.begin());
  }

  int parallels = g.multiplicity(a, b) - 1;
  if (parallels >= 2) return NotRemovable{RemovalBlock::SelfLoop, e};  // theta pattern

  if (parallels == 1) {
    rec.parallel_pattern = true;
    for (EdgeId f : g.incident(a))
      if (f != e && g.other_end(f, a) == b) rec.middle = f;
    for (EdgeId f : g.incident(a))
      if (f != e && f != rec.middle) {
        rec.end_a.edge1 = f;
        rec.end_a.far1 = g.other_end(f, a);
      }
    for (EdgeId f : g.incident(b))
      if (f != e && f != rec.middle) {
        rec.end_b.edge1 = f;
        rec.end_b.far1 = g.other_end(f, b);
      }
    if (rec.end_a.far1 == rec.end_b.far1) return NotRemovable{RemovalBlock::SelfLoop, e};

    g.remove_edge(e);
    if (rot) {
      rot->remove(a, e);
      rot->remove(b, e);
    }
    // Collapse the path far_a - a - b - far_b into one host edge.
    EdgeId host = host_hint_a >= 0 ? host_hint_a : -1;
    g.remove_edge(rec.end_a.edge1);
    g.remove_edge(rec.middle);
    g.remove_edge(rec.end_b.edge1);
    g.remove_vertex(a);
    g.remove_vertex(b);
    EdgeId h = host >= 0 ? g.add_edge_with_id(host, rec.end_a.far1, rec.end_b.far1)
                         : g.add_edge(rec.end_a.far1, rec.end_b.far1);
    rec.end_a.host = rec.end_b.host = h;
    if (rot) {
      rot->replace(rec.end_a.far1, rec.end_a.edge1, h);
      rot->replace(rec.end_b.far1, rec.end_b.edge1, h);
      rot->remove_vertex(a);
      rot->remove_vertex(b);
    }
  } else {
    auto fill = [&](SuppressedEnd& end, VertexId v) {
      std::vector<EdgeId> others;
      for (EdgeId f : g.incident(v))
        if (f != e) others.push_back(f);
      end.edge1 = others[0];
      end.far1 = g.other_end(others[0], v);
      end.edge2 = others[1];
      end.far2 = g.other_end(others[1], v);
    };
    fill(rec.end_a, a);
    fill(rec.end_b, b);
    if (rec.end_a.far1 == rec.end_a.far2 || rec.end_b.far1 == rec.end_b.far2)
      return NotRemovable{RemovalBlock::SelfLoop, e};

    g.remove_edge(e);
    if (rot) {
      rot->remove(a, e);
      rot->remove(b, e);
    }
    detail::suppress_end(g, rot, rec.end_a, host_hint_a);
    detail::suppress_end(g, rot, rec.end_b, host_hint_b);
  }

  if (bridgeless_mode && !is_bridgeless(g)) return NotRemovable{RemovalBlock::Bridge, e};
  return rec;
}

/// Non-mutating probe: returns the record the deletion would produce.
inline DeletionOutcome probe_deletion(const MultiGraph& g, const RotationSystem* rot, EdgeId e,
                                      bool bridgeless_mode = true) {
  MultiGraph copy = g;
  if (rot) {
    RotationSystem rcopy = *rot;
    return delete_with_suppression(copy, &rcopy, e, bridgeless_mode);
  }
  return delete_with_suppression(copy, nullptr, e, bridgeless_mode);
}

/// Inverse of delete_with_suppression: subdivides the record's host edges,
/// restores the suppressed vertices and original edge ids, and re-adds the
/// deleted edge, reproducing the pre-deletion embedding exactly.
inline void replay_insertion(MultiGraph& g, RotationSystem* rot, const DeletionRecord& rec) {
  if (rec.parallel_pattern) {
    EdgeId host = rec.end_a.host;
    auto [hx, hy] = g.endpoints(host);
    if (std::minmax(hx, hy) != std::minmax(rec.end_a.far1, rec.end_b.far1))
      throw GraphError("host edge " + std::to_string(host) + " no longer joins the recorded endpoints");
    g.remove_edge(host);
    g.add_vertex_with_id(rec.end_a.vertex);
    g.add_vertex_with_id(rec.end_b.vertex);
    g.add_edge_with_id(rec.end_a.edge1, rec.end_a.vertex, rec.end_a.far1);
    g.add_edge_with_id(rec.end_b.edge1, rec.end_b.vertex, rec.end_b.far1);
    g.add_edge_with_id(rec.middle, rec.end_a.vertex, rec.end_b.vertex);
    g.add_edge_with_id(rec.deleted, rec.end_a.vertex, rec.end_b.vertex);
    if (rot) {
      rot->replace(rec.end_a.far1, host, rec.end_a.edge1);
      rot->replace(rec.end_b.far1, host, rec.end_b.edge1);
      rot->set(rec.end_a.vertex, {rec.end_a.rotation.begin(), rec.end_a.rotation.end()});
      rot->set(rec.end_b.vertex, {rec.end_b.rotation.begin(), rec.end_b.rotation.end()});
    }
    return;
  }

  auto restore_end = [&](const SuppressedEnd& end) {
    auto [hx, hy] = g.endpoints(end.host);
    if (std::minmax(hx, hy) != std::minmax(end.far1, end.far2))
      throw GraphError("host edge " + std::to_string(end.host) + " no longer joins the recorded endpoints");
    g.remove_edge(end.host);
    g.add_vertex_with_id(end.vertex);
    g.add_edge_with_id(end.edge1, end.vertex, end.far1);
    g.add_edge_with_id(end.edge2, end.vertex, end.far2);
    if (rot) {
      rot->replace(end.far1, end.host, end.edge1);
      rot->replace(end.far2, end.host, end.edge2);
    }
  };
  restore_end(rec.end_a);
  restore_end(rec.end_b);
  g.add_edge_with_id(rec.deleted, rec.end_a.vertex, rec.end_b.vertex);
  if (rot) {
    rot->set(rec.end_a.vertex, {rec.end_a.rotation.begin(), rec.end_a.rotation.end()});
    rot->set(rec.end_b.vertex, {rec.end_b.rotation.begin(), rec.end_b.rotation.end()});
  }
}

/// Host id hints for deleting rec.deleted again, oriented by the edge's
/// current endpoint order (a subdivision and restore elsewhere may have
/// flipped the stored pair).
inline std::pair<EdgeId, EdgeId> aligned_host_hints(const MultiGraph& g, const DeletionRecord& rec) {
  auto [x, y] = g.endpoints(rec.deleted);
  if (x == rec.end_a.vertex) return {rec.end_a.host, rec.end_b.host};
  return {rec.end_b.host, rec.end_a.host};
}

/// Synthesizes a record for inserting a new edge across two host darts of one
/// face (or twice onto a single host edge), then replays it. Returns the
/// record so the insertion can be undone or re-derived later.
inline DeletionRecord make_insertion(MultiGraph& g, RotationSystem& rot, const Dart& host1,
                                     const Dart& host2) {
  DeletionRecord rec;
  VertexId a = g.reserve_vertex_id();
  VertexId b = g.reserve_vertex_id();
  rec.end_a.vertex = a;
  rec.end_b.vertex = b;

  if (host1.edge == host2.edge) {
    rec.parallel_pattern = true;
    VertexId u = host1.from;
    VertexId w = g.other_end(host1.edge, u);
    EdgeId f = g.reserve_edge_id();
    EdgeId gg = g.reserve_edge_id();
    EdgeId m = g.reserve_edge_id();
    EdgeId e = g.reserve_edge_id();
    rec.deleted = e;
    rec.middle = m;
    rec.end_a = {a, {f, m, e}, f, u, -1, -1, host1.edge};
    rec.end_b = {b, {m, gg, e}, gg, w, -1, -1, host1.edge};
  } else {
    auto piece_ids = [&](const Dart& d, SuppressedEnd& end, VertexId nv) {
      VertexId u = d.from;
      VertexId w = g.other_end(d.edge, u);
      end.vertex = nv;
      end.edge1 = g.reserve_edge_id();
      end.far1 = u;
      end.edge2 = g.reserve_edge_id();
      end.far2 = w;
      end.host = d.edge;
    };
    piece_ids(host1, rec.end_a, a);
    piece_ids(host2, rec.end_b, b);
    EdgeId e = g.reserve_edge_id();
    rec.deleted = e;
    rec.end_a.rotation = {rec.end_a.edge1, e, rec.end_a.edge2};
    rec.end_b.rotation = {rec.end_b.edge1, e, rec.end_b.edge2};
  }
  replay_insertion(g, &rot, rec);
  return rec;
}

}  // namespace fourcolor
