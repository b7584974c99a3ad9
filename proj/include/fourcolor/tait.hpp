#pragma once

#include <optional>
#include <string>

#include "fourcolor/brute.hpp"
#include "fourcolor/peel.hpp"
#include "fourcolor/resolve.hpp"

namespace fourcolor {

struct ColorConfig {
  int rotation_budget = 8;
  long long rotation_node_cap = 2000;
  AuxConfig aux{};
  long long local_node_cap = 50000;
  long long full_node_cap = -1;  // last resort, unbounded
};

struct ColorOutcome {
  std::optional<EdgeColoring> coloring;
  std::string failure;  // failure certificate text when coloring is absent
  EngineCounters counters;

  bool ok() const { return coloring.has_value(); }
};

namespace detail {

/// Edges within graph distance two of the inserted edge's endpoints; the
/// local recolor stage frees only these.
inline std::set<EdgeId> neighborhood_edges(const MultiGraph& g, VertexId a, VertexId b, int radius) {
  std::map<VertexId, int> dist;
  std::vector<VertexId> queue{a, b};
  dist[a] = dist[b] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId v = queue[i];
    if (dist[v] == radius) continue;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::set<EdgeId> out;
  for (const auto& [v, _] : dist)
    for (EdgeId e : g.incident(v)) out.insert(e);
  return out;
}

}  // namespace detail

/// Colors a bridgeless planar cubic graph by peeling to a base graph and
/// replaying the deletions in reverse, resolving every insertion through the
/// ladder: direct coupling disk, budgeted disk rotations, the auxiliary-edge
/// trick, then local and full backtracking completion.
inline ColorOutcome color_cubic(const MultiGraph& graph, const RotationSystem& rotation,
                                const ColorConfig& cfg = {}) {
  if (!graph.is_cubic()) throw GraphError("color_cubic expects a cubic graph");
  if (!graph.is_connected()) throw GraphError("color_cubic expects a connected graph");
  EdgeSet cut = bridges(graph);
  if (!cut.empty())
    throw GraphError("input has a bridge (edge " + std::to_string(*cut.begin()) +
                     "); three colors are impossible");
  if (!euler_planarity_check(graph, trace_faces(graph, rotation)))
    throw GraphError("rotation system is not a sphere embedding");

  ColorOutcome out;
  PeelResult peeled = peel(graph, rotation);
  MultiGraph g = peeled.base;
  RotationSystem rot = peeled.base_rot;
  EdgeColoring col = color_base(g);

  for (auto it = peeled.script.rbegin(); it != peeled.script.rend(); ++it) {
    const DeletionRecord& rec = *it;
    auto [host1, host2] = rec.hosts();

    auto coupling = find_coupling_disk(g, col, host1, host2);
    if (!coupling) {
      auto rotated = resolve_by_rotation(g, col, host1, host2, cfg.rotation_budget,
                                         cfg.rotation_node_cap, &out.counters);
      if (rotated) {
        col = *rotated;
        coupling = find_coupling_disk(g, col, host1, host2);
      }
    }
    if (coupling) {
      replay_insertion(g, &rot, rec);
      EdgeColoring next = colored_insert_recolor(g, col, rec, coupling->first);
      for (const auto& [e, c] : next.color)
        if (!col.has(e) || col.at(e) != c) out.counters.edges_recolored += 1;
      col = std::move(next);
      continue;
    }

    auto aux = resolve_by_auxiliary_edge(g, rot, col, host1, host2, cfg.aux, &out.counters, &rec);
    if (aux) {
      col = std::move(aux->coloring);
      continue;
    }

    // Backtracking completion: first recolor only near the insertion, then
    // free the whole graph.
    replay_insertion(g, &rot, rec);
    out.counters.completer_calls += 1;
    std::set<EdgeId> local =
        detail::neighborhood_edges(g, rec.end_a.vertex, rec.end_b.vertex, 2);
    EdgeColoring fixed;
    for (EdgeId e : g.edge_ids())
      if (!local.count(e) && col.has(e)) fixed.set(e, col.at(e));
    auto completed = complete_coloring(g, fixed, cfg.local_node_cap);
    if (!completed) completed = complete_coloring(g, EdgeColoring{}, cfg.full_node_cap);
    if (!completed) {
      out.failure = "no proper 3-edge-coloring found while re-inserting edge " +
                    std::to_string(rec.deleted);
      return out;
    }
    out.counters.edges_recolored += static_cast<long long>(g.num_edges());
    col = std::move(*completed);
  }

  if (!(g == graph)) throw GraphError("replay did not restore the original graph");
  if (!verify_coloring(g, col).valid) throw GraphError("engine produced an invalid coloring");
  out.coloring = std::move(col);
  return out;
}

}  // namespace fourcolor
