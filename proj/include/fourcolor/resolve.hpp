#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>

#include "fourcolor/coupling.hpp"

namespace fourcolor {

/// Elementary-operation counters for the benchmark harness.
struct EngineCounters {
  long long rotations = 0;
  long long edges_recolored = 0;
  long long search_nodes = 0;
  long long completer_calls = 0;
  long long aux_insertions = 0;
};

struct SearchLimits {
  int depth = 8;
  long long node_cap = 2000;
};

namespace detail {

inline std::string coloring_key(const EdgeColoring& col) {
  std::string key;
  key.reserve(col.color.size());
  for (const auto& [e, c] : col.color) key.push_back(static_cast<char>('0' + code(c)));
  return key;
}

/// Disks worth rotating: those sharing a vertex with a disk through one of
/// the focus edges. Keeps branching local to the conflict.
inline std::vector<Disk> candidate_disks(const MultiGraph& g, const EdgeColoring& col,
                                         const std::vector<EdgeId>& focus) {
  std::set<VertexId> near;
  for (EdgeId e : focus) {
    KleinColor c = col.at(e);
    for (KleinColor owner : kEdgeColors) {
      if (owner == c) continue;
      for (VertexId v : disk_through(g, col, owner, e).vertices) near.insert(v);
    }
  }
  std::vector<Disk> out;
  std::set<std::pair<KleinColor, EdgeId>> seen;
  for (KleinColor owner : kEdgeColors) {
    TwoFactor tf = two_factor(g, col, owner);
    for (const Disk& d : disks(g, tf)) {
      bool touches = false;
      for (VertexId v : d.vertices)
        if (near.count(v)) {
          touches = true;
          break;
        }
      if (touches && seen.insert(d.key()).second) out.push_back(d);
    }
  }
  return out;
}

}  // namespace detail

/// Iterative-deepening search over sequences of disk rotations until `goal`
/// holds. Depth is the rotation budget; a node cap bounds the total work.
inline std::optional<EdgeColoring> rotation_search(const MultiGraph& g, const EdgeColoring& start,
                                                   const std::vector<EdgeId>& focus,
                                                   const std::function<bool(const EdgeColoring&)>& goal,
                                                   const SearchLimits& limits,
                                                   EngineCounters* counters = nullptr) {
  if (goal(start)) return start;
  long long nodes = 0;
  std::optional<EdgeColoring> found;

  std::function<bool(const EdgeColoring&, int, std::set<std::string>&)> dfs =
      [&](const EdgeColoring& col, int depth_left, std::set<std::string>& visited) {
        if (depth_left == 0) return false;
        for (const Disk& d : detail::candidate_disks(g, col, focus)) {
          if (limits.node_cap >= 0 && nodes >= limits.node_cap) return false;
          ++nodes;
          if (counters) {
            counters->search_nodes += 1;
            counters->rotations += 1;
            counters->edges_recolored += static_cast<long long>(d.length());
          }
          EdgeColoring next = rotate_disk(col, d);
          if (!visited.insert(detail::coloring_key(next)).second) continue;
          if (goal(next)) {
            found = next;
            return true;
          }
          if (dfs(next, depth_left - 1, visited)) return true;
        }
        return false;
      };

  for (int depth = 1; depth <= limits.depth; ++depth) {
    std::set<std::string> visited{detail::coloring_key(start)};
    if (dfs(start, depth, visited)) return found;
    if (limits.node_cap >= 0 && nodes >= limits.node_cap) break;
  }
  return std::nullopt;
}

/// Searches for a coloring reachable by at most `budget` disk rotations under
/// which the coupled edges share a disk. Budget 0 never succeeds once the
/// direct search has failed.
inline std::optional<EdgeColoring> resolve_by_rotation(const MultiGraph& g, const EdgeColoring& start,
                                                       EdgeId e1, EdgeId e2, int budget,
                                                       long long node_cap = 2000,
                                                       EngineCounters* counters = nullptr) {
  if (find_coupling_disk(g, start, e1, e2)) return start;
  if (budget <= 0) return std::nullopt;
  SearchLimits limits{budget, node_cap};
  return rotation_search(
      g, start, {e1, e2},
      [&](const EdgeColoring& col) { return find_coupling_disk(g, col, e1, e2).has_value(); }, limits,
      counters);
}

struct AuxConfig {
  int candidates = 40;
  int rotation_budget = 2;
  long long node_cap = 400;
};

struct AuxResolution {
  DeletionRecord target_record;
  EdgeColoring coloring;
};

/// The two-edge trick: when no rotation sequence couples the hosts, insert an
/// auxiliary edge elsewhere on the face, couple and insert the target edge in
/// the reshaped coloring, then delete the auxiliary edge again (rotating its
/// endpoint disks together first when needed). Net effect: one new properly
/// colored edge. On success the graph gains exactly the target insertion.
inline std::optional<AuxResolution> resolve_by_auxiliary_edge(
    MultiGraph& g, RotationSystem& rot, const EdgeColoring& coloring, EdgeId host1, EdgeId host2,
    const AuxConfig& cfg = {}, EngineCounters* counters = nullptr,
    const DeletionRecord* target_record = nullptr) {
  if (host1 == host2) return std::nullopt;  // single-host targets never need help

  // Collect aux host pairs from the face the target will split, both darts
  // taken from one arc so the target hosts stay co-facial after the cut.
  std::vector<std::pair<Dart, Dart>> pairs;
  for (const Face& f : trace_faces(g, rot)) {
    if (!f.contains_edge(host1) || !f.contains_edge(host2)) continue;
    std::size_t n = f.darts.size(), i1 = n, i2 = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.darts[i].edge == host1 && i1 == n) i1 = i;
      if (f.darts[i].edge == host2 && i2 == n) i2 = i;
    }
    auto arc = [&](std::size_t from, std::size_t to) {
      std::vector<Dart> out;
      for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) out.push_back(f.darts[i]);
      return out;
    };
    for (const auto& side : {arc(i1, i2), arc(i2, i1)}) {
      std::size_t k = side.size();
      for (std::size_t gap = 2; gap + 1 <= k && gap <= 3; ++gap)
        for (std::size_t i = 0; i + gap < k; ++i) pairs.push_back({side[i], side[i + gap]});
      for (std::size_t i = 0; i + 1 < k; ++i) pairs.push_back({side[i], side[i + 1]});
      for (const Dart& d : side) pairs.push_back({d, d});
    }
    break;
  }
  if (pairs.size() > static_cast<std::size_t>(cfg.candidates)) pairs.resize(cfg.candidates);

  for (const auto& [da, db] : pairs) {
    MultiGraph g2 = g;
    RotationSystem rot2 = rot;
    EdgeColoring col2 = coloring;

    auto aux_coupling = find_coupling_disk(g2, col2, da.edge, db.edge);
    if (!aux_coupling) {
      auto fixed = resolve_by_rotation(g2, col2, da.edge, db.edge, cfg.rotation_budget, cfg.node_cap,
                                       counters);
      if (!fixed) continue;
      col2 = *fixed;
      aux_coupling = find_coupling_disk(g2, col2, da.edge, db.edge);
    }
    DeletionRecord aux_rec = make_insertion(g2, rot2, da, db);
    col2 = colored_insert_recolor(g2, col2, aux_rec, aux_coupling->first);
    if (counters) counters->aux_insertions += 1;

    auto target_coupling = find_coupling_disk(g2, col2, host1, host2);
    if (!target_coupling) {
      auto fixed =
          resolve_by_rotation(g2, col2, host1, host2, cfg.rotation_budget, cfg.node_cap, counters);
      if (!fixed) continue;
      col2 = *fixed;
      target_coupling = find_coupling_disk(g2, col2, host1, host2);
    }

    DeletionRecord tgt_rec;
    if (target_record) {
      tgt_rec = *target_record;
      replay_insertion(g2, &rot2, tgt_rec);
    } else {
      std::optional<Dart> t1, t2;
      for (const Face& f : trace_faces(g2, rot2)) {
        if (!f.contains_edge(host1) || !f.contains_edge(host2)) continue;
        for (const Dart& d : f.darts) {
          if (d.edge == host1 && !t1) t1 = d;
          if (d.edge == host2 && !t2) t2 = d;
        }
        break;
      }
      if (!t1 || !t2) continue;
      tgt_rec = make_insertion(g2, rot2, *t1, *t2);
    }
    col2 = colored_insert_recolor(g2, col2, tgt_rec, target_coupling->first);

    // Remove the auxiliary edge; its endpoint disks may need merging first.
    EdgeId aux = aux_rec.deleted;
    auto deletable = [&](const EdgeColoring& c) {
      auto [x, y] = g2.endpoints(aux);
      return disk_through_vertex(g2, c, c.at(aux), x).contains_vertex(y);
    };
    if (!deletable(col2)) {
      auto fixed = rotation_search(g2, col2, {aux}, deletable,
                                   SearchLimits{cfg.rotation_budget, cfg.node_cap}, counters);
      if (!fixed) continue;
      col2 = *fixed;
    }
    auto [hint_a, hint_b] = aligned_host_hints(g2, aux_rec);
    if (!colored_delete(g2, &rot2, col2, aux, /*bridgeless=*/true, hint_a, hint_b)) continue;
    if (!verify_coloring(g2, col2).valid) continue;

    g = std::move(g2);
    rot = std::move(rot2);
    return AuxResolution{tgt_rec, std::move(col2)};
  }
  return std::nullopt;
}

}  // namespace fourcolor
