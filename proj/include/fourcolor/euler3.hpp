#pragma once

#include <array>

#include "fourcolor/line_graph.hpp"
#include "fourcolor/coloring.hpp"

namespace fourcolor {

struct EulerArc {
  EdgeId edge;     // B2 edge traversed
  VertexId tail;   // B2 vertex it leaves (an H edge id)
};

struct EulerMod3Report {
  std::vector<EulerArc> circuit;              // every B2 edge exactly once
  std::map<VertexId, std::array<long, 2>> disk_lengths;  // two circuit segments per vertex
  bool disks_mod3_ok = false;
  std::map<VertexId, KleinColor> label_coloring;  // from the mod-3 labels
  bool matches_up_to_shift = false;
  int shift = 0;
};

/// Builds the Euler circuit of B2 whose base triangles spin with the color
/// cycle R -> B -> G. Every arc leads from a vertex of one color to a vertex
/// of the next, so circuit labels taken mod 3 recolor B2's vertices with H's
/// edge coloring up to a cyclic shift, and both circuit segments at every
/// vertex have length divisible by three.
inline EulerMod3Report euler_mod3(const LineGraphResult& b2, const EdgeColoring& h_coloring) {
  const MultiGraph& g = b2.graph;
  if (g.num_edges() % 3 != 0) throw GraphError("biquadratic edge count must be divisible by three");

  // Orient each B2 edge along the color cycle of its base triangle.
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> out_arcs;  // tail -> (edge, head)
  for (EdgeId be : g.edge_ids()) {
    auto [x, y] = g.endpoints(be);
    KleinColor cx = h_coloring.at(x);
    KleinColor cy = h_coloring.at(y);
    if (cx == cy) throw GraphError("adjacent H edges share a color; coloring invalid");
    if (next_edge_color(cx) == cy)
      out_arcs[x].push_back({be, y});
    else if (next_edge_color(cy) == cx)
      out_arcs[y].push_back({be, x});
    else
      throw GraphError("base triangle colors are not {R,B,G}");
  }
  for (auto& [v, arcs] : out_arcs) {
    if (arcs.size() != 2) throw GraphError("color orientation is not Eulerian");
    std::sort(arcs.begin(), arcs.end());
  }

  // Hierholzer over the oriented arcs.
  EulerMod3Report report;
  std::map<VertexId, std::size_t> next_out;
  std::vector<EulerArc> path, circuit;
  VertexId cur = g.vertex_ids().front();
  while (true) {
    auto& arcs = out_arcs[cur];
    std::size_t& idx = next_out[cur];
    if (idx < arcs.size()) {
      auto [edge, head] = arcs[idx++];
      path.push_back({edge, cur});
      cur = head;
    } else {
      if (path.empty()) break;
      circuit.push_back(path.back());
      cur = path.back().tail;
      path.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != g.num_edges())
    throw GraphError("triangle splice failed to produce a single Euler circuit");
  report.circuit = circuit;

  // Visit positions; each vertex is the tail of exactly two arcs.
  std::map<VertexId, std::vector<long>> visits;
  for (std::size_t i = 0; i < circuit.size(); ++i) visits[circuit[i].tail].push_back(static_cast<long>(i));
  long m = static_cast<long>(circuit.size());
  report.disks_mod3_ok = true;
  for (const auto& [v, pos] : visits) {
    if (pos.size() != 2) throw GraphError("circuit does not visit a vertex exactly twice");
    long seg = pos[1] - pos[0];
    report.disk_lengths[v] = {seg, m - seg};
    if (seg % 3 != 0) report.disks_mod3_ok = false;
  }

  // Labels 1..m mod 3 color the vertices; compare against H up to a shift.
  std::map<VertexId, int> residue;
  for (const auto& [v, pos] : visits) {
    int r0 = static_cast<int>((pos[0] + 1) % 3);
    int r1 = static_cast<int>((pos[1] + 1) % 3);
    if (r0 != r1) report.disks_mod3_ok = false;
    residue[v] = r0;
  }
  for (int shift = 0; shift < 3; ++shift) {
    bool all = true;
    std::map<VertexId, KleinColor> candidate;
    for (const auto& [v, r] : residue) {
      KleinColor c = kEdgeColors[(r + shift) % 3];
      candidate[v] = c;
      if (c != h_coloring.at(v)) all = false;
    }
    if (shift == 0) report.label_coloring = candidate;
    if (all) {
      report.matches_up_to_shift = true;
      report.shift = shift;
      report.label_coloring = std::move(candidate);
      break;
    }
  }
  return report;
}

}  // namespace fourcolor
