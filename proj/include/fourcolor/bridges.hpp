#pragma once

#include <map>

#include "fourcolor/edgeset.hpp"
#include "fourcolor/multigraph.hpp"

namespace fourcolor {

/// Cut edges by iterative lowlink DFS. Tracks the arrival edge id rather
/// than the parent vertex, so parallel edges are never reported as bridges.
inline EdgeSet bridges(const MultiGraph& g) {
  EdgeSet out;
  std::map<VertexId, int> disc, low;
  int time = 0;

  struct Frame {
    VertexId v;
    EdgeId via;       // edge used to enter v, -1 at roots
    std::size_t next; // index into incident list
  };

  for (VertexId root : g.vertex_ids()) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = time++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        VertexId w = g.other_end(e, f.v);
        if (!disc.count(w)) {
          disc[w] = low[w] = time++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) out.insert(done.via);
        }
      }
    }
  }
  return out;
}

inline bool is_bridgeless(const MultiGraph& g) { return bridges(g).empty(); }

}  // namespace fourcolor
