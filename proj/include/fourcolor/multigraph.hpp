#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fourcolor {

using VertexId = int;
using EdgeId = int;

/// Error raised on violated preconditions and malformed inputs.
/// The message names the offending vertex/edge/face where possible.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected multigraph with stable integer identities.
/// Parallel edges are permitted, self-loops are rejected at construction.
/// Vertex and edge ids are never reused within one graph lifetime.
class MultiGraph {
 public:
  MultiGraph() = default;

  VertexId add_vertex() { return add_vertex_with_id(next_vertex_); }

  /// Hands out a fresh id without creating anything; the id stays burned.
  VertexId reserve_vertex_id() { return next_vertex_++; }
  EdgeId reserve_edge_id() { return next_edge_++; }

  VertexId add_vertex_with_id(VertexId v) {
    if (incidence_.count(v)) throw GraphError("vertex id " + std::to_string(v) + " already in use");
    incidence_[v];
    next_vertex_ = std::max(next_vertex_, v + 1);
    return v;
  }

  EdgeId add_edge(VertexId u, VertexId v) { return add_edge_with_id(next_edge_, u, v); }

  EdgeId add_edge_with_id(EdgeId e, VertexId u, VertexId v) {
    if (u == v)
      throw GraphError("self-loop rejected at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (edges_.count(e)) throw GraphError("edge id " + std::to_string(e) + " already in use");
    if (!incidence_.count(u)) add_vertex_with_id(u);
    if (!incidence_.count(v)) add_vertex_with_id(v);
    edges_[e] = {u, v};
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
    next_edge_ = std::max(next_edge_, e + 1);
    return e;
  }

  void remove_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw GraphError("unknown edge " + std::to_string(e));
    auto [u, v] = it->second;
    detach(u, e);
    detach(v, e);
    edges_.erase(it);
  }

  /// Removes an isolated vertex.
  void remove_vertex(VertexId v) {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    if (!it->second.empty()) throw GraphError("vertex " + std::to_string(v) + " still has incident edges");
    incidence_.erase(it);
  }

  bool has_vertex(VertexId v) const { return incidence_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw GraphError("unknown edge " + std::to_string(e));
    return it->second;
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (v == a) return b;
    if (v == b) return a;
    throw GraphError("vertex " + std::to_string(v) + " not an end of edge " + std::to_string(e));
  }

  const std::vector<EdgeId>& incident(VertexId v) const {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) throw GraphError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::vector<VertexId> vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(incidence_.size());
    for (const auto& [v, _] : incidence_) out.push_back(v);
    return out;
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const auto& [e, _] : edges_) out.push_back(e);
    return out;
  }

  std::size_t num_vertices() const { return incidence_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool adjacent(VertexId u, VertexId v) const {
    for (EdgeId e : incident(u))
      if (other_end(e, u) == v) return true;
    return false;
  }

  /// Number of parallel edges between u and v.
  int multiplicity(VertexId u, VertexId v) const {
    int k = 0;
    for (EdgeId e : incident(u))
      if (other_end(e, u) == v) ++k;
    return k;
  }

  bool is_cubic() const {
    for (const auto& [v, inc] : incidence_)
      if (inc.size() != 3) return false;
    return true;
  }

  bool is_simple() const {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [e, ends] : edges_) {
      auto key = std::minmax(ends.first, ends.second);
      if (!seen.insert(key).second) return false;
    }
    return true;
  }

  bool is_connected() const {
    if (incidence_.empty()) return true;
    std::set<VertexId> seen;
    std::vector<VertexId> stack{incidence_.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        VertexId w = other_end(e, v);
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    return seen.size() == incidence_.size();
  }

  /// Length of a shortest cycle; -1 for forests. Parallel edges give girth 2.
  int girth() const {
    int best = -1;
    for (const auto& [s, _] : incidence_) {
      std::map<VertexId, int> dist;
      std::map<VertexId, EdgeId> via;
      std::vector<VertexId> queue{s};
      dist[s] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        for (EdgeId e : incident(v)) {
          VertexId w = other_end(e, v);
          if (!dist.count(w)) {
            dist[w] = dist[v] + 1;
            via[w] = e;
            queue.push_back(w);
          } else if (via.count(v) == 0 || via[v] != e) {
            int len = dist[v] + dist[w] + 1;
            if (best < 0 || len < best) best = len;
          }
        }
      }
    }
    return best;
  }

  /// Same vertex ids and same edges (ids and unordered endpoints).
  bool operator==(const MultiGraph& other) const {
    if (incidence_.size() != other.incidence_.size() || edges_.size() != other.edges_.size())
      return false;
    for (const auto& [v, _] : incidence_)
      if (!other.incidence_.count(v)) return false;
    for (const auto& [e, ends] : edges_) {
      auto it = other.edges_.find(e);
      if (it == other.edges_.end()) return false;
      if (std::minmax(ends.first, ends.second) != std::minmax(it->second.first, it->second.second))
        return false;
    }
    return true;
  }

 private:
  void detach(VertexId v, EdgeId e) {
    auto& inc = incidence_[v];
    inc.erase(std::find(inc.begin(), inc.end(), e));
  }

  std::map<VertexId, std::vector<EdgeId>> incidence_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/// Builds a graph from an explicit edge list; ids are assigned in input order
/// starting from 1 to match hand-numbered figures.
inline MultiGraph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                              const std::vector<VertexId>& isolated = {}) {
  MultiGraph g;
  for (VertexId v : isolated) g.add_vertex_with_id(v);
  EdgeId next = 1;
  for (auto [u, v] : edge_list) g.add_edge_with_id(next++, u, v);
  return g;
}

}  // namespace fourcolor
