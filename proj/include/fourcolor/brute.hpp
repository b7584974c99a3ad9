#pragma once

#include <optional>

#include "fourcolor/coloring.hpp"

namespace fourcolor {

struct OracleResult {
  long long count = 0;
  std::optional<EdgeColoring> witness;
  std::vector<EdgeColoring> witnesses;  // filled only when requested
  bool cap_hit = false;
};

namespace detail {

/// Backtracking proper 3-edge-coloring search with forward pruning of
/// endpoint color domains. Serves both the exhaustive oracle and the
/// first-solution completer.
class EdgeColorSearch {
 public:
  EdgeColorSearch(const MultiGraph& g, const EdgeColoring* fixed) : g_(g) {
    edges_ = g.edge_ids();
    for (std::size_t i = 0; i < edges_.size(); ++i) index_[edges_[i]] = i;
    adjacent_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = g.endpoints(edges_[i]);
      for (VertexId w : {u, v})
        for (EdgeId f : g.incident(w))
          if (f != edges_[i]) adjacent_[i].push_back(index_[f]);
    }
    domain_.assign(edges_.size(), 0b111);
    assigned_.assign(edges_.size(), -1);
    if (fixed) {
      for (const auto& [e, c] : fixed->color) {
        auto it = index_.find(e);
        if (it == index_.end()) continue;
        int ci = code(c) - 1;
        if (ci < 0) throw GraphError("white edge in fixed partial coloring");
        if (!(domain_[it->second] & (1 << ci))) {
          contradiction_ = true;
          return;
        }
        if (!assign(it->second, ci)) {
          contradiction_ = true;
          return;
        }
      }
    }
  }

  /// Enumerates completions; stops once `cap` solutions are found (cap < 0
  /// means exhaustive) or `node_cap` branch nodes are spent.
  OracleResult run(long long cap, long long node_cap, bool keep_all = false) {
    cap_ = cap;
    node_cap_ = node_cap;
    keep_all_ = keep_all;
    OracleResult result;
    if (!contradiction_) search(result);
    if (cap_ >= 0 && result.count >= cap_) result.cap_hit = true;
    if (node_cap_ >= 0 && nodes_ >= node_cap_) result.cap_hit = true;
    return result;
  }

 private:
  bool assign(std::size_t ei, int ci) {
    assigned_[ei] = ci;
    for (std::size_t a : adjacent_[ei]) {
      if (assigned_[a] == ci) return false;
      if (assigned_[a] < 0 && (domain_[a] & (1 << ci))) {
        domain_[a] &= ~(1 << ci);
        trail_.push_back(a);
        if (domain_[a] == 0) return false;
      } else {
        trail_.push_back(SIZE_MAX);
      }
    }
    return true;
  }

  void undo(std::size_t ei, std::size_t mark, int ci) {
    for (std::size_t i = mark; i < trail_.size(); ++i)
      if (trail_[i] != SIZE_MAX) domain_[trail_[i]] |= (1 << ci);
    trail_.resize(mark);
    assigned_[ei] = -1;
  }

  void search(OracleResult& result) {
    if (node_cap_ >= 0 && nodes_ > node_cap_) return;
    std::size_t pick = SIZE_MAX;
    int best = 4;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (assigned_[i] >= 0) continue;
      int width = __builtin_popcount(domain_[i]);
      if (width < best) {
        best = width;
        pick = i;
        if (width == 1) break;
      }
    }
    if (pick == SIZE_MAX) {
      result.count += 1;
      if (!result.witness || keep_all_) {
        EdgeColoring witness;
        for (std::size_t i = 0; i < edges_.size(); ++i)
          witness.set(edges_[i], static_cast<KleinColor>(assigned_[i] + 1));
        if (keep_all_) result.witnesses.push_back(witness);
        if (!result.witness) result.witness = witness;
      }
      return;
    }
    ++nodes_;
    for (int ci = 0; ci < 3; ++ci) {
      if (!(domain_[pick] & (1 << ci))) continue;
      std::size_t mark = trail_.size();
      if (assign(pick, ci)) {
        search(result);
        if (cap_ >= 0 && result.count >= cap_) {
          undo(pick, mark, ci);
          return;
        }
      }
      undo(pick, mark, ci);
      if (node_cap_ >= 0 && nodes_ > node_cap_) return;
    }
  }

  const MultiGraph& g_;
  std::vector<EdgeId> edges_;
  std::map<EdgeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::vector<unsigned> domain_;
  std::vector<int> assigned_;
  std::vector<std::size_t> trail_;
  long long cap_ = -1, node_cap_ = -1, nodes_ = 0;
  bool contradiction_ = false;
  bool keep_all_ = false;
};

}  // namespace detail

/// Exact number of proper 3-edge-colorings (up to `cap`), with one witness.
/// Guarded to desk-scale inputs; larger graphs are refused, not attempted.
inline OracleResult brute_force_colorings(const MultiGraph& g, long long cap = -1, int guard = 30,
                                          bool keep_all = false) {
  if (static_cast<int>(g.num_vertices()) > guard)
    throw GraphError("size guard exceeded: oracle limited to " + std::to_string(guard) + " vertices");
  detail::EdgeColorSearch search(g, nullptr);
  return search.run(cap, -1, keep_all);
}

/// First proper coloring extending `fixed`, or nothing within the node cap.
inline std::optional<EdgeColoring> complete_coloring(const MultiGraph& g, const EdgeColoring& fixed,
                                                     long long node_cap = -1) {
  detail::EdgeColorSearch search(g, &fixed);
  OracleResult r = search.run(1, node_cap);
  if (r.count >= 1) return r.witness;
  return std::nullopt;
}

}  // namespace fourcolor
