#pragma once

#include <initializer_list>
#include <set>

#include "fourcolor/multigraph.hpp"

namespace fourcolor {

/// Set of edge ids closed under ring sum (symmetric difference).
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) {}
  explicit EdgeSet(std::set<EdgeId> ids) : ids_(std::move(ids)) {}

  bool contains(EdgeId e) const { return ids_.count(e) != 0; }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  void insert(EdgeId e) { ids_.insert(e); }
  void erase(EdgeId e) { ids_.erase(e); }

  const std::set<EdgeId>& ids() const { return ids_; }

  /// Ring sum: associative, commutative, self-inverse.
  EdgeSet operator^(const EdgeSet& other) const {
    EdgeSet out = *this;
    for (EdgeId e : other.ids_) {
      auto [it, inserted] = out.ids_.insert(e);
      if (!inserted) out.ids_.erase(it);
    }
    return out;
  }

  EdgeSet& operator^=(const EdgeSet& other) {
    *this = *this ^ other;
    return *this;
  }

  bool operator==(const EdgeSet&) const = default;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

 private:
  std::set<EdgeId> ids_;
};

}  // namespace fourcolor
