#pragma once

// Quivers whose arrows carry a plane monomial and optionally a Cox label,
// paths, and relations given as pairs of parallel paths.

#include "quotient_forge/toric_geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace qforge {

struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  PlaneMonomial mon;
  std::optional<CoxVector> cox;
  friend auto operator==(const Arrow &, const Arrow &) -> bool = default;
};

/// Arrow ids in the order traversed.
using Path = std::vector<int>;

struct PathPair {
  Path p;
  Path q;
  friend auto operator==(const PathPair &, const PathPair &) -> bool = default;
};

struct RelationSet {
  std::vector<PathPair> pairs;
  friend auto operator==(const RelationSet &, const RelationSet &) -> bool = default;
};

class LabelledQuiver {
public:
  LabelledQuiver() = default;
  explicit LabelledQuiver(int vertex_count) : vertex_count_(vertex_count) {}

  [[nodiscard]] auto vertex_count() const -> int { return vertex_count_; }
  [[nodiscard]] auto arrow_count() const -> int {
    return static_cast<int>(arrows_.size());
  }
  [[nodiscard]] auto arrows() const -> const std::vector<Arrow> & { return arrows_; }
  [[nodiscard]] auto arrow(int id) const -> const Arrow & { return arrows_.at(index_.at(id)); }
  [[nodiscard]] auto has_arrow(int id) const -> bool { return index_.count(id) != 0; }

  void add_arrow(Arrow a) {
    if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_)
      throw StructuralError("arrow endpoint out of range");
    if (index_.count(a.id)) throw StructuralError("duplicate arrow id");
    index_[a.id] = arrows_.size();
    arrows_.push_back(std::move(a));
  }

  [[nodiscard]] auto arrows_out(int v) const -> std::vector<int> {
    std::vector<int> out;
    for (const auto &a : arrows_)
      if (a.tail == v) out.push_back(a.id);
    return out;
  }
  [[nodiscard]] auto arrows_in(int v) const -> std::vector<int> {
    std::vector<int> out;
    for (const auto &a : arrows_)
      if (a.head == v) out.push_back(a.id);
    return out;
  }

  [[nodiscard]] auto connected() const -> bool {
    if (vertex_count_ == 0) return false;
    std::vector<char> seen(vertex_count_, 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (const auto &a : arrows_) {
        int w = a.tail == v ? a.head : (a.head == v ? a.tail : -1);
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          todo.push(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  /// Throws unless p is a composable sequence of arrows.
  void check_path(const Path &p) const {
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (arrow(p[k]).head != arrow(p[k + 1]).tail)
        throw StructuralError("path is not composable at step " + std::to_string(k));
  }

  [[nodiscard]] auto path_tail(const Path &p, int trivial_at = 0) const -> int {
    return p.empty() ? trivial_at : arrow(p.front()).tail;
  }
  [[nodiscard]] auto path_head(const Path &p, int trivial_at = 0) const -> int {
    return p.empty() ? trivial_at : arrow(p.back()).head;
  }
  [[nodiscard]] auto path_mon(const Path &p) const -> PlaneMonomial {
    PlaneMonomial m;
    for (int id : p) m = m * arrow(id).mon;
    return m;
  }
  [[nodiscard]] auto path_div(const Path &p, std::size_t rays) const -> CoxVector {
    CoxVector d(rays);
    for (int id : p) {
      const auto &a = arrow(id);
      if (!a.cox) throw StructuralError("arrow without Cox label");
      d += *a.cox;
    }
    return d;
  }

  friend auto operator==(const LabelledQuiver &, const LabelledQuiver &) -> bool = default;

private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::map<int, std::size_t> index_;
};

/// Checks both sides of every relation are parallel with equal labels.
inline void check_relations(const LabelledQuiver &q, const RelationSet &rel) {
  for (const auto &pr : rel.pairs) {
    q.check_path(pr.p);
    q.check_path(pr.q);
    if (pr.p.empty() || pr.q.empty()) throw StructuralError("empty relation side");
    if (q.path_tail(pr.p) != q.path_tail(pr.q) || q.path_head(pr.p) != q.path_head(pr.q))
      throw StructuralError("relation sides are not parallel");
    if (q.path_mon(pr.p) != q.path_mon(pr.q))
      throw StructuralError("relation sides have different monomials");
    bool labelled = std::all_of(q.arrows().begin(), q.arrows().end(),
                                [](const Arrow &a) { return a.cox.has_value(); });
    if (labelled) {
      auto rays = q.arrows().front().cox->size();
      if (q.path_div(pr.p, rays) != q.path_div(pr.q, rays))
        throw StructuralError("relation sides have different labelling divisors");
    }
  }
}

} // namespace qforge
