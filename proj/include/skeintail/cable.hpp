#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "skeintail/diagram.hpp"
#include "skeintail/matching.hpp"
#include "skeintail/union_find.hpp"

namespace skein {

struct CabledCrossing {
  int base_crossing = -1;
  int under_copy = 0;  // copies numbered from the left along the orientation
  int over_copy = 0;
};

struct ProjectorNode {
  int component = -1;
  int base_edge = -1;  // -1 for a free circle
  int width = 0;
};

// Blackboard n-cable of a diagram with one projector per component. The
// projector sits on the lowest-numbered edge of its component.
class CabledDiagram {
 public:
  CabledDiagram(Diagram base, int width, std::optional<int> loop_crossing = std::nullopt)
      : base_(std::move(base)), width_(width), loop_crossing_(loop_crossing) {
    if (width < 1) throw Error(ErrorKind::InvalidWidth, "cable width " + std::to_string(width));
    if (loop_crossing && (*loop_crossing < 0 || *loop_crossing >= base_.crossing_count()))
      throw Error(ErrorKind::IndexOutOfRange, "loop crossing " + std::to_string(*loop_crossing));
    for (int x = 0; x < base_.crossing_count(); ++x)
      for (int j = 0; j < width; ++j)
        for (int i = 0; i < width; ++i) {
          if (loop_crossing_ == x) loop_set_.push_back(static_cast<int>(crossings_.size()));
          crossings_.push_back({x, j, i});
        }
    for (int k = 0; k < base_.crossing_component_count(); ++k)
      projectors_.push_back({k, base_.component_edges(k).front(), width});
    for (int k = 0; k < base_.free_circles(); ++k)
      projectors_.push_back({base_.crossing_component_count() + k, -1, width});
  }

  const Diagram& base() const noexcept { return base_; }
  int width() const noexcept { return width_; }
  const std::vector<CabledCrossing>& crossings() const noexcept { return crossings_; }
  const std::vector<ProjectorNode>& projectors() const noexcept { return projectors_; }
  std::optional<int> loop_crossing() const noexcept { return loop_crossing_; }
  const std::vector<int>& loop_set() const noexcept { return loop_set_; }

  bool has_projector_on(int base_edge) const {
    for (const auto& p : projectors_)
      if (p.base_edge == base_edge) return true;
    return false;
  }

 private:
  Diagram base_;
  int width_;
  std::optional<int> loop_crossing_;
  std::vector<CabledCrossing> crossings_;
  std::vector<ProjectorNode> projectors_;
  std::vector<int> loop_set_;
};

inline CabledDiagram cable(const Diagram& d, int n, std::optional<int> loop_crossing = std::nullopt) {
  return CabledDiagram(d, n, loop_crossing);
}

// Explicit PD code of the cable with each projector replaced by one TL_n
// basis matching (terms[k] for projector k). Used by the brute-force check
// of the transfer evaluation.
inline Diagram expand_cable(const CabledDiagram& cd, const std::vector<Matching>& terms) {
  const Diagram& d = cd.base();
  const int n = cd.width();
  if (terms.size() != cd.projectors().size())
    throw Error(ErrorKind::WidthMismatch, "one matching per projector required");
  for (const auto& t : terms)
    if (t.size() != 2 * n) throw Error(ErrorKind::WidthMismatch, "projector term has wrong width");

  int next = 0;
  auto fresh = [&] { return next++; };
  // Segment labels for copy j of edge e near its tail end and near its head
  // end. They differ only on edges carrying a projector.
  std::map<int, std::vector<int>> near_tail;
  std::map<int, std::vector<int>> near_head;
  std::map<int, int> projector_of_edge;
  for (std::size_t k = 0; k < cd.projectors().size(); ++k)
    if (cd.projectors()[k].base_edge > 0) projector_of_edge[cd.projectors()[k].base_edge] = static_cast<int>(k);
  for (int e = 1; e <= d.edge_count(); ++e) {
    auto& t = near_tail[e];
    auto& h = near_head[e];
    for (int j = 0; j < n; ++j) {
      t.push_back(fresh());
      h.push_back(projector_of_edge.count(e) ? fresh() : t.back());
    }
  }
  auto label_at = [&](int crossing, int position, int copy) {
    const int e = d.crossings()[static_cast<std::size_t>(crossing)].edges[static_cast<std::size_t>(position)];
    const Slot s{crossing, position};
    return d.edge_head(e) == s ? near_head[e][static_cast<std::size_t>(copy)] : near_tail[e][static_cast<std::size_t>(copy)];
  };

  std::vector<std::array<int, 4>> tuples;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& c = d.crossings()[static_cast<std::size_t>(x)];
    std::vector<std::vector<int>> u(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
    std::vector<std::vector<int>> o(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1)));
    for (int j = 0; j < n; ++j) {
      u[j][0] = label_at(x, 0, j);
      u[j][n] = label_at(x, 2, j);
      o[j][0] = label_at(x, c.over_entry(), j);
      o[j][n] = label_at(x, c.over_exit(), j);
      for (int t = 1; t < n; ++t) {
        u[j][t] = fresh();
        o[j][t] = fresh();
      }
    }
    // Under copy j runs north at column j; over copy i runs west at row i
    // (negative) or east at row n-1-i (positive).
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (c.sign < 0) {
          const int t = i;
          const int s = n - 1 - j;
          tuples.push_back({u[j][t], o[i][s], u[j][t + 1], o[i][s + 1]});
        } else {
          const int t = n - 1 - i;
          const int s = j;
          tuples.push_back({u[j][t], o[i][s + 1], u[j][t + 1], o[i][s]});
        }
      }
  }

  // Splice in the projector terms.
  UnionFind uf(next);
  int free_circles = 0;
  for (std::size_t k = 0; k < cd.projectors().size(); ++k) {
    const auto& p = cd.projectors()[k];
    const Matching& tau = terms[k];
    if (p.base_edge < 0) {
      free_circles += tl_closure_loops(tau);
      continue;
    }
    auto point_label = [&](int point) {
      // bottom points meet the tail side, top points the head side
      if (point < n) return near_tail[p.base_edge][static_cast<std::size_t>(point)];
      return near_head[p.base_edge][static_cast<std::size_t>(2 * n - 1 - point)];
    };
    for (int point = 0; point < 2 * n; ++point) uf.unite(point_label(point), point_label(tau.partner(point)));
  }
  for (auto& t : tuples)
    for (auto& label : t) label = uf.find(label) + 1;
  return Diagram::from_unoriented(tuples, free_circles);
}

}  // namespace skein
