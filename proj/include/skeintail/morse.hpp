#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "skeintail/cable.hpp"

namespace skein {

enum class SliceKind : std::uint8_t { Cup, Cap, Crossing, Projector, Rotate };

struct Slice {
  SliceKind kind = SliceKind::Cup;
  int position = 0;          // leftmost strand touched
  int width = 0;             // projector width
  int shift = 0;             // rotation: new point i is old point i + shift
  bool over_rising = false;  // crossing: the strand from bottom-left to top-right is over
  int base_crossing = -1;    // crossing of the base diagram that produced this slice

  static Slice cup(int p) { return {SliceKind::Cup, p}; }
  static Slice cap(int p) { return {SliceKind::Cap, p}; }
  static Slice crossing(int p, bool over_rising, int base = -1) {
    Slice s{SliceKind::Crossing, p};
    s.over_rising = over_rising;
    s.base_crossing = base;
    return s;
  }
  static Slice projector(int p, int width) {
    Slice s{SliceKind::Projector, p};
    s.width = width;
    return s;
  }
  static Slice rotate(int shift) {
    Slice s{SliceKind::Rotate, 0};
    s.shift = shift;
    return s;
  }
};

// A sequence of elementary slices read bottom to top, starting and ending
// with no strands.
class MorseWord {
 public:
  MorseWord() = default;

  explicit MorseWord(std::vector<Slice> slices) : slices_(std::move(slices)) {
    int w = 0;
    for (std::size_t i = 0; i < slices_.size(); ++i) {
      const Slice& s = slices_[i];
      const std::string where = "slice " + std::to_string(i);
      switch (s.kind) {
        case SliceKind::Cup:
          if (s.position < 0 || s.position > w) throw Error(ErrorKind::IndexOutOfRange, where + ": cup position");
          w += 2;
          break;
        case SliceKind::Cap:
          if (s.position < 0 || s.position + 1 >= w) throw Error(ErrorKind::IndexOutOfRange, where + ": cap position");
          w -= 2;
          break;
        case SliceKind::Crossing:
          if (s.position < 0 || s.position + 1 >= w)
            throw Error(ErrorKind::IndexOutOfRange, where + ": crossing position");
          break;
        case SliceKind::Projector:
          if (s.width < 1 || s.position < 0 || s.position + s.width > w)
            throw Error(ErrorKind::IndexOutOfRange, where + ": projector block");
          break;
        case SliceKind::Rotate: break;
      }
      widths_.push_back(w);
      peak_ = std::max(peak_, w);
    }
    if (w != 0) throw Error(ErrorKind::WidthMismatch, "word ends with " + std::to_string(w) + " open strands");
  }

  const std::vector<Slice>& slices() const noexcept { return slices_; }
  const std::vector<int>& widths() const noexcept { return widths_; }
  int peak_width() const noexcept { return peak_; }

  int count(SliceKind kind) const {
    return static_cast<int>(std::count_if(slices_.begin(), slices_.end(), [kind](const Slice& s) { return s.kind == kind; }));
  }

 private:
  std::vector<Slice> slices_;
  std::vector<int> widths_;  // strand count after each slice
  int peak_ = 0;
};

namespace detail {

// Planar graph of the base diagram: crossings (4 legs, counterclockwise
// slots) and projector nodes (2 legs: 0 toward the tail crossing).
struct PlanarGraph {
  struct End {
    int node = -1;
    int leg = -1;
    friend bool operator==(const End&, const End&) = default;
  };
  int crossing_nodes = 0;
  std::vector<int> degree;
  std::vector<std::vector<End>> far;  // far[node][leg]

  explicit PlanarGraph(const CabledDiagram& cd) {
    const Diagram& d = cd.base();
    crossing_nodes = d.crossing_count();
    const int nodes = crossing_nodes + d.crossing_component_count();
    degree.assign(static_cast<std::size_t>(nodes), 4);
    far.assign(static_cast<std::size_t>(nodes), std::vector<End>(4));
    for (int k = 0; k < d.crossing_component_count(); ++k) {
      degree[static_cast<std::size_t>(crossing_nodes + k)] = 2;
      far[static_cast<std::size_t>(crossing_nodes + k)].resize(2);
    }
    auto link = [&](End a, End b) {
      far[static_cast<std::size_t>(a.node)][static_cast<std::size_t>(a.leg)] = b;
      far[static_cast<std::size_t>(b.node)][static_cast<std::size_t>(b.leg)] = a;
    };
    for (int e = 1; e <= d.edge_count(); ++e) {
      const End tail{d.edge_tail(e).crossing, d.edge_tail(e).position};
      const End head{d.edge_head(e).crossing, d.edge_head(e).position};
      int projector = -1;
      for (const auto& p : cd.projectors())
        if (p.base_edge == e) projector = crossing_nodes + p.component;
      if (projector < 0) {
        link(tail, head);
      } else {
        link(tail, End{projector, 0});
        link(End{projector, 1}, head);
      }
    }
  }

  int node_count() const { return static_cast<int>(degree.size()); }
};

class MorseBuilder {
 public:
  explicit MorseBuilder(const CabledDiagram& cd) : cd_(cd), graph_(cd), n_(cd.width()) {}

  MorseWord build() {
    processed_.assign(static_cast<std::size_t>(graph_.node_count()), false);
    int remaining = graph_.node_count();
    while (remaining > 0) {
      const Choice c = choose();
      place(c);
      processed_[static_cast<std::size_t>(c.node)] = true;
      --remaining;
      cap_adjacent();
    }
    if (!boundary_.empty()) throw Error(ErrorKind::MorseizationFailed, "open strands remain after the last node");
    for (int k = 0; k < cd_.base().free_circles(); ++k) {
      ribbon_cup(0);
      emit(Slice::projector(0, n_));
      ribbon_cap(0);
    }
    return MorseWord(std::move(slices_));
  }

 private:
  using End = PlanarGraph::End;

  struct Choice {
    int node = -1;
    int first_leg = 0;   // leg x; inputs are x, x+1, ... counterclockwise
    int inputs = 0;      // k
    int position = 0;    // ribbon index of the first input
  };

  int boundary_index(End e) const {
    for (std::size_t i = 0; i < boundary_.size(); ++i)
      if (boundary_[i] == e) return static_cast<int>(i);
    return -1;
  }

  // Attached legs must sit at consecutive ribbons in counterclockwise leg
  // order, so that adding the node keeps the evaluated region a disk.
  std::optional<Choice> eligible(int node) const {
    const int d = graph_.degree[static_cast<std::size_t>(node)];
    const int w = static_cast<int>(boundary_.size());
    std::vector<int> pos(static_cast<std::size_t>(d), -1);
    int k = 0;
    for (int leg = 0; leg < d; ++leg) {
      const End f = graph_.far[static_cast<std::size_t>(node)][static_cast<std::size_t>(leg)];
      if (f.node != node && processed_[static_cast<std::size_t>(f.node)]) {
        pos[static_cast<std::size_t>(leg)] = boundary_index(f);
        if (pos[static_cast<std::size_t>(leg)] < 0)
          throw Error(ErrorKind::MorseizationFailed, "processed neighbour missing from the boundary");
        ++k;
      }
    }
    if (k == 0) {
      if (w != 0) return std::nullopt;
      return Choice{node, 0, 0, 0};
    }
    for (int x = 0; x < d; ++x) {
      bool ok = true;
      const int r = pos[static_cast<std::size_t>(x)];
      if (r < 0) continue;
      for (int i = 0; i < d && ok; ++i) {
        const int leg = (x + i) % d;
        const int p = pos[static_cast<std::size_t>(leg)];
        if (i < k)
          ok = p == (r + i) % w;
        else
          ok = p < 0;
      }
      if (ok) return Choice{node, x, k, r};
    }
    return std::nullopt;
  }

  Choice choose() const {
    std::optional<Choice> best;
    int best_width = 0;
    for (int node = 0; node < graph_.node_count(); ++node) {
      if (processed_[static_cast<std::size_t>(node)]) continue;
      auto c = eligible(node);
      if (!c) continue;
      const int d = graph_.degree[static_cast<std::size_t>(node)];
      const int width = static_cast<int>(boundary_.size()) + d - 2 * c->inputs;
      if (!best || width < best_width) {
        best = c;
        best_width = width;
      }
    }
    if (!best) throw Error(ErrorKind::MorseizationFailed, "no node can be attached to the current boundary");
    return *best;
  }

  void emit(const Slice& s) {
    slices_.push_back(s);
  }

  // Ribbon-level operations; ribbon r occupies strands r*n .. r*n+n-1.
  void ribbon_cup(int r) {
    for (int i = 0; i < n_; ++i) emit(Slice::cup(r * n_ + i));
  }
  void ribbon_cap(int r) {
    for (int i = n_ - 1; i >= 0; --i) emit(Slice::cap(r * n_ + i));
  }
  // Ribbons r and r+1 exchange places; the left one moves up to the right.
  void ribbon_cross(int r, bool left_over, int base) {
    const int s = r * n_;
    for (int i = n_ - 1; i >= 0; --i)
      for (int t = 0; t < n_; ++t) emit(Slice::crossing(s + i + t, left_over, base));
  }
  void rotate_ribbons(int r) {
    const int w = static_cast<int>(boundary_.size());
    if (w == 0 || r % w == 0) return;
    emit(Slice::rotate(r * n_));
    std::rotate(boundary_.begin(), boundary_.begin() + r, boundary_.end());
  }

  void place(Choice c) {
    const int node = c.node;
    const int d = graph_.degree[static_cast<std::size_t>(node)];
    const int k = c.inputs;
    const int w = static_cast<int>(boundary_.size());
    if (k > 0 && c.position + k > w) {
      rotate_ribbons(c.position);
      c.position = 0;
    }
    const int r = c.position;
    const int x = c.first_leg;
    if (d == 4) {
      const bool left_over = x % 2 == 1;  // legs b and d belong to the over-strand
      switch (k) {
        case 0:
          ribbon_cup(r);
          ribbon_cup(r + 1);
          ribbon_cross(r, left_over, node);
          break;
        case 1:
          ribbon_cup(r + 1);
          ribbon_cross(r, left_over, node);
          break;
        case 2: ribbon_cross(r, left_over, node); break;
        case 3:
          ribbon_cross(r, left_over, node);
          ribbon_cap(r + 1);
          break;
        default:
          ribbon_cross(r, left_over, node);
          ribbon_cap(r + 1);
          ribbon_cap(r);
          break;
      }
    } else {
      switch (k) {
        case 0:
          ribbon_cup(r);
          emit(Slice::projector(r * n_, n_));
          break;
        case 1: emit(Slice::projector(r * n_, n_)); break;
        default:
          emit(Slice::projector(r * n_, n_));
          ribbon_cap(r);
          break;
      }
    }
    // Outputs, left to right: legs x+d-1 down to x+k.
    std::vector<End> outputs;
    for (int leg = x + d - 1; leg >= x + k; --leg) outputs.push_back(End{node, leg % d});
    boundary_.erase(boundary_.begin() + r, boundary_.begin() + r + k);
    boundary_.insert(boundary_.begin() + r, outputs.begin(), outputs.end());
  }

  bool joined(End a, End b) const {
    return graph_.far[static_cast<std::size_t>(a.node)][static_cast<std::size_t>(a.leg)] == b;
  }

  // Closes every edge whose two ends have become neighbours on the boundary.
  void cap_adjacent() {
    bool again = true;
    while (again) {
      again = false;
      const int w = static_cast<int>(boundary_.size());
      if (w < 2) return;
      for (int i = 0; i < w; ++i) {
        const int j = (i + 1) % w;
        if (!joined(boundary_[static_cast<std::size_t>(i)], boundary_[static_cast<std::size_t>(j)])) continue;
        int r = i;
        if (j == 0 && w > 2) {
          rotate_ribbons(i);
          r = 0;
        }
        ribbon_cap(r);
        boundary_.erase(boundary_.begin() + r, boundary_.begin() + r + 2);
        again = true;
        break;
      }
    }
  }

  const CabledDiagram& cd_;
  PlanarGraph graph_;
  int n_;
  std::vector<bool> processed_;
  std::vector<End> boundary_;
  std::vector<Slice> slices_;
};

}  // namespace detail

// Greedy sweep of the cable: repeatedly attach the node that keeps the
// boundary narrowest, lowest index first on ties.
inline MorseWord morseize(const CabledDiagram& cd) { return detail::MorseBuilder(cd).build(); }

}  // namespace skein
