#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeintail/diagram.hpp"
#include "skeintail/half_integer.hpp"
#include "skeintail/laurent.hpp"
#include "skeintail/temperley_lieb.hpp"
#include "skeintail/union_find.hpp"

namespace skein {

enum class Smoothing : std::uint8_t { A, B };

// Choice of smoothing on a subset of the crossings.
class KauffmanState {
 public:
  KauffmanState() = default;

  static KauffmanState uniform(int crossings, Smoothing s) {
    KauffmanState k;
    for (int i = 0; i < crossings; ++i) k.choice_[i] = s;
    return k;
  }
  // Bit i set means crossing i takes the B-smoothing.
  static KauffmanState from_mask(int crossings, std::uint64_t mask) {
    KauffmanState k;
    for (int i = 0; i < crossings; ++i) k.choice_[i] = (mask >> i) & 1U ? Smoothing::B : Smoothing::A;
    return k;
  }

  void set(int crossing, Smoothing s) { choice_[crossing] = s; }
  std::optional<Smoothing> get(int crossing) const {
    auto it = choice_.find(crossing);
    if (it == choice_.end()) return std::nullopt;
    return it->second;
  }
  const std::map<int, Smoothing>& choices() const noexcept { return choice_; }
  int size() const noexcept { return static_cast<int>(choice_.size()); }

  int count(Smoothing s) const {
    int c = 0;
    for (const auto& [i, t] : choice_) c += t == s ? 1 : 0;
    return c;
  }
  HalfInteger sgn_a() const { return HalfInteger::from_twice(count(Smoothing::A)); }
  HalfInteger sgn_b() const { return HalfInteger::from_twice(count(Smoothing::B)); }
  HalfInteger sgn() const { return sgn_b() - sgn_a(); }

 private:
  std::map<int, Smoothing> choice_;
};

struct StateEdge {
  int crossing = -1;
  int from = -1;
  int to = -1;
  bool is_loop() const noexcept { return from == to; }
};

// Vertices are state circles numbered by their first slot in crossing
// order; free circles come last as isolated vertices.
struct StateGraph {
  int vertex_count = 0;
  std::vector<StateEdge> edges;

  std::vector<int> loop_crossings() const {
    std::vector<int> out;
    for (const auto& e : edges)
      if (e.is_loop()) out.push_back(e.crossing);
    return out;
  }
};

struct Resolution {
  int circle_count = 0;
  StateGraph graph;
};

namespace detail {

inline void join_edges(const Diagram& d, UnionFind& uf) {
  for (int e = 1; e <= d.edge_count(); ++e) {
    const Slot t = d.edge_tail(e);
    const Slot h = d.edge_head(e);
    uf.unite(4 * t.crossing + t.position, 4 * h.crossing + h.position);
  }
}

// A joins a-b and c-d; B joins a-d and b-c.
inline void join_smoothing(UnionFind& uf, int crossing, Smoothing s) {
  const int base = 4 * crossing;
  if (s == Smoothing::A) {
    uf.unite(base + 0, base + 1);
    uf.unite(base + 2, base + 3);
  } else {
    uf.unite(base + 0, base + 3);
    uf.unite(base + 1, base + 2);
  }
}

}  // namespace detail

inline Resolution resolve(const Diagram& d, const KauffmanState& state) {
  const int c = d.crossing_count();
  UnionFind uf(4 * c);
  detail::join_edges(d, uf);
  std::vector<Smoothing> chosen(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) {
    auto s = state.get(i);
    if (!s) throw Error(ErrorKind::IncompleteState, "crossing " + std::to_string(i) + " has no smoothing");
    chosen[static_cast<std::size_t>(i)] = *s;
    detail::join_smoothing(uf, i, *s);
  }
  Resolution r;
  std::map<int, int> ids;
  auto id_of = [&](int slot) {
    auto [it, inserted] = ids.try_emplace(uf.find(slot), static_cast<int>(ids.size()));
    return it->second;
  };
  for (int s = 0; s < 4 * c; ++s) id_of(s);
  for (int i = 0; i < c; ++i) {
    // The segment at a crossing touches the arc through a and the arc
    // through the slot opposite to a's partner.
    const int other = chosen[static_cast<std::size_t>(i)] == Smoothing::A ? 4 * i + 2 : 4 * i + 1;
    r.graph.edges.push_back({i, id_of(4 * i), id_of(other)});
  }
  r.circle_count = static_cast<int>(ids.size()) + d.free_circles();
  r.graph.vertex_count = r.circle_count;
  return r;
}

inline StateGraph all_a_graph(const Diagram& d) {
  return resolve(d, KauffmanState::uniform(d.crossing_count(), Smoothing::A)).graph;
}
inline StateGraph all_b_graph(const Diagram& d) {
  return resolve(d, KauffmanState::uniform(d.crossing_count(), Smoothing::B)).graph;
}

inline bool is_a_adequate(const Diagram& d) { return all_a_graph(d).loop_crossings().empty(); }
inline bool is_b_adequate(const Diagram& d) { return all_b_graph(d).loop_crossings().empty(); }

inline int loop_crossing_count(const Diagram& d) {
  return static_cast<int>(all_a_graph(d).loop_crossings().size());
}

inline constexpr int kDefaultBruteForceLimit = 24;

// Sum over all states of q^{(#B - #A)/2} delta^{circles}. The
// A-smoothing carries q^{-1/2}, which makes the all-A state the source of
// the lowest degree.
inline LaurentPoly bracket_oracle(const Diagram& d, int limit = kDefaultBruteForceLimit) {
  const int c = d.crossing_count();
  if (c > limit || c > 62)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(c) + " crossings exceed the brute-force limit " + std::to_string(limit));
  UnionFind base(4 * c);
  detail::join_edges(d, base);
  // histogram[#B][circles], summed into a polynomial at the end
  std::vector<std::vector<std::uint64_t>> histogram(static_cast<std::size_t>(c + 1),
                                                    std::vector<std::uint64_t>(static_cast<std::size_t>(2 * c + 2), 0));
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    UnionFind uf = base;
    int b = 0;
    for (int i = 0; i < c; ++i) {
      const bool is_b = (mask >> i) & 1U;
      b += is_b ? 1 : 0;
      detail::join_smoothing(uf, i, is_b ? Smoothing::B : Smoothing::A);
    }
    ++histogram[static_cast<std::size_t>(b)][static_cast<std::size_t>(uf.set_count())];
  }
  LaurentPoly total;
  for (int b = 0; b <= c; ++b)
    for (int k = 0; k <= 2 * c + 1; ++k) {
      const std::uint64_t n = histogram[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
      if (n == 0) continue;
      total += delta_power(k + d.free_circles()).scaled_shift(b - (c - b), Integer(n));
    }
  return total;
}

}  // namespace skein
