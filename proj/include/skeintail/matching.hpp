#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skeintail/errors.hpp"

namespace skein {

// Planar perfect matching of points 0..size-1 on a line (equivalently on a
// disk boundary). Used both for boundary states of the transfer evaluation
// and for Temperley-Lieb basis elements.
class Matching {
 public:
  Matching() = default;

  static Matching from_partners(const std::vector<int>& partner) {
    const auto n = static_cast<int>(partner.size());
    if (n % 2 != 0) throw Error(ErrorKind::InvalidWidth, "matching needs an even number of points");
    if (n > 255) throw Error(ErrorKind::WidthOverflow, "matching wider than 255 points");
    Matching m;
    m.partner_.resize(partner.size());
    for (int i = 0; i < n; ++i) {
      const int j = partner[static_cast<std::size_t>(i)];
      if (j < 0 || j >= n || j == i || partner[static_cast<std::size_t>(j)] != i)
        throw Error(ErrorKind::IndexOutOfRange, "partner table is not a fixed-point-free involution");
      m.partner_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
    }
    if (!m.is_planar()) throw Error(ErrorKind::IndexOutOfRange, "matching is not planar");
    return m;
  }

  static Matching unchecked(std::vector<std::uint8_t> partner) {
    Matching m;
    m.partner_ = std::move(partner);
    return m;
  }

  int size() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::uint8_t>& partners() const noexcept { return partner_; }

  // No i<j<k<l with i~k and j~l.
  bool is_planar() const {
    std::vector<int> stack;
    for (int i = 0; i < size(); ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j > i) {
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != j) return false;
        stack.pop_back();
      }
    }
    return stack.empty();
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
      const int j = partner_[static_cast<std::size_t>(i)];
      if (j < i) continue;
      if (!first) out += " ";
      first = false;
      out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out + "}";
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.partner_ <=> b.partner_; }

 private:
  std::vector<std::uint8_t> partner_;
};

// All planar matchings of `points` points in lexicographic partner order.
inline std::vector<Matching> all_matchings(int points) {
  if (points < 0 || points % 2 != 0) throw Error(ErrorKind::InvalidWidth, "odd point count");
  std::vector<Matching> out;
  std::vector<std::uint8_t> partner(static_cast<std::size_t>(points), 0);
  std::vector<int> open;
  // Walk points left to right; each point either opens an arc or closes the
  // most recently opened one.
  auto rec = [&](auto& self, int i) -> void {
    if (i == points) {
      if (open.empty()) out.push_back(Matching::unchecked(partner));
      return;
    }
    const int remaining = points - i;
    if (static_cast<int>(open.size()) < remaining) {
      open.push_back(i);
      self(self, i + 1);
      open.pop_back();
    }
    if (!open.empty()) {
      const int j = open.back();
      open.pop_back();
      partner[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
      partner[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i);
      self(self, i + 1);
      open.push_back(j);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Boundary operations on a line state. Points are numbered left to right; the
// already evaluated part of the diagram lies below the line.

struct Composed {
  Matching matching;
  int loops = 0;
};

// Adds an arc joining new points p and p+1.
inline Matching line_cup(const Matching& m, int p) {
  const int w = m.size();
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w + 2));
  auto shift = [p](int i) { return i < p ? i : i + 2; };
  for (int i = 0; i < w; ++i) out[static_cast<std::size_t>(shift(i))] = static_cast<std::uint8_t>(shift(m.partner(i)));
  out[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p + 1);
  out[static_cast<std::size_t>(p + 1)] = static_cast<std::uint8_t>(p);
  return Matching::unchecked(std::move(out));
}

// Joins points p and p+1 from above; closing an existing arc makes a loop.
inline Composed line_cap(const Matching& m, int p) {
  const int w = m.size();
  std::vector<int> partner(m.partners().begin(), m.partners().end());
  int loops = 0;
  if (partner[static_cast<std::size_t>(p)] == p + 1) {
    loops = 1;
  } else {
    const int a = partner[static_cast<std::size_t>(p)];
    const int b = partner[static_cast<std::size_t>(p + 1)];
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w - 2));
  auto shrink = [p](int i) { return i < p ? i : i - 2; };
  for (int i = 0; i < w; ++i) {
    if (i == p || i == p + 1) continue;
    out[static_cast<std::size_t>(shrink(i))] = static_cast<std::uint8_t>(shrink(partner[static_cast<std::size_t>(i)]));
  }
  return {Matching::unchecked(std::move(out)), loops};
}

// Cyclic relabeling: new point i is old point (i + shift) mod width.
inline Matching line_rotate(const Matching& m, int shift) {
  const int w = m.size();
  if (w == 0) return m;
  shift = ((shift % w) + w) % w;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) {
    const int old = (i + shift) % w;
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(((m.partner(old) - shift) % w + w) % w);
  }
  return Matching::unchecked(std::move(out));
}

// Stacks a Temperley-Lieb basis element `t` (on 2n points, bottom 0..n-1
// left to right, top n..2n-1 right to left) on top of the block of points
// s..s+n-1 of the line state `m`.
inline Composed line_apply(const Matching& m, int s, const Matching& t) {
  const int w = m.size();
  const int n = t.size() / 2;
  auto top_point = [n](int k) { return 2 * n - 1 - k; };
  auto top_position = [n](int point) { return 2 * n - 1 - point; };
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w));
  std::vector<char> used(static_cast<std::size_t>(n), 0);  // old block points reached

  // Continue from old line point j until a new boundary point is reached.
  auto from_old = [&](int j) -> int {
    for (;;) {
      if (j < s || j >= s + n) return j;
      const int t_bottom = j - s;
      used[static_cast<std::size_t>(t_bottom)] = 1;
      const int q = t.partner(t_bottom);
      if (q >= n) return s + top_position(q);
      used[static_cast<std::size_t>(q)] = 1;
      j = m.partner(s + q);
    }
  };
  for (int i = 0; i < w; ++i) {
    int end;
    if (i < s || i >= s + n) {
      end = from_old(m.partner(i));
    } else {
      const int q = t.partner(top_point(i - s));
      if (q >= n) {
        end = s + top_position(q);
      } else {
        used[static_cast<std::size_t>(q)] = 1;
        end = from_old(m.partner(s + q));
      }
    }
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(end);
  }
  // Remaining block points lie on closed loops.
  int loops = 0;
  for (int b = 0; b < n; ++b) {
    if (used[static_cast<std::size_t>(b)]) continue;
    ++loops;
    int cur = b;
    while (!used[static_cast<std::size_t>(cur)]) {
      used[static_cast<std::size_t>(cur)] = 1;
      const int via_line = m.partner(s + cur) - s;
      used[static_cast<std::size_t>(via_line)] = 1;
      cur = t.partner(via_line);
    }
  }
  return {Matching::unchecked(std::move(out)), loops};
}

// ---------------------------------------------------------------------------
// Temperley-Lieb numbering helpers

inline Matching tl_identity_matching(int n) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(2 * n - 1 - k);
    p[static_cast<std::size_t>(2 * n - 1 - k)] = static_cast<std::uint8_t>(k);
  }
  return Matching::unchecked(std::move(p));
}

// e_i for 1 <= i <= n-1: caps strands i, i+1 (1-based) on both sides.
inline Matching tl_generator_matching(int n, int i) {
  if (i < 1 || i > n - 1) throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i));
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  auto top = [n](int k) { return 2 * n - 1 - k; };
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = top(k);
    p[static_cast<std::size_t>(top(k))] = k;
  }
  const int a = i - 1;
  const int b = i;
  p[static_cast<std::size_t>(a)] = b;
  p[static_cast<std::size_t>(b)] = a;
  p[static_cast<std::size_t>(top(a))] = top(b);
  p[static_cast<std::size_t>(top(b))] = top(a);
  return Matching::from_partners(p);
}

// Unrolls a TL_n basis element onto a line: bottom points right to left,
// then top points left to right (the clockwise boundary order).
inline Matching tl_to_line(const Matching& x) {
  const int n = x.size() / 2;
  auto to_line = [n](int p) { return p < n ? n - 1 - p : 3 * n - 1 - p; };
  std::vector<std::uint8_t> out(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < 2 * n; ++p) out[static_cast<std::size_t>(to_line(p))] = static_cast<std::uint8_t>(to_line(x.partner(p)));
  return Matching::unchecked(std::move(out));
}

inline Matching line_to_tl(const Matching& line) {
  return tl_to_line(line);  // the relabeling is an involution
}

// x below, y on top.
inline Composed tl_compose(const Matching& x, const Matching& y) {
  const int n = x.size() / 2;
  Composed c = line_apply(tl_to_line(x), n, y);
  c.matching = line_to_tl(c.matching);
  return c;
}

// Number of circles after joining each top point to the bottom point below it.
inline int tl_closure_loops(const Matching& x) {
  const int n = x.size() / 2;
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    while (!seen[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = x.partner(p);
      seen[static_cast<std::size_t>(q)] = 1;
      p = 2 * n - 1 - q;  // closure strand: bottom k <-> top position k
    }
  }
  return loops;
}

}  // namespace skein
