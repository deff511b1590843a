#pragma once

#include <map>

#include "skeintail/jones_wenzl.hpp"
#include "skeintail/morse.hpp"

namespace skein {

inline constexpr int kDefaultWidthCap = 16;

struct TransferOptions {
  int width_cap = kDefaultWidthCap;
};

namespace detail {

using LineState = std::map<Matching, LaurentPoly>;

inline void accumulate(LineState& s, const Matching& m, LaurentPoly c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(m, std::move(c));
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

}  // namespace detail

// Sweeps the word bottom to top, keeping the evaluated part as a
// combination of planar matchings of the current strands. Projectors enter
// in scaled form; their denominators are divided out at the end.
inline RationalFn evaluate_morse(const MorseWord& word, const TransferOptions& options = {}) {
  if (word.peak_width() > options.width_cap)
    throw Error(ErrorKind::WidthOverflow, "peak width " + std::to_string(word.peak_width()) + " exceeds cap " +
                                              std::to_string(options.width_cap));
  detail::LineState state;
  state.emplace(Matching{}, LaurentPoly::constant(1));
  LaurentPoly denominator = LaurentPoly::constant(1);

  for (const Slice& s : word.slices()) {
    detail::LineState next;
    switch (s.kind) {
      case SliceKind::Cup:
        for (auto& [m, c] : state) detail::accumulate(next, line_cup(m, s.position), std::move(c));
        break;
      case SliceKind::Cap:
        for (auto& [m, c] : state) {
          Composed r = line_cap(m, s.position);
          detail::accumulate(next, r.matching, r.loops ? c * delta_power(r.loops) : std::move(c));
        }
        break;
      case SliceKind::Rotate:
        for (auto& [m, c] : state) detail::accumulate(next, line_rotate(m, s.shift), std::move(c));
        break;
      case SliceKind::Crossing:
        // A-smoothing weight q^{-1/2}, B-smoothing q^{1/2}.
        for (auto& [m, c] : state) {
          Composed capped = line_cap(m, s.position);
          const Matching turned = line_cup(capped.matching, s.position);
          LaurentPoly through = c.shifted(s.over_rising ? -1 : 1);
          LaurentPoly turn = c.shifted(s.over_rising ? 1 : -1);
          if (capped.loops) turn *= delta_power(capped.loops);
          detail::accumulate(next, m, std::move(through));
          detail::accumulate(next, turned, std::move(turn));
        }
        break;
      case SliceKind::Projector: {
        const auto p = scaled_jw(s.width);
        for (const auto& [m, c] : state)
          for (const auto& [t, a] : p->terms) {
            Composed r = line_apply(m, s.position, t);
            LaurentPoly coeff = c * a;
            if (r.loops) coeff *= delta_power(r.loops);
            detail::accumulate(next, r.matching, std::move(coeff));
          }
        denominator *= p->denominator;
        break;
      }
    }
    state = std::move(next);
  }
  if (state.empty()) return RationalFn{};
  if (state.size() != 1 || state.begin()->first.size() != 0)
    throw Error(ErrorKind::MorseizationFailed, "transfer evaluation ended with open strands");
  return RationalFn(state.begin()->second, denominator);
}

}  // namespace skein
