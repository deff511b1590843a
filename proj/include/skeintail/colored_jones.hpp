#pragma once

#include "skeintail/half_integer.hpp"
#include "skeintail/transfer.hpp"

namespace skein {

struct ColoredJonesOptions {
  int width_cap = kDefaultWidthCap;
  bool raw = false;  // skip the writhe factor
};

struct ColoredJonesResult {
  LaurentPoly polynomial;  // in v = q^{1/2}
  int n = 0;
  bool writhe_factor_applied = true;
  int writhe = 0;
  int peak_width = 0;
  HalfInteger d_n;  // minimum q-degree; meaningless for the zero polynomial
  bool integer_powers = true;
};

// ((-1)^n q^{(n^2+2n)/2})^w
inline LaurentPoly writhe_factor(int n, int w) {
  const bool negative = (static_cast<long long>(n) * w) % 2 != 0;
  return LaurentPoly::monomial((n * n + 2 * n) * w, negative ? -1 : 1);
}

inline HalfInteger min_degree(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "minimum degree of 0");
  return HalfInteger::from_twice(p.min_exponent());
}

inline HalfInteger min_degree(const ColoredJonesResult& r) { return min_degree(r.polynomial); }

// Evaluation of the projector-decorated n-cable before the writhe factor.
inline RationalFn cable_evaluation(const Diagram& d, int n, int width_cap = kDefaultWidthCap, int* peak = nullptr) {
  const MorseWord word = morseize(cable(d, n));
  if (peak) *peak = word.peak_width();
  return evaluate_morse(word, TransferOptions{width_cap});
}

inline ColoredJonesResult colored_jones(const Diagram& d, int n, const ColoredJonesOptions& options = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidWidth, "color " + std::to_string(n));
  ColoredJonesResult r;
  r.n = n;
  r.writhe = writhe(d);
  const RationalFn value = cable_evaluation(d, n, options.width_cap, &r.peak_width);
  auto clear = value.to_laurent();
  if (!clear)
    throw Error(ErrorKind::NotLaurentAfterClearing, "cable evaluation " + value.to_q_string() + " is not a Laurent polynomial");
  r.polynomial = *clear;
  r.writhe_factor_applied = !options.raw;
  if (!options.raw) r.polynomial = r.polynomial * writhe_factor(n, r.writhe);
  if (!r.polynomial.is_zero()) r.d_n = min_degree(r.polynomial);
  r.integer_powers = r.polynomial.has_only_even_exponents();
  return r;
}

}  // namespace skein
