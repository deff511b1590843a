#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skeintail/colored_jones.hpp"
#include "skeintail/states.hpp"

namespace skein {

// h_n(D) = -(n^2/2) c(D) - n |s_A(D)| + w(D) (n^2 + 2n)/2
inline HalfInteger h_n(const Diagram& d, int n) {
  const long long c = d.crossing_count();
  const long long s_a = all_a_graph(d).vertex_count;
  const long long w = writhe(d);
  const long long nn = n;
  return HalfInteger::from_twice(-nn * nn * c - 2 * nn * s_a + w * (nn * nn + 2 * nn));
}

struct TailRow {
  int n = 0;
  HalfInteger d_n;
  HalfInteger h_n;
  int lowest_sign = 1;                 // sign of the coefficient at q^{d(n)}
  std::vector<Integer> coefficients;   // coefficient of q^{d(n)+2(i-2)}, i = 2..window+1
  LaurentPoly polynomial;
};

struct StableCoefficient {
  int i = 0;
  Integer value;         // sign-normalized: multiplied by the sign of the lowest coefficient
  Integer raw_value;     // as it appears in J(q; i)
  bool stable = false;   // agreement for all computed n >= i
  bool raw_stable = false;
  std::optional<int> stable_from;  // smallest n from which all later values agree
};

struct TailReport {
  std::string mode = "tail";  // "head" when computed on the mirror of a B-adequate diagram
  bool a_adequate = false;
  bool b_adequate = false;
  int n_max = 0;
  int window = 0;
  std::vector<TailRow> rows;
  std::vector<StableCoefficient> betas;
  bool stabilization_ok = false;
  std::vector<std::string> warnings;
};

struct TailOptions {
  int width_cap = kDefaultWidthCap;
};

namespace detail {

inline TailRow tail_row(const Diagram& d, int n, int window, const TailOptions& options) {
  TailRow row;
  row.n = n;
  ColoredJonesResult j;
  try {
    j = colored_jones(d, n, ColoredJonesOptions{options.width_cap, false});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::WidthOverflow || e.kind() == ErrorKind::EvaluationLimit)
      throw Error(ErrorKind::EvaluationLimit, "n = " + std::to_string(n) + ": " + e.what());
    throw;
  }
  row.polynomial = j.polynomial;
  row.d_n = min_degree(j.polynomial);
  row.h_n = h_n(d, n);
  row.lowest_sign = j.polynomial.trailing_coefficient() < 0 ? -1 : 1;
  for (int i = 2; i <= window + 1; ++i)
    row.coefficients.push_back(j.polynomial.coefficient(static_cast<int>(row.d_n.twice()) + 4 * (i - 2)));
  return row;
}

}  // namespace detail

// Computes J(q; n) for n = 2..n_max and checks that the coefficient of
// q^{d(n)+2(i-2)} is the same for every n >= i. Coefficients are compared
// after dividing by the sign of the lowest coefficient, since J(q; n) of an
// adequate link carries an overall sign that may alternate with n.
inline TailReport stabilization_check(const Diagram& input, int n_max, int window, const TailOptions& options = {}) {
  if (n_max < 2) throw Error(ErrorKind::EvaluationLimit, "n_max must be at least 2");
  if (window < 1) throw Error(ErrorKind::InvalidWidth, "window must be at least 1");
  TailReport report;
  report.n_max = n_max;
  report.window = window;
  report.a_adequate = is_a_adequate(input);
  report.b_adequate = is_b_adequate(input);
  Diagram d = input;
  if (!report.a_adequate) {
    if (report.b_adequate) {
      report.mode = "head";
      d = mirror(input);
    } else {
      report.warnings.push_back("diagram is neither A- nor B-adequate; stabilization is not guaranteed");
    }
  }
  if (window > n_max - 1) {
    report.warnings.push_back("window reduced to n_max - 1 = " + std::to_string(n_max - 1));
    window = n_max - 1;
    report.window = window;
  }
  for (int n = 2; n <= n_max; ++n) report.rows.push_back(detail::tail_row(d, n, window, options));

  report.stabilization_ok = true;
  for (int i = 2; i <= window + 1; ++i) {
    StableCoefficient b;
    b.i = i;
    const std::size_t k = static_cast<std::size_t>(i - 2);
    const TailRow& first = report.rows[static_cast<std::size_t>(i - 2)];  // row for n = i
    b.raw_value = first.coefficients[k];
    b.value = first.coefficients[k] * first.lowest_sign;
    b.stable = true;
    b.raw_stable = true;
    for (const TailRow& row : report.rows) {
      if (row.n < i) continue;
      b.stable = b.stable && row.coefficients[k] * row.lowest_sign == b.value;
      b.raw_stable = b.raw_stable && row.coefficients[k] == b.raw_value;
    }
    // earliest n after which the normalized value never changes
    const TailRow& last = report.rows.back();
    const Integer last_value = last.coefficients[k] * last.lowest_sign;
    int from = last.n;
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
      if (it->coefficients[k] * it->lowest_sign != last_value) break;
      from = it->n;
    }
    if (b.stable) b.stable_from = from;
    report.stabilization_ok = report.stabilization_ok && b.stable;
    report.betas.push_back(b);
  }
  return report;
}

// T(q) = sum beta_i q^{2(i-2)} over the stabilized coefficients.
inline LaurentPoly tail_truncation(const TailReport& report) {
  if (!report.stabilization_ok) throw Error(ErrorKind::NotStabilized, "coefficients did not stabilize");
  LaurentPoly t;
  for (const auto& b : report.betas) t += LaurentPoly::monomial(4 * (b.i - 2), b.value);
  return t;
}

inline LaurentPoly tail_truncation(const Diagram& d, int n_max, const TailOptions& options = {}) {
  return tail_truncation(stabilization_check(d, n_max, n_max - 1, options));
}

struct GapVerdict {
  int n = 0;
  HalfInteger d_n;
  HalfInteger h_n;
  HalfInteger gap;    // d(n) - h_n(D)
  HalfInteger bound;  // 2(n - 1)
  bool pass = false;
};

inline void require_not_adequate(const Diagram& d) {
  if (is_a_adequate(d)) throw Error(ErrorKind::DiagramIsAdequate, "diagram is A-adequate");
}

inline GapVerdict gap_check(const Diagram& d, int n, const TailOptions& options = {}) {
  require_not_adequate(d);
  if (n <= 1) throw Error(ErrorKind::InvalidWidth, "gap check needs n > 1");
  GapVerdict v;
  v.n = n;
  const auto j = colored_jones(d, n, ColoredJonesOptions{options.width_cap, false});
  v.d_n = min_degree(j.polynomial);
  v.h_n = h_n(d, n);
  v.gap = v.d_n - v.h_n;
  v.bound = HalfInteger::from_integer(2LL * (n - 1));
  v.pass = v.gap >= v.bound;
  return v;
}

struct WindowVerdict {
  int n = 0;
  HalfInteger threshold;  // n/2 - c/2 - (3/2) c^l
  HalfInteger lowest;     // lowest q-degree of q^{-h_n} J(q; n)
  std::vector<HalfInteger> violations;  // degrees below the threshold with nonzero coefficient
  bool pass = false;
};

// The tail Euler characteristic vanishes for a non-A-adequate diagram, so
// after removing the factor in front of it every coefficient strictly below
// the remainder exponent must be zero.
inline WindowVerdict window_check(const Diagram& d, int n, const TailOptions& options = {}) {
  require_not_adequate(d);
  if (n < 2) throw Error(ErrorKind::InvalidWidth, "window check needs n >= 2");
  WindowVerdict v;
  v.n = n;
  const auto j = colored_jones(d, n, ColoredJonesOptions{options.width_cap, false});
  const long long c = d.crossing_count();
  const long long s_a = all_a_graph(d).vertex_count;
  const long long loops = loop_crossing_count(d);
  const LaurentPoly normalized =
      (j.polynomial * writhe_factor(n, -writhe(d))).shifted(static_cast<int>(n * n * c + 2 * n * s_a));
  v.threshold = HalfInteger::from_twice(n - c - 3 * loops);
  v.lowest = min_degree(normalized);
  for (const auto& [e, coeff] : normalized.terms())
    if (e < v.threshold.twice()) v.violations.push_back(HalfInteger::from_twice(e));
  v.pass = v.violations.empty();
  return v;
}

}  // namespace skein
