#pragma once

#include <vector>

#include "skeintail/cable.hpp"
#include "skeintail/jones_wenzl.hpp"
#include "skeintail/states.hpp"

namespace skein {

// Independent evaluation of the projector-decorated cable: expand every
// projector into its basis matchings, build each resulting PD code
// explicitly and sum brute-force brackets with the projector coefficients.
inline RationalFn cable_state_sum(const Diagram& d, int n, int limit = kDefaultBruteForceLimit) {
  const CabledDiagram cd = cable(d, n);
  if (static_cast<long long>(n) * n * d.crossing_count() > limit)
    throw Error(ErrorKind::TooManyCrossings, "cable has more crossings than the brute-force limit");
  const auto p = scaled_jw(n);
  std::vector<std::pair<Matching, LaurentPoly>> terms(p->terms.begin(), p->terms.end());
  const std::size_t k = cd.projectors().size();

  LaurentPoly total;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::vector<Matching> chosen;
    LaurentPoly weight = LaurentPoly::constant(1);
    for (std::size_t i = 0; i < k; ++i) {
      chosen.push_back(terms[pick[i]].first);
      weight *= terms[pick[i]].second;
    }
    total += weight * bracket_oracle(expand_cable(cd, chosen), limit);
    std::size_t i = 0;
    while (i < k && ++pick[i] == terms.size()) pick[i++] = 0;
    if (i == k) break;
  }
  return RationalFn(total, p->denominator.pow(static_cast<unsigned>(k)));
}

}  // namespace skein
