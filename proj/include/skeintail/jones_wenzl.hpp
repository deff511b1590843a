#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "skeintail/temperley_lieb.hpp"

namespace skein {

inline constexpr int kMaxProjectorWidth = 8;

// [n] = q^{-n} + q^{-n+2} + ... + q^{n}, the quotient
// (q^{-(n+1)} - q^{n+1}) / (q^{-1} - q).
inline LaurentPoly quantum_integer(int n) {
  if (n < 0) throw Error(ErrorKind::NegativeIndex, "quantum integer of " + std::to_string(n));
  std::vector<LaurentPoly::Term> terms;
  for (int j = 0; j <= n; ++j) terms.emplace_back(2 * (-n + 2 * j), 1);
  return LaurentPoly::from_terms(std::move(terms));
}

// Closure of the width-k projector, (-1)^k [k]; the empty projector closes to 1.
inline LaurentPoly projector_closure(int k) {
  LaurentPoly v = quantum_integer(k);
  return k % 2 == 0 ? v : -v;
}

// jw(n) = terms / denominator with Laurent coefficients, reduced by the
// common polynomial gcd. The transfer evaluation works with this form.
struct ScaledProjector {
  int n = 0;
  std::map<Matching, LaurentPoly> terms;
  LaurentPoly denominator;
};

namespace detail {

inline ScaledProjector build_projector(int n, const ScaledProjector* previous) {
  ScaledProjector out;
  out.n = n;
  if (n == 1) {
    out.terms.emplace(tl_identity_matching(1), LaurentPoly::constant(1));
    out.denominator = LaurentPoly::constant(1);
    return out;
  }
  // Wenzl recursion: P_n = P' + mu_n P' e_{n-1} P' with P' = P_{n-1} (x) 1
  // and mu_n = -Delta_{n-2} / Delta_{n-1}.
  std::map<Matching, LaurentPoly> lifted;
  for (const auto& [m, c] : previous->terms) lifted.emplace(tensor_identity(m), c);
  const std::map<Matching, LaurentPoly> e{{tl_generator_matching(n, n - 1), LaurentPoly::constant(1)}};
  const auto sandwich = tl_product(tl_product(lifted, e), lifted);

  const LaurentPoly& d = previous->denominator;
  const LaurentPoly big = projector_closure(n - 1);
  const LaurentPoly small = projector_closure(n - 2);
  const LaurentPoly scale = big * d;
  for (const auto& [m, c] : lifted) add_term(out.terms, m, c * scale);
  for (const auto& [m, c] : sandwich) add_term(out.terms, m, -(c * small));
  out.denominator = big * d * d;

  LaurentPoly g = out.denominator;
  for (const auto& [m, c] : out.terms) {
    if (g.is_unit_monomial()) break;
    g = gcd(g, c);
  }
  if (!g.is_unit_monomial()) {
    for (auto& [m, c] : out.terms) c = *exact_quotient(c, g);
    out.denominator = *exact_quotient(out.denominator, g);
  }
  // Denominator normalized to start at v^0 with a positive leading coefficient.
  const int shift = out.denominator.min_exponent();
  const bool flip = out.denominator.leading_coefficient() < 0;
  out.denominator = out.denominator.shifted(-shift);
  if (flip) out.denominator = -out.denominator;
  for (auto& [m, c] : out.terms) {
    c = c.shifted(-shift);
    if (flip) c = -c;
  }
  return out;
}

class ProjectorCache {
 public:
  static ProjectorCache& instance() {
    static ProjectorCache cache;
    return cache;
  }

  std::shared_ptr<const ScaledProjector> get(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidWidth, "projector width " + std::to_string(n));
    if (n > kMaxProjectorWidth)
      throw Error(ErrorKind::EvaluationLimit,
                  "projector width " + std::to_string(n) + " exceeds " + std::to_string(kMaxProjectorWidth));
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    std::shared_ptr<const ScaledProjector> previous = n > 1 ? get(n - 1) : nullptr;
    auto built = std::make_shared<const ScaledProjector>(build_projector(n, previous.get()));
    std::unique_lock lock(mutex_);
    // A concurrent builder may have won; both values are identical.
    auto [it, inserted] = cache_.emplace(n, built);
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::shared_ptr<const ScaledProjector>> cache_;
};

}  // namespace detail

inline std::shared_ptr<const ScaledProjector> scaled_jw(int n) { return detail::ProjectorCache::instance().get(n); }

// Uncached computation, for checking the cache.
inline ScaledProjector scaled_jw_fresh(int n) {
  ScaledProjector p = detail::build_projector(1, nullptr);
  for (int k = 2; k <= n; ++k) p = detail::build_projector(k, &p);
  return p;
}

inline TLElement to_tl_element(const ScaledProjector& p) {
  TLElement x(p.n);
  for (const auto& [m, c] : p.terms) x.add(m, RationalFn(c, p.denominator));
  return x;
}

inline TLElement jw(int n) { return to_tl_element(*scaled_jw(n)); }

struct JWReport {
  int n = 0;
  std::vector<bool> annihilated;  // index i-1 for e_i, both sides
  bool identity_coefficient_one = false;
  bool idempotent = false;
  bool closure_ok = false;
  RationalFn closure;
  bool all_passed() const {
    for (bool b : annihilated)
      if (!b) return false;
    return identity_coefficient_one && idempotent && closure_ok;
  }
};

inline JWReport verify_jw(int n) {
  JWReport r;
  r.n = n;
  const TLElement p = jw(n);
  for (int i = 1; i <= n - 1; ++i) {
    const TLElement e = tl_generator(n, i);
    r.annihilated.push_back(tl_multiply(e, p).is_zero() && tl_multiply(p, e).is_zero());
  }
  r.identity_coefficient_one = p.coefficient(tl_identity_matching(n)) == RationalFn(LaurentPoly::constant(1));
  r.idempotent = tl_multiply(p, p) == p;
  r.closure = close(p);
  r.closure_ok = r.closure == RationalFn(projector_closure(n));
  return r;
}

// Joins adjacent top points cap_position, cap_position+1 (1-based) of jw(n)
// and reports whether the result vanishes.
inline bool cap_kills_projector(int n, int cap_position) {
  if (cap_position < 1 || cap_position > n - 1)
    throw Error(ErrorKind::IndexOutOfRange, "cap position " + std::to_string(cap_position));
  const auto p = scaled_jw(n);
  std::map<Matching, LaurentPoly> result;
  for (const auto& [m, c] : p->terms) {
    Composed capped = line_cap(tl_to_line(m), n + cap_position - 1);
    detail::add_term(result, capped.matching, c * delta_power(capped.loops));
  }
  return result.empty();
}

}  // namespace skein
