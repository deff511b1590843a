#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skeintail/errors.hpp"

namespace skein {

using Integer = boost::multiprecision::cpp_int;

// Laurent polynomial in v = q^{1/2} with arbitrary-precision integer
// coefficients. Terms are kept sorted by exponent with no zero coefficients,
// so two equal polynomials always have identical term vectors.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c) { return monomial(0, c); }

  static LaurentPoly monomial(int exponent, const Integer& coefficient = 1) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_.emplace_back(exponent, coefficient);
    return p;
  }

  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (c != 0) {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  int min_exponent() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "minimum exponent of 0");
    return terms_.front().first;
  }
  int max_exponent() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "maximum exponent of 0");
    return terms_.back().first;
  }
  const Integer& leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
    return terms_.back().second;
  }
  const Integer& trailing_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "trailing coefficient of 0");
    return terms_.front().second;
  }

  Integer coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
  }

  // +-v^k
  bool is_unit_monomial() const noexcept {
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
  }

  bool has_only_even_exponents() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.first % 2 == 0; });
  }

  // Multiply by v^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
  }

  // v -> v^{-1}
  LaurentPoly reflected() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      p.terms_.emplace_back(-it->first, it->second);
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    merge(other, false);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    merge(other, true);
    return *this;
  }
  LaurentPoly& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.scaled_shift(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.scaled_shift(b.terms_[0].first, b.terms_[0].second);
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly p;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (acc[i] != 0) p.terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result = constant(1);
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k > 0) base *= base;
    }
    return result;
  }

  // this * c * v^k
  LaurentPoly scaled_shift(int k, const Integer& c) const {
    if (c == 0) return {};
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [e, coeff] : terms_) p.terms_.emplace_back(e + k, coeff * c);
    return p;
  }

  // Human form, lowest degree first, in powers of q. Odd v-exponents print
  // as q^(k/2).
  std::string to_q_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const bool show_digits = magnitude != 1 || e == 0;
      if (show_digits) out += magnitude.str();
      if (e == 0) continue;
      out += "q";
      if (e % 2 == 0) {
        if (e != 2) out += "^" + std::to_string(e / 2);
      } else {
        out += "^(" + std::to_string(e) + "/2)";
      }
    }
    return out;
  }

 private:
  void merge(const LaurentPoly& other, bool subtract) {
    if (other.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() || j != other.terms_.end()) {
      if (j == other.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i));
        ++i;
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
        ++j;
      } else {
        Integer c = subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
        if (c != 0) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

// Ordinary polynomial arithmetic over Z, used for GCDs and exact division of
// Laurent polynomials after shifting them to start at exponent 0.
namespace detail {

using Dense = std::vector<Integer>;  // index = degree

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  const int lo = p.min_exponent();
  d.assign(static_cast<std::size_t>(p.max_exponent() - lo + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

inline LaurentPoly from_dense(const Dense& d, int shift = 0) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.emplace_back(static_cast<int>(i) + shift, d[i]);
  return LaurentPoly::from_terms(std::move(terms));
}

inline Integer content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

inline Dense primitive_part(Dense p) {
  const Integer g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

inline Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    a = primitive_part(std::move(a));
  }
  return a;
}

// Primitive remainder sequence.
inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    Dense r = a.empty() ? std::move(b) : std::move(a);
    if (!r.empty() && r.back() < 0)
      for (auto& c : r) c = -c;
    return r;
  }
  const Integer g = boost::multiprecision::gcd(content(a), content(b));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  for (auto& c : a) c *= g;
  return a;
}

inline std::optional<Dense> exact_divide(Dense a, const Dense& b) {
  trim(a);
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by 0");
  if (a.empty()) return Dense{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  Dense q(a.size() - db, Integer(0));
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer rem;
    Integer coeff;
    boost::multiprecision::divide_qr(a.back(), b.back(), coeff, rem);
    if (rem != 0) return std::nullopt;
    q[shift] = coeff;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= coeff * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

}  // namespace detail

// GCD up to units: result starts at exponent 0, has positive leading
// coefficient and includes the integer content.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return detail::from_dense(detail::gcd(detail::to_dense(a), detail::to_dense(b)));
}

// a / b when b divides a exactly in Z[v, v^-1].
inline std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by 0");
  if (a.is_zero()) return LaurentPoly{};
  auto q = detail::exact_divide(detail::to_dense(a), detail::to_dense(b));
  if (!q) return std::nullopt;
  return detail::from_dense(*q, a.min_exponent() - b.min_exponent());
}

}  // namespace skein
