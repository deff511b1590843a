#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skeintail/laurent.hpp"
#include "skeintail/matching.hpp"
#include "skeintail/rational.hpp"

namespace skein {

// Loop value -q - q^{-1}.
inline LaurentPoly delta() { return LaurentPoly::from_terms({{-2, -1}, {2, -1}}); }

inline const LaurentPoly& delta_power(int k) {
  static const std::vector<LaurentPoly> table = [] {
    std::vector<LaurentPoly> t{LaurentPoly::constant(1)};
    for (int i = 1; i <= 64; ++i) t.push_back(t.back() * delta());
    return t;
  }();
  if (k < 0 || k >= static_cast<int>(table.size())) throw Error(ErrorKind::IndexOutOfRange, "loop count");
  return table[static_cast<std::size_t>(k)];
}

namespace detail {

template <class Coeff>
void add_term(std::map<Matching, Coeff>& terms, const Matching& m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

template <class Coeff>
std::map<Matching, Coeff> tl_product(const std::map<Matching, Coeff>& x, const std::map<Matching, Coeff>& y) {
  std::map<Matching, Coeff> out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      Composed c = tl_compose(mx, my);
      Coeff coeff = cx * cy;
      if (c.loops > 0) coeff *= Coeff(delta_power(c.loops));
      add_term(out, c.matching, coeff);
    }
  return out;
}

}  // namespace detail

// Finite combination of TL_n basis matchings with rational coefficients.
class TLElement {
 public:
  explicit TLElement(int n = 0) : n_(n) {
    if (n < 0) throw Error(ErrorKind::InvalidWidth, "negative strand count");
  }
  TLElement(int n, std::map<Matching, RationalFn> terms) : n_(n), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.size() != 2 * n_) throw Error(ErrorKind::WidthMismatch, "term width differs from 2n");
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
  }

  int n() const noexcept { return n_; }
  const std::map<Matching, RationalFn>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RationalFn coefficient(const Matching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFn{} : it->second;
  }

  void add(const Matching& m, const RationalFn& c) {
    if (m.size() != 2 * n_) throw Error(ErrorKind::WidthMismatch, "term width differs from 2n");
    detail::add_term(terms_, m, c);
  }

  friend TLElement operator+(const TLElement& a, const TLElement& b) {
    check_width(a, b);
    TLElement out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, c);
    return out;
  }
  friend TLElement operator-(const TLElement& a, const TLElement& b) { return a + b * RationalFn(LaurentPoly::constant(-1)); }

  friend TLElement operator*(const TLElement& a, const RationalFn& s) {
    TLElement out(a.n_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
    return out;
  }
  friend TLElement operator*(const RationalFn& s, const TLElement& a) { return a * s; }

  friend bool operator==(const TLElement& a, const TLElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += "\n";
      out += "(" + c.to_q_string() + ") " + m.to_string();
    }
    return out;
  }

  static void check_width(const TLElement& a, const TLElement& b) {
    if (a.n_ != b.n_)
      throw Error(ErrorKind::WidthMismatch, "TL_" + std::to_string(a.n_) + " vs TL_" + std::to_string(b.n_));
  }

 private:
  int n_;
  std::map<Matching, RationalFn> terms_;
};

inline TLElement tl_identity(int n) {
  TLElement x(n);
  x.add(tl_identity_matching(n), RationalFn(LaurentPoly::constant(1)));
  return x;
}

inline TLElement tl_generator(int n, int i) {
  TLElement x(n);
  x.add(tl_generator_matching(n, i), RationalFn(LaurentPoly::constant(1)));
  return x;
}

// x below, y stacked on top.
inline TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  TLElement::check_width(x, y);
  return TLElement(x.n(), detail::tl_product(x.terms(), y.terms()));
}

// Joins the top boundary to the bottom boundary.
inline RationalFn close(const TLElement& x) {
  RationalFn total;
  for (const auto& [m, c] : x.terms()) total += c * RationalFn(delta_power(tl_closure_loops(m)));
  return total;
}

// x (in TL_n) placed beside one extra vertical strand on its right.
inline Matching tensor_identity(const Matching& x) {
  const int n = x.size() / 2;
  const int m = n + 1;
  auto point = [&](int p) {
    // old top position k maps to new top position k; bottom points keep their index
    return p < n ? p : 2 * m - 1 - (2 * n - 1 - p);
  };
  std::vector<std::uint8_t> out(static_cast<std::size_t>(2 * m));
  for (int p = 0; p < 2 * n; ++p) out[static_cast<std::size_t>(point(p))] = static_cast<std::uint8_t>(point(x.partner(p)));
  out[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(n + 1);  // bottom n <-> top position n
  out[static_cast<std::size_t>(n + 1)] = static_cast<std::uint8_t>(n);
  return Matching::unchecked(std::move(out));
}

inline TLElement tensor_identity(const TLElement& x) {
  TLElement out(x.n() + 1);
  for (const auto& [m, c] : x.terms()) out.add(tensor_identity(m), c);
  return out;
}

// ---------------------------------------------------------------------------
// Tangle words: products of identities, generators and elementary crossings.

struct TangleLetter {
  enum class Kind { Identity, Generator, Crossing };
  Kind kind = Kind::Identity;
  int position = 1;          // acts on strands position, position+1 (1-based)
  bool over_rising = false;  // crossing: the strand from bottom-left to top-right is over
};

// Kauffman expansion of one crossing. When the over-strand rises to the
// right, the A-smoothing is the identity; otherwise it is the cap-cup.
inline TLElement crossing_element(int n, int position, bool over_rising) {
  const RationalFn weight_a(LaurentPoly::monomial(-1));
  const RationalFn weight_b(LaurentPoly::monomial(1));
  const TLElement id = tl_identity(n);
  const TLElement e = tl_generator(n, position);
  return over_rising ? id * weight_a + e * weight_b : e * weight_a + id * weight_b;
}

// Letters are applied bottom to top.
inline TLElement expand_crossing_tangle(int n, const std::vector<TangleLetter>& word) {
  TLElement result = tl_identity(n);
  for (const auto& letter : word) {
    if (letter.position < 1 || letter.position > n - 1) {
      if (letter.kind != TangleLetter::Kind::Identity)
        throw Error(ErrorKind::WidthMismatch, "letter acts outside TL_" + std::to_string(n));
      continue;
    }
    switch (letter.kind) {
      case TangleLetter::Kind::Identity: break;
      case TangleLetter::Kind::Generator: result = tl_multiply(result, tl_generator(n, letter.position)); break;
      case TangleLetter::Kind::Crossing:
        result = tl_multiply(result, crossing_element(n, letter.position, letter.over_rising));
        break;
    }
  }
  return result;
}

// Catalan(n) basis of TL_n.
inline std::vector<Matching> tl_basis(int n) { return all_matchings(2 * n); }

}  // namespace skein
