#pragma once

#include <limits>
#include <string>

#include <json.hpp>

#include "skeintail/colored_jones.hpp"
#include "skeintail/jones_wenzl.hpp"
#include "skeintail/states.hpp"
#include "skeintail/tail.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

// Coefficients that fit in 64 bits are numbers, larger ones decimal strings.
inline Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return c.convert_to<long long>();
  return c.str();
}

// [[v_exponent, coefficient], ...], exponent ascending.
inline Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, integer_json(c)}));
  return out;
}

inline LaurentPoly poly_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    const Json& c = t.at(1);
    terms.emplace_back(t.at(0).get<int>(), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline Json rational_json(const RationalFn& r) {
  return Json{{"numerator", poly_json(r.numerator())}, {"denominator", poly_json(r.denominator())}, {"q_form", r.to_q_string()}};
}

inline Json half_json(HalfInteger h) { return h.to_string(); }

inline Json adequacy_json(const Diagram& d) {
  const StateGraph a = all_a_graph(d);
  const StateGraph b = all_b_graph(d);
  Json j;
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["writhe"] = writhe(d);
  j["s_a"] = a.vertex_count;
  j["s_b"] = b.vertex_count;
  j["a_adequate"] = a.loop_crossings().empty();
  j["b_adequate"] = b.loop_crossings().empty();
  j["loop_crossing_count"] = a.loop_crossings().size();
  j["loop_crossings"] = a.loop_crossings();
  return j;
}

inline Json colored_jones_json(const ColoredJonesResult& r) {
  Json j;
  j["n"] = r.n;
  j["polynomial"] = poly_json(r.polynomial);
  j["q_form"] = r.polynomial.to_q_string();
  j["d_n"] = r.polynomial.is_zero() ? Json(nullptr) : half_json(r.d_n);
  j["writhe"] = r.writhe;
  j["writhe_factor_applied"] = r.writhe_factor_applied;
  j["peak_width"] = r.peak_width;
  j["integer_powers"] = r.integer_powers;
  return j;
}

inline Json jw_json(int n, bool verify) {
  const TLElement p = jw(n);
  Json j;
  j["n"] = n;
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> partners(m.partners().begin(), m.partners().end());
    terms.push_back(Json{{"matching", partners}, {"coefficient", rational_json(c)}});
  }
  j["terms"] = terms;
  if (verify) {
    const JWReport r = verify_jw(n);
    Json v;
    v["annihilated"] = r.annihilated;
    v["identity_coefficient_one"] = r.identity_coefficient_one;
    v["idempotent"] = r.idempotent;
    v["closure"] = rational_json(r.closure);
    v["closure_ok"] = r.closure_ok;
    std::vector<bool> caps;
    for (int i = 1; i < n; ++i) caps.push_back(cap_kills_projector(n, i));
    v["cap_kills_projector"] = caps;
    v["all_passed"] = r.all_passed();
    j["verification"] = v;
  }
  return j;
}

inline Json tail_json(const TailReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["a_adequate"] = r.a_adequate;
  j["b_adequate"] = r.b_adequate;
  j["n_max"] = r.n_max;
  j["window"] = r.window;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json coeffs = Json::array();
    for (const auto& c : row.coefficients) coeffs.push_back(integer_json(c));
    rows.push_back(Json{{"n", row.n},
                        {"d_n", half_json(row.d_n)},
                        {"h_n", half_json(row.h_n)},
                        {"gap", half_json(row.d_n - row.h_n)},
                        {"lowest_sign", row.lowest_sign},
                        {"low_coefficients", coeffs}});
  }
  j["per_n"] = rows;
  Json betas = Json::array();
  for (const auto& b : r.betas)
    betas.push_back(Json{{"i", b.i},
                         {"beta", integer_json(b.value)},
                         {"raw", integer_json(b.raw_value)},
                         {"stable", b.stable},
                         {"raw_stable", b.raw_stable},
                         {"stable_from", b.stable_from ? Json(*b.stable_from) : Json(nullptr)}});
  j["betas"] = betas;
  j["stabilization_ok"] = r.stabilization_ok;
  j["tail"] = r.stabilization_ok ? poly_json(tail_truncation(r)) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

inline Json gap_json(const GapVerdict& v) {
  return Json{{"n", v.n},      {"d_n", half_json(v.d_n)},     {"h_n", half_json(v.h_n)},
              {"gap", half_json(v.gap)}, {"bound", half_json(v.bound)}, {"pass", v.pass}};
}

inline Json window_json(const WindowVerdict& v) {
  Json violations = Json::array();
  for (auto h : v.violations) violations.push_back(half_json(h));
  return Json{{"n", v.n},
              {"threshold", half_json(v.threshold)},
              {"lowest", half_json(v.lowest)},
              {"violations", violations},
              {"pass", v.pass}};
}

}  // namespace skein
