#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "skeintail/corpus.hpp"
#include "skeintail/oracle.hpp"
#include "skeintail/report.hpp"
#include "skeintail/tail.hpp"

namespace skein::acceptance {

struct Outcome {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  long long elapsed_ms = 0;
  long long limit_ms = 0;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline const LaurentPoly& unknot_value(int n) {
  static std::map<int, LaurentPoly> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, projector_closure(n)).first;
  return it->second;
}

inline Outcome a1() {
  Outcome o{"A1", "skein axioms and R2/R3 invariance of the bracket"};
  std::ostringstream out;
  const bool circle = bracket_oracle(corpus::diagram("unknot-0")) == delta();
  out << "<O> = " << bracket_oracle(corpus::diagram("unknot-0")).to_q_string();
  bool moves = true;
  for (const auto& m : corpus::manifest().at("moves")) {
    const auto from = m.at("from").get<std::string>();
    const auto to = m.at("to").get<std::string>();
    const bool same = bracket_oracle(corpus::diagram(from)) == bracket_oracle(corpus::diagram(to));
    out << "; " << m.at("kind").get<std::string>() << " " << from << " -> " << to << ": " << (same ? "equal" : "DIFFER");
    moves = moves && same;
  }
  o.pass = circle && moves;
  o.detail = out.str();
  return o;
}

inline Outcome a2() {
  Outcome o{"A2", "Jones-Wenzl properties for n = 1..5"};
  std::ostringstream out;
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const JWReport r = verify_jw(n);
    bool caps = true;
    for (int i = 1; i < n; ++i) caps = caps && cap_kills_projector(n, i);
    const bool all = r.all_passed() && caps;
    ok = ok && all;
    out << (n > 1 ? "; " : "") << "n=" << n << (all ? " ok" : " FAILED");
  }
  o.pass = ok;
  o.detail = out.str();
  return o;
}

inline Outcome a3() {
  Outcome o{"A3", "unknot diagrams give (-1)^n [n] for n = 1..4"};
  std::ostringstream out;
  bool ok = true;
  for (const auto& name : corpus::diagrams_of("unknot")) {
    const Diagram d = corpus::diagram(name);
    bool all = true;
    for (int n = 1; n <= 4; ++n) all = all && colored_jones(d, n).polynomial == unknot_value(n);
    ok = ok && all;
    out << (out.tellp() > 0 ? "; " : "") << name << (all ? " ok" : " FAILED");
  }
  o.pass = ok;
  o.detail = out.str();
  return o;
}

inline Outcome a4() {
  Outcome o{"A4", "transfer evaluation equals the brute-force state sum"};
  std::ostringstream out;
  bool ok = true;
  int checked = 0;
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 2; ++n) {
      if (n == 2 && d.crossing_count() > 3) continue;
      const bool same = cable_evaluation(d, n) == cable_state_sum(d, n);
      ++checked;
      if (!same) out << (out.tellp() > 0 ? "; " : "") << name << " n=" << n << " DIFFER";
      ok = ok && same;
    }
  }
  o.pass = ok;
  o.detail = std::to_string(checked) + " (diagram, n) pairs compared" + (out.tellp() > 0 ? ": " + out.str() : "");
  return o;
}

inline Outcome a5() {
  Outcome o{"A5", "R1 calibration of smoothing and sign conventions"};
  const LaurentPoly circle = delta();
  const Diagram neg = corpus::diagram("unknot-kink-neg");
  const Diagram pos = corpus::diagram("unknot-kink-pos");
  const LaurentPoly minus_q32 = LaurentPoly::monomial(3, -1);
  const LaurentPoly minus_qm32 = LaurentPoly::monomial(-3, -1);
  // Two-term expansion straight from the skein relation.
  auto two_term = [](const Diagram& d) {
    const int a = resolve(d, KauffmanState::uniform(1, Smoothing::A)).circle_count;
    const int b = resolve(d, KauffmanState::uniform(1, Smoothing::B)).circle_count;
    return delta_power(a).shifted(-1) + delta_power(b).shifted(1);
  };
  const bool neg_ok = bracket_oracle(neg) == minus_q32 * circle && two_term(neg) == minus_q32 * circle;
  const bool pos_ok = bracket_oracle(pos) == minus_qm32 * circle && two_term(pos) == minus_qm32 * circle;
  const bool cancel = writhe_factor(1, writhe(neg)) * minus_q32 == LaurentPoly::constant(1) &&
                      writhe_factor(1, writhe(pos)) * minus_qm32 == LaurentPoly::constant(1);
  o.pass = neg_ok && pos_ok && cancel;
  // The -q^(3/2) kink is the one whose writhe factor cancels it, which the
  // normalization forces to be writhe -1.
  o.detail = "X 1 2 2 1: writhe " + std::to_string(writhe(neg)) + ", factor " + minus_q32.to_q_string() + " " +
             yes_no(neg_ok) + "; X 1 1 2 2: writhe " + std::to_string(writhe(pos)) + ", factor " +
             minus_qm32.to_q_string() + " " + yes_no(pos_ok) + "; writhe factor cancels both " + yes_no(cancel);
  return o;
}

inline Outcome a6() {
  Outcome o{"A6", "tail stabilization for trefoil-std, n_max = 4, window 2"};
  const TailReport r = stabilization_check(corpus::diagram("trefoil-std"), 4, 2);
  std::ostringstream out;
  // Literal reading: both coefficients agree across all of n = 2, 3, 4.
  bool literal = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (const auto& row : r.rows) literal = literal && row.coefficients[i] == r.rows.front().coefficients[i];
  for (const auto& row : r.rows) {
    out << "n=" << row.n << " d(n)=" << row.d_n.to_string() << " low=[";
    for (std::size_t i = 0; i < row.coefficients.size(); ++i) out << (i ? "," : "") << row.coefficients[i].str();
    out << "]; ";
  }
  for (const auto& b : r.betas) out << "beta_" << b.i << "=" << b.value.str() << " ";
  o.pass = r.stabilization_ok && literal;
  o.detail = out.str() + "agree across n=2..4: " + yes_no(literal);
  return o;
}

inline Outcome a7() {
  Outcome o{"A7", "degree gap for non-A-adequate diagrams"};
  std::ostringstream out;
  bool ok = true;
  const Diagram kink = corpus::diagram("unknot-kink-neg");
  for (int n = 2; n <= 5; ++n) {
    const GapVerdict v = gap_check(kink, n);
    const bool expected = v.d_n == HalfInteger::from_integer(-n) && v.h_n == HalfInteger::from_integer(-n * n - 2 * n);
    ok = ok && v.pass && expected;
    out << "kink n=" << n << " d=" << v.d_n.to_string() << " h=" << v.h_n.to_string() << " gap=" << v.gap.to_string()
        << (v.pass && expected ? "" : " FAILED") << "; ";
  }
  const Diagram clasp = corpus::diagram("unlink-clasp");
  for (int n = 2; n <= 3; ++n) {
    const GapVerdict v = gap_check(clasp, n);
    ok = ok && v.pass;
    out << "clasp n=" << n << " d=" << v.d_n.to_string() << " h=" << v.h_n.to_string() << " gap=" << v.gap.to_string()
        << (v.pass ? "" : " FAILED") << (n < 3 ? "; " : "");
  }
  o.pass = ok;
  o.detail = out.str();
  return o;
}

inline Outcome a8() {
  Outcome o{"A8", "vanishing window below n/2 - c/2 - (3/2)c^l"};
  std::ostringstream out;
  bool ok = true;
  for (const std::string name : {"unknot-kink-neg", "unlink-clasp"}) {
    for (int n = 2; n <= 3; ++n) {
      const WindowVerdict v = window_check(corpus::diagram(name), n);
      ok = ok && v.pass;
      out << name << " n=" << n << " threshold=" << v.threshold.to_string() << " lowest=" << v.lowest.to_string()
          << (v.pass ? "" : " FAILED") << "; ";
    }
  }
  o.pass = ok;
  o.detail = out.str();
  return o;
}

inline Outcome a9() {
  Outcome o{"A9", "d(n) = h_n(D) for adequate trefoil and figure-eight"};
  std::ostringstream out;
  bool ok = true;
  for (const std::string name : {"trefoil-std", "figure8-std"}) {
    const Diagram d = corpus::diagram(name);
    for (int n = 2; n <= 3; ++n) {
      const auto j = colored_jones(d, n);
      const bool eq = j.d_n == h_n(d, n);
      ok = ok && eq;
      out << name << " n=" << n << " d=" << j.d_n.to_string() << " h=" << h_n(d, n).to_string() << (eq ? "" : " FAILED")
          << "; ";
    }
  }
  o.pass = ok;
  o.detail = out.str();
  return o;
}

}  // namespace detail

struct Criterion {
  std::string id;
  long long limit_ms;
  std::function<Outcome()> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {"A1", 1000, detail::a1},          {"A2", 30000, detail::a2},  {"A3", 120000, detail::a3},
      {"A4", 300000, detail::a4},        {"A5", 1000, detail::a5},   {"A6", 600000, detail::a6},
      {"A7", 300000, detail::a7},        {"A8", 300000, detail::a8}, {"A9", 600000, detail::a9},
  };
}

inline std::vector<Outcome> run_criteria() {
  std::vector<Outcome> out;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.id = c.id;
      o.title = "raised an error";
      o.pass = false;
      o.detail = e.what();
    }
    o.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    o.limit_ms = c.limit_ms;
    out.push_back(o);
  }
  return out;
}

// Timing-free report, so repeated runs are byte-identical.
inline Json report_json(const std::vector<Outcome>& outcomes) {
  Json j;
  Json rows = Json::array();
  bool all = true;
  for (const auto& o : outcomes) {
    rows.push_back(Json{{"id", o.id}, {"title", o.title}, {"pass", o.pass}, {"detail", o.detail}});
    all = all && o.pass;
  }
  j["criteria"] = rows;
  j["all_passed"] = all;
  return j;
}

inline std::string report_text(const std::vector<Outcome>& outcomes) {
  std::string out;
  for (const auto& o : outcomes)
    out += o.id + " " + (o.pass ? "PASS" : "FAIL") + " " + o.title + ": " + o.detail + "\n";
  return out;
}

// Runs the suite twice and compares the reports.
struct SelfTest {
  std::vector<Outcome> outcomes;
  bool deterministic = false;
  std::string text;
  Json json;
};

inline SelfTest selftest() {
  SelfTest s;
  s.outcomes = run_criteria();
  const std::vector<Outcome> again = run_criteria();
  s.deterministic = report_json(s.outcomes).dump() == report_json(again).dump();
  Outcome a10{"A10", "determinism: two runs give byte-identical reports", s.deterministic,
              "integer and rational arithmetic only; second run " + std::string(s.deterministic ? "identical" : "DIFFERS")};
  s.outcomes.push_back(a10);
  s.text = report_text(s.outcomes);
  s.json = report_json(s.outcomes);
  return s;
}

}  // namespace skein::acceptance
