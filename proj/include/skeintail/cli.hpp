#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skeintail/acceptance.hpp"
#include "skeintail/corpus.hpp"
#include "skeintail/report.hpp"

namespace skein::cli {

namespace detail {

// A path on disk, or the name of a bundled diagram ("trefoil-std",
// "corpus/trefoil-std.pd").
inline Diagram load(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pd(buf.str());
  }
  const std::string stem = fs::path(arg).stem().string();
  if (corpus::contains(stem)) return corpus::diagram(stem);
  throw Error(ErrorKind::MalformedLine, "no such file or corpus diagram: " + arg);
}

inline std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--n", "expected N or A..B, got '" + s + "'");
  }
}

inline bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedLine:
    case ErrorKind::EdgeLabelCountNotTwo:
    case ErrorKind::DisconnectedCycleInconsistency:
    case ErrorKind::InvalidWidth:
    case ErrorKind::NegativeIndex:
    case ErrorKind::DiagramIsAdequate:
      return true;
    default:
      return false;
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones tails and degree bounds from planar diagrams", "skeintail"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string file;
  int n = 1;
  int n_max = 4;
  int window = 3;
  int width_cap = kDefaultWidthCap;
  int brute_limit = kDefaultBruteForceLimit;
  bool raw = false;
  bool verify = false;
  std::string range = "2..4";

  auto* adequacy = app.add_subcommand("adequacy", "All-A / all-B state graphs and one-edged loops");
  adequacy->add_option("file", file, "PD file or corpus name")->required();

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket by brute-force state sum");
  bracket->add_option("file", file, "PD file or corpus name")->required();
  bracket->add_option("--brute-limit", brute_limit, "Largest crossing count to expand")->check(CLI::Range(0, 62));

  auto* jwc = app.add_subcommand("jw", "Jones-Wenzl projector");
  jwc->add_option("--n", n, "Projector width")->required()->check(CLI::Range(1, kMaxProjectorWidth));
  jwc->add_flag("--verify", verify, "Check annihilation, idempotence and closure");

  auto* jones = app.add_subcommand("jones", "Unreduced colored Jones polynomial");
  jones->add_option("file", file, "PD file or corpus name")->required();
  jones->add_option("--n", n, "Color")->required()->check(CLI::Range(1, kMaxProjectorWidth));
  jones->add_flag("--raw", raw, "Skip the writhe factor");
  jones->add_option("--width-cap", width_cap, "Largest transfer width")->check(CLI::PositiveNumber);

  auto* tail = app.add_subcommand("tail", "Stabilization of the lowest coefficients");
  tail->add_option("file", file, "PD file or corpus name")->required();
  tail->add_option("--n-max", n_max, "Largest color")->check(CLI::Range(2, kMaxProjectorWidth));
  tail->add_option("--window", window, "Number of coefficients")->check(CLI::PositiveNumber);
  tail->add_option("--width-cap", width_cap, "Largest transfer width")->check(CLI::PositiveNumber);

  auto* bounds = app.add_subcommand("bounds", "Degree gap and vanishing window");
  bounds->add_option("file", file, "PD file or corpus name")->required();
  bounds->add_option("--n", range, "Color or range A..B");
  bounds->add_option("--width-cap", width_cap, "Largest transfer width")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

  try {
    if (*adequacy) {
      const Diagram d = detail::load(file);
      const Json j = adequacy_json(d);
      if (json) {
        emit(j);
      } else {
        out << "A-adequate: " << detail::yes_no(j["a_adequate"]) << ", B-adequate: " << detail::yes_no(j["b_adequate"])
            << ", c^ℓ = " << j["loop_crossing_count"].get<int>() << "\n";
        out << "crossings: " << d.crossing_count() << ", writhe: " << writhe(d) << ", |s_A| = " << j["s_a"].get<int>()
            << ", |s_B| = " << j["s_b"].get<int>() << "\n";
      }
      return 0;
    }

    if (*bracket) {
      const Diagram d = detail::load(file);
      const LaurentPoly b = bracket_oracle(d, brute_limit);
      if (json) {
        emit(Json{{"crossings", d.crossing_count()}, {"bracket", poly_json(b)}, {"q_form", b.to_q_string()}});
      } else {
        out << "<D> = " << b.to_q_string() << "\n";
      }
      return 0;
    }

    if (*jwc) {
      const Json j = jw_json(n, verify);
      const bool ok = !verify || j["verification"]["all_passed"].get<bool>();
      if (json) {
        emit(j);
      } else {
        out << "jw(" << n << ") =\n";
        std::istringstream terms(to_tl_element(*scaled_jw(n)).to_string());
        for (std::string line; std::getline(terms, line);) out << "  " << line << "\n";
        if (verify) {
          const auto& v = j["verification"];
          bool annihilated = true;
          for (const auto& a : v["annihilated"]) annihilated = annihilated && a.get<bool>();
          bool caps = true;
          for (const auto& c : v["cap_kills_projector"]) caps = caps && c.get<bool>();
          out << "e_i annihilation: " << detail::yes_no(annihilated)
              << "\nidentity coefficient 1: " << detail::yes_no(v["identity_coefficient_one"])
              << "\nidempotent: " << detail::yes_no(v["idempotent"])
              << "\nclosure: " << v["closure"]["q_form"].get<std::string>() << " " << detail::yes_no(v["closure_ok"])
              << "\ncap kills projector: " << detail::yes_no(caps) << "\n";
        }
      }
      return ok ? 0 : 1;
    }

    if (*jones) {
      const Diagram d = detail::load(file);
      const auto r = colored_jones(d, n, ColoredJonesOptions{width_cap, raw});
      if (json) {
        emit(colored_jones_json(r));
      } else {
        out << "J(q; " << n << ") = " << r.polynomial.to_q_string() << "\n";
        if (!r.polynomial.is_zero()) out << "d(" << n << ") = " << r.d_n.to_string() << "\n";
      }
      return 0;
    }

    if (*tail) {
      const Diagram d = detail::load(file);
      const TailReport r = stabilization_check(d, n_max, window, TailOptions{width_cap});
      if (json) {
        emit(tail_json(r));
      } else {
        out << "mode: " << r.mode << "\n";
        for (const auto& w : r.warnings) out << "warning: " << w << "\n";
        out << "n\td(n)\th_n\tlowest coefficients\n";
        for (const auto& row : r.rows) {
          out << row.n << "\t" << row.d_n.to_string() << "\t" << row.h_n.to_string() << "\t";
          for (std::size_t i = 0; i < row.coefficients.size(); ++i) out << (i ? " " : "") << row.coefficients[i].str();
          out << "\n";
        }
        for (const auto& b : r.betas)
          out << "beta_" << b.i << " = " << b.value.str() << (b.stable ? "" : " (unstable)")
              << (b.raw_stable ? "" : " (sign alternates)") << "\n";
        out << "stabilization: " << (r.stabilization_ok ? "pass" : "fail") << "\n";
        if (r.stabilization_ok) out << "tail: " << tail_truncation(r).to_q_string() << " + ...\n";
      }
      return r.stabilization_ok ? 0 : 1;
    }

    if (*bounds) {
      const Diagram d = detail::load(file);
      const auto [lo, hi] = detail::parse_range(range);
      if (lo < 2 || hi < lo) throw CLI::ValidationError("--n", "range must satisfy 2 <= A <= B");
      const bool adequate = is_a_adequate(d);
      bool ok = true;
      Json rows = Json::array();
      std::ostringstream text;
      text << "n\td(n)\th_n\tverdict\n";
      for (int k = lo; k <= hi; ++k) {
        if (adequate) {
          // Sharp bound: no gap, no window to check.
          const auto j = colored_jones(d, k, ColoredJonesOptions{width_cap, false});
          const bool sharp = j.d_n == h_n(d, k);
          ok = ok && sharp;
          rows.push_back(Json{{"n", k}, {"d_n", half_json(j.d_n)}, {"h_n", half_json(h_n(d, k))}, {"sharp", sharp}});
          text << k << "\t" << j.d_n.to_string() << "\t" << h_n(d, k).to_string() << "\t"
               << (sharp ? "d(n) = h_n" : "d(n) != h_n") << "\n";
        } else {
          const GapVerdict g = gap_check(d, k, TailOptions{width_cap});
          const WindowVerdict w = window_check(d, k, TailOptions{width_cap});
          ok = ok && g.pass && w.pass;
          rows.push_back(Json{{"n", k}, {"gap", gap_json(g)}, {"window", window_json(w)}});
          text << k << "\t" << g.d_n.to_string() << "\t" << g.h_n.to_string() << "\tgap " << g.gap.to_string()
               << " >= " << g.bound.to_string() << " " << (g.pass ? "pass" : "fail") << ", window below "
               << w.threshold.to_string() << " " << (w.pass ? "pass" : "fail") << "\n";
        }
      }
      if (json)
        emit(Json{{"a_adequate", adequate}, {"per_n", rows}, {"pass", ok}});
      else
        out << text.str();
      return ok ? 0 : 1;
    }

    if (*selftest) {
      const auto s = acceptance::selftest();
      if (json)
        emit(s.json);
      else
        out << s.text;
      return s.json["all_passed"].get<bool>() ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::usage_kind(e.kind()) ? 2 : 1;
  }
  return 2;
}

}  // namespace skein::cli
