#pragma once

#include <array>
#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skeintail/errors.hpp"

namespace skein {

// A position on a crossing: slot 0 is the incoming under-strand, slots
// 1..3 follow counterclockwise.
struct Slot {
  int crossing = -1;
  int position = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Crossing {
  std::array<int, 4> edges{};  // (a, b, c, d), counterclockwise from incoming under
  int sign = 0;                // +1 or -1

  // Slot index where the over-strand enters (1 or 3).
  int over_entry() const noexcept { return sign > 0 ? 3 : 1; }
  int over_exit() const noexcept { return sign > 0 ? 1 : 3; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented planar link diagram given by a PD code. Edge labels are
// normalized to 1..edge_count, numbered consecutively along each component.
class Diagram {
 public:
  Diagram() = default;

  // Strict constructor: the under-strand of every tuple must be listed
  // incoming first, consistently with one orientation per component.
  static Diagram from_crossings(const std::vector<std::array<int, 4>>& tuples, int free_circles = 0) {
    return Diagram(tuples, free_circles, false);
  }

  // Accepts tuples whose under-strand may be listed in either direction and
  // rotates them by two positions where needed. The smoothings of a tuple
  // are unchanged by that rotation.
  static Diagram from_unoriented(const std::vector<std::array<int, 4>>& tuples, int free_circles = 0) {
    return Diagram(tuples, free_circles, true);
  }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int free_circles() const noexcept { return free_circles_; }

  // Components that pass through at least one crossing come first, then one
  // index per free circle.
  int crossing_component_count() const noexcept { return static_cast<int>(component_edges_.size()); }
  int component_count() const noexcept { return crossing_component_count() + free_circles_; }

  int component_of_edge(int label) const { return edge_component_.at(checked_label(label)); }
  const std::vector<int>& component_edges(int component) const { return component_edges_.at(component); }

  // Slot the edge leaves from, and the slot it enters.
  Slot edge_tail(int label) const { return edge_tail_.at(checked_label(label)); }
  Slot edge_head(int label) const { return edge_head_.at(checked_label(label)); }

  int edge_at(Slot s) const { return crossings_.at(s.crossing).edges.at(s.position); }

  // The other slot carrying the same edge label.
  Slot opposite_end(Slot s) const {
    const int e = edge_at(s);
    const Slot t = edge_tail(e);
    return t == s ? edge_head(e) : t;
  }

  std::vector<std::array<int, 4>> tuples() const {
    std::vector<std::array<int, 4>> out;
    out.reserve(crossings_.size());
    for (const auto& c : crossings_) out.push_back(c.edges);
    return out;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_circles_ == b.free_circles_;
  }

 private:
  Diagram(std::vector<std::array<int, 4>> tuples, int free_circles, bool reorient);

  int checked_label(int label) const {
    if (label < 1 || label > edge_count())
      throw Error(ErrorKind::IndexOutOfRange, "edge label " + std::to_string(label));
    return label;
  }

  std::vector<Crossing> crossings_;
  int free_circles_ = 0;
  std::vector<int> edge_component_;  // indexed by label, entry 0 unused
  std::vector<Slot> edge_tail_;
  std::vector<Slot> edge_head_;
  std::vector<std::vector<int>> component_edges_;
};

namespace detail {

struct Traversal {
  std::vector<int> edges;     // edge labels in travel order
  std::vector<Slot> entries;  // slot where each edge enters its crossing
};

inline Slot next_slot(Slot s) { return Slot{s.crossing, (s.position + 2) % 4}; }

// Walks one component starting with `first_edge` entering at `entry`.
inline Traversal walk(const std::vector<std::array<int, 4>>& tuples,
                      const std::map<int, std::array<Slot, 2>>& slots, int first_edge, Slot entry) {
  Traversal t;
  int edge = first_edge;
  Slot in = entry;
  for (;;) {
    t.edges.push_back(edge);
    t.entries.push_back(in);
    const Slot out = next_slot(in);
    edge = tuples[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.position)];
    const auto& pair = slots.at(edge);
    in = pair[0] == out ? pair[1] : pair[0];
    if (edge == first_edge) break;
    if (t.edges.size() > slots.size())
      throw Error(ErrorKind::DisconnectedCycleInconsistency, "walk from edge " + std::to_string(first_edge) + " does not return");
  }
  if (!(in == entry))
    throw Error(ErrorKind::DisconnectedCycleInconsistency,
                "component through edge " + std::to_string(first_edge) + " does not close");
  return t;
}

}  // namespace detail

inline Diagram::Diagram(std::vector<std::array<int, 4>> tuples, int free_circles, bool reorient)
    : free_circles_(free_circles) {
  if (free_circles < 0) throw Error(ErrorKind::MalformedLine, "negative free circle count");
  std::map<int, std::array<Slot, 2>> slots;
  std::map<int, int> seen;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (int p = 0; p < 4; ++p) {
      const int label = tuples[i][static_cast<std::size_t>(p)];
      if (label <= 0) throw Error(ErrorKind::MalformedLine, "edge labels must be positive");
      int& count = seen[label];
      if (count >= 2)
        throw Error(ErrorKind::EdgeLabelCountNotTwo, "edge " + std::to_string(label) + " appears more than twice");
      slots[label][static_cast<std::size_t>(count)] = Slot{static_cast<int>(i), p};
      ++count;
    }
  }
  for (const auto& [label, count] : seen)
    if (count != 2)
      throw Error(ErrorKind::EdgeLabelCountNotTwo, "edge " + std::to_string(label) + " appears once");

  // Choose a direction for every component. Entering a crossing at slot 2
  // means its under-strand runs backwards.
  struct Choice {
    int first_edge;
    Slot entry;
  };
  std::vector<Choice> choices;
  std::map<int, bool> visited;
  auto run_orientation = [&](bool allow_rotation) {
    choices.clear();
    visited.clear();
    for (const auto& [label, pair] : slots) {
      if (visited[label]) continue;
      detail::Traversal forward = detail::walk(tuples, slots, label, pair[1]);
      int agree = 0;
      int disagree = 0;
      for (const Slot& s : forward.entries) {
        if (s.position == 0) ++agree;
        if (s.position == 2) ++disagree;
      }
      Slot entry = pair[1];
      if (agree > 0 && disagree > 0) {
        if (!allow_rotation)
          throw Error(ErrorKind::DisconnectedCycleInconsistency,
                      "under-strands of component through edge " + std::to_string(label) +
                          " disagree on orientation");
        for (const Slot& s : forward.entries) {
          if (s.position != 2) continue;
          auto& t = tuples[static_cast<std::size_t>(s.crossing)];
          t = {t[2], t[3], t[0], t[1]};
        }
        return true;  // slot table is stale now
      } else if (disagree > 0) {
        entry = pair[0];
      } else if (agree == 0) {
        // Only over-crossings: follow the edge numbering when it decides.
        const Slot back_out = detail::next_slot(pair[0]);
        const int succ_forward = forward.edges.size() > 1 ? forward.edges[1] : label;
        const int succ_backward =
            tuples[static_cast<std::size_t>(back_out.crossing)][static_cast<std::size_t>(back_out.position)];
        if (succ_backward == label + 1 && succ_forward != label + 1) entry = pair[0];
      }
      for (int e : forward.edges) visited[e] = true;
      choices.push_back({label, entry});
    }
    return false;
  };
  // Each pass repairs one component; rebuild the slot table and go again.
  while (run_orientation(reorient)) {
    slots.clear();
    std::map<int, int> counts;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (int p = 0; p < 4; ++p) {
        const int label = tuples[i][static_cast<std::size_t>(p)];
        slots[label][static_cast<std::size_t>(counts[label]++)] = Slot{static_cast<int>(i), p};
      }
  }

  // Relabel consecutively along each component.
  std::map<int, int> relabel;
  std::vector<detail::Traversal> walks;
  int next_label = 1;
  for (const Choice& c : choices) {
    walks.push_back(detail::walk(tuples, slots, c.first_edge, c.entry));
    for (int e : walks.back().edges) relabel[e] = next_label++;
  }
  const int edges = next_label - 1;
  edge_component_.assign(static_cast<std::size_t>(edges + 1), -1);
  edge_tail_.assign(static_cast<std::size_t>(edges + 1), Slot{});
  edge_head_.assign(static_cast<std::size_t>(edges + 1), Slot{});
  crossings_.resize(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (int p = 0; p < 4; ++p)
      crossings_[i].edges[static_cast<std::size_t>(p)] = relabel.at(tuples[i][static_cast<std::size_t>(p)]);
  for (std::size_t k = 0; k < walks.size(); ++k) {
    std::vector<int> comp;
    for (std::size_t j = 0; j < walks[k].edges.size(); ++j) {
      const int e = relabel.at(walks[k].edges[j]);
      const Slot in = walks[k].entries[j];
      comp.push_back(e);
      edge_component_[static_cast<std::size_t>(e)] = static_cast<int>(k);
      edge_head_[static_cast<std::size_t>(e)] = in;
      const Slot& pair0 = slots.at(walks[k].edges[j])[0];
      const Slot& pair1 = slots.at(walks[k].edges[j])[1];
      edge_tail_[static_cast<std::size_t>(e)] = pair0 == in ? pair1 : pair0;
      if (in.position == 1) crossings_[static_cast<std::size_t>(in.crossing)].sign = -1;
      if (in.position == 3) crossings_[static_cast<std::size_t>(in.crossing)].sign = +1;
    }
    component_edges_.push_back(std::move(comp));
  }
}

inline int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

// Exchanges over and under at every crossing. The new incoming under-strand
// is the old incoming over-strand, so each tuple rotates by one position.
inline Diagram mirror(const Diagram& d) {
  std::vector<std::array<int, 4>> tuples;
  for (const auto& c : d.crossings()) {
    const auto& [a, b, cc, dd] = c.edges;
    if (c.sign > 0)
      tuples.push_back({dd, a, b, cc});
    else
      tuples.push_back({b, cc, dd, a});
  }
  return Diagram::from_crossings(tuples, d.free_circles());
}

// ---------------------------------------------------------------------------
// PD text and JSON forms

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline Diagram parse_pd_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::MalformedLine, std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::MalformedLine, "JSON diagram must be an object");
  std::vector<std::array<int, 4>> tuples;
  int free_circles = 0;
  try {
    if (j.contains("crossings")) {
      for (const auto& row : j.at("crossings")) {
        if (!row.is_array() || row.size() != 4)
          throw Error(ErrorKind::MalformedLine, "crossing must have four labels");
        tuples.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
      }
    }
    if (j.contains("free_circles")) free_circles = j.at("free_circles").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::MalformedLine, std::string("invalid JSON diagram: ") + ex.what());
  }
  return Diagram::from_crossings(tuples, free_circles);
}

}  // namespace detail

// Lines "X a b c d" and "O"; '/' also separates entries; '#' starts a
// comment. Text starting with '{' is read as the JSON form.
inline Diagram parse_pd(const std::string& text) {
  const std::string stripped = detail::trim(text);
  if (!stripped.empty() && stripped.front() == '{') return detail::parse_pd_json(stripped);

  std::vector<std::array<int, 4>> tuples;
  int free_circles = 0;
  std::istringstream lines(text);
  std::string line;
  int line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t slash = line.find('/', start);
      if (slash == std::string::npos) slash = line.size();
      const std::string entry = detail::trim(std::string_view(line).substr(start, slash - start));
      start = slash + 1;
      if (entry.empty()) continue;
      std::istringstream tokens(entry);
      std::vector<std::string> words;
      for (std::string w; tokens >> w;) words.push_back(w);
      const auto where = " at line " + std::to_string(line_number) + ": '" + entry + "'";
      if (words.size() == 1 && words[0] == "O") {
        ++free_circles;
        continue;
      }
      if (words.size() != 5 || words[0] != "X") throw Error(ErrorKind::MalformedLine, "expected 'X a b c d' or 'O'" + where);
      std::array<int, 4> t{};
      for (std::size_t k = 0; k < 4; ++k) {
        const std::string& w = words[k + 1];
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
            w.size() > 9)
          throw Error(ErrorKind::MalformedLine, "expected positive integer label" + where);
        t[k] = std::stoi(w);
        if (t[k] <= 0) throw Error(ErrorKind::MalformedLine, "edge labels must be positive" + where);
      }
      tuples.push_back(t);
    }
  }
  return Diagram::from_crossings(tuples, free_circles);
}

inline std::string to_pd_text(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    out += "X";
    for (int e : c.edges) out += " " + std::to_string(e);
    out += "\n";
  }
  for (int i = 0; i < d.free_circles(); ++i) out += "O\n";
  return out;
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings()) j["crossings"].push_back(c.edges);
  j["free_circles"] = d.free_circles();
  return j;
}

}  // namespace skein
