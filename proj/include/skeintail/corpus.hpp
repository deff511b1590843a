#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skeintail/corpus_data.hpp"
#include "skeintail/diagram.hpp"

namespace skein::corpus {

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& f : corpus_data::kFiles) out.emplace_back(f.name);
  return out;
}

inline bool contains(const std::string& name) {
  for (const auto& f : corpus_data::kFiles)
    if (f.name == name) return true;
  return false;
}

inline std::string text(const std::string& name) {
  for (const auto& f : corpus_data::kFiles)
    if (f.name == name) return std::string(f.text);
  throw Error(ErrorKind::IndexOutOfRange, "no corpus diagram named '" + name + "'");
}

inline Diagram diagram(const std::string& name) { return parse_pd(text(name)); }

inline const nlohmann::json& manifest() {
  static const nlohmann::json m = nlohmann::json::parse(corpus_data::kManifest);
  return m;
}

inline const nlohmann::json& entry(const std::string& name) {
  for (const auto& d : manifest().at("diagrams"))
    if (d.at("name") == name) return d;
  throw Error(ErrorKind::IndexOutOfRange, "manifest has no entry '" + name + "'");
}

// Names of corpus links drawn with the given adequacy.
inline std::vector<std::string> select(bool a_adequate) {
  std::vector<std::string> out;
  for (const auto& d : manifest().at("diagrams"))
    if (d.at("a_adequate").get<bool>() == a_adequate) out.push_back(d.at("name").get<std::string>());
  return out;
}

inline std::vector<std::string> diagrams_of(const std::string& link) {
  std::vector<std::string> out;
  for (const auto& d : manifest().at("diagrams"))
    if (d.at("link") == link) out.push_back(d.at("name").get<std::string>());
  return out;
}

}  // namespace skein::corpus
