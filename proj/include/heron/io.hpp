#pragma once

// Plain-text and line-delimited JSON formats.
//
// Vertex text: one vertex per line as comma-separated integers s,p,q,r
// (brackets optional). Blank lines and lines starting with '#' are ignored.
// Records: one JSON object per line with keys edges, permutation, rotors,
// vertices, canonical-strength.

#include <istream>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heron/embedding.hpp"

namespace heron {

inline std::string format_quat(const Quat& x) {
  std::ostringstream os;
  os << x.s << ',' << x.p << ',' << x.q << ',' << x.r;
  return os.str();
}

inline void write_vertices(std::ostream& os, const std::vector<Quat>& vertices) {
  for (const Quat& v : vertices) os << format_quat(v) << '\n';
}

template <std::size_t Dim>
std::vector<Quat> to_quats(const PointSet<Dim>& pts) {
  std::vector<Quat> out;
  for (const auto& p : pts) {
    Quat x{1};
    x.p = p[0];
    x.q = p[1];
    if constexpr (Dim > 2) x.r = p[2];
    out.push_back(x);
  }
  return out;
}

inline std::string_view strength_name(Strength s) { return s == Strength::weak ? "weak" : "strong"; }

struct Record {
  std::vector<Length> edges;
  std::optional<VertexPerm> permutation;
  std::vector<Quat> rotors;
  std::vector<Quat> vertices;
  std::optional<Strength> strength;
};

inline nlohmann::ordered_json quat_json(const Quat& x) {
  return nlohmann::ordered_json::array({to_i64(x.s), to_i64(x.p), to_i64(x.q), to_i64(x.r)});
}

inline std::string to_record_line(const Record& r) {
  nlohmann::ordered_json j;
  j["edges"] = r.edges;
  j["permutation"] = r.permutation ? nlohmann::ordered_json(r.permutation->name()) : nlohmann::ordered_json(nullptr);
  j["rotors"] = nlohmann::ordered_json::array();
  for (const Quat& x : r.rotors) j["rotors"].push_back(quat_json(x));
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Quat& v : r.vertices) j["vertices"].push_back(quat_json(v));
  j["canonical-strength"] =
      r.strength ? nlohmann::ordered_json(std::string(strength_name(*r.strength))) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

/// Vertices from text lines or from the first record line found.
inline std::vector<Quat> read_vertices(std::istream& in) {
  std::vector<Quat> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == '{') {
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("vertices")) throw std::invalid_argument("malformed record line");
      out.clear();
      for (const auto& v : j["vertices"]) {
        const auto c = v.get<std::vector<std::int64_t>>();
        if (c.size() != 4) throw std::invalid_argument("record vertex needs four components");
        out.push_back({c[0], c[1], c[2], c[3]});
      }
      return out;
    }
    const auto c = parse_lengths(line);
    if (c.size() != 4) throw std::invalid_argument("vertex line needs four integers s,p,q,r: '" + line + "'");
    out.push_back({c[0], c[1], c[2], c[3]});
  }
  return out;
}

}  // namespace heron
