#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "polytopal.hpp"

namespace combsphere::io {

using nlohmann::json;

/// One facet per line, vertices space-separated, lines in canonical order.
inline std::string to_text(const Complex& x) {
  std::string out;
  for (const Simplex& f : x.facets()) {
    out += f.to_string();
    out += '\n';
  }
  return out;
}

/// Plain-text facet list; '#' starts a comment running to end of line.
inline Complex parse_text(std::string_view text) {
  std::vector<std::vector<Vertex>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Vertex> facet;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || used == 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      if (value < 1 || value > kMaxVertex)
        throw Error(ErrorCode::LabelOutOfRange, "line " + std::to_string(lineno) + ": " + tok);
      facet.push_back(static_cast<Vertex>(value));
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  return from_facets(facets);
}

inline json to_json(const Complex& x) {
  json facets = json::array();
  for (const Simplex& f : x.facets()) facets.push_back(f.vertices());
  return json{{"dim", x.dim()}, {"facets", std::move(facets)}};
}

inline std::string to_json_text(const Complex& x) { return to_json(x).dump() + "\n"; }

inline Complex complex_from_json(const json& j) {
  try {
    const auto raw = j.at("facets").get<std::vector<std::vector<Vertex>>>();
    Complex x = from_facets(raw);
    if (j.contains("dim") && j.at("dim").get<int>() != x.dim())
      throw Error(ErrorCode::ParseError, "declared dim " + j.at("dim").dump() + " but facets have dim " +
                                             std::to_string(x.dim()));
    return x;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

/// Accepts either format: JSON when the first non-blank character is '{'.
inline Complex parse_complex(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return complex_from_json(j);
  }
  return parse_text(text);
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && q.get_den() == 0))
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

/// {"dim": d, "points": {"label": ["num/den", ...]}}
inline json to_json(const PointConfiguration& pc) {
  json pts = json::object();
  for (const auto& [label, p] : pc.points()) {
    json coords = json::array();
    for (const Rational& c : p) coords.push_back(c.get_str());
    pts[std::to_string(label)] = std::move(coords);
  }
  return json{{"dim", pc.dim()}, {"points", std::move(pts)}};
}

inline PointConfiguration points_from_json(const json& j) {
  try {
    PointConfiguration pc(j.at("dim").get<int>());
    for (const auto& [key, coords] : j.at("points").items()) {
      std::size_t used = 0;
      int label = 0;
      try {
        label = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw Error(ErrorCode::ParseError, "bad label '" + key + "'");
      Point p;
      for (const json& c : coords) {
        if (c.is_string())
          p.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
          p.push_back(Rational(c.get<long>()));
        else
          throw Error(ErrorCode::ParseError, "coordinates must be rational strings or integers");
      }
      pc.add(label, std::move(p));
    }
    return pc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline PointConfiguration parse_points(std::string_view text) {
  try {
    return points_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline json to_json(const Verdict& v) {
  return json{{"status", std::string(to_string(v.status))}, {"reason", v.reason}, {"trace", v.trace}};
}

inline json to_json(const CompletionResult& r) {
  return json{{"sphere", to_json(r.sphere)}, {"contains_input", r.embedding_check}, {"trace", r.trace}};
}

}  // namespace combsphere::io
