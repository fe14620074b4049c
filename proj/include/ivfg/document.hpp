#pragma once

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ivfg/error.hpp"
#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/morphism.hpp"
#include "ivfg/rational.hpp"

namespace ivfg {

/// Parse failure with the JSON path (or line) that caused it.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string context, const std::string& what)
      : Error(code, context + ": " + what), context_(std::move(context)) {}

  [[nodiscard]] const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(ErrorCode::UnknownField, path, "unknown field \"" + key + "\"");
    }
  }
}

inline const json& require(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ErrorCode::SyntaxError, path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_string()) throw ParseError(ErrorCode::SyntaxError, path + "." + key, "expected a string");
  return v.get<std::string>();
}

inline Rational parse_number(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(ErrorCode::BadNumber, path, "membership values must be strings");
  const auto s = v.get<std::string>();
  const auto r = Rational::parse(s);
  if (!r) throw ParseError(ErrorCode::BadNumber, path, "\"" + s + "\" is not a decimal or p/q rational");
  return *r;
}

inline std::pair<Rational, Rational> parse_mu(const json& obj, const std::string& path) {
  const auto& mu = require(obj, "mu", path);
  const std::string p = path + ".mu";
  if (!mu.is_array() || mu.size() != 2) throw ParseError(ErrorCode::SyntaxError, p, "expected [lo, hi]");
  return {parse_number(mu[0], p + "[0]"), parse_number(mu[1], p + "[1]")};
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace detail

/// Parses a graph document. Range and graph constraints are left to `validate`.
inline GraphDocument parse_document(std::string_view text) {
  using detail::json;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorCode::SyntaxError, "line " + std::to_string(detail::line_of(text, e.byte)), e.what());
  }
  if (!root.is_object()) throw ParseError(ErrorCode::SyntaxError, "$", "document must be an object");
  detail::reject_unknown(root, {"version", "vertices", "edges"}, "$");

  GraphDocument doc;
  const auto& version = detail::require(root, "version", "$");
  if (!version.is_number_integer() || version.get<long long>() != GraphDocument::kVersion) {
    throw ParseError(ErrorCode::SyntaxError, "$.version", "unsupported version");
  }

  const auto& vertices = detail::require(root, "vertices", "$");
  if (!vertices.is_array()) throw ParseError(ErrorCode::SyntaxError, "$.vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    const auto& v = vertices[i];
    if (!v.is_object()) throw ParseError(ErrorCode::SyntaxError, path, "expected an object");
    detail::reject_unknown(v, {"id", "mu"}, path);
    auto [lo, hi] = detail::parse_mu(v, path);
    doc.vertices.push_back({detail::require_string(v, "id", path), lo, hi});
  }

  const auto& edges = detail::require(root, "edges", "$");
  if (!edges.is_array()) throw ParseError(ErrorCode::SyntaxError, "$.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_object()) throw ParseError(ErrorCode::SyntaxError, path, "expected an object");
    detail::reject_unknown(e, {"u", "v", "mu"}, path);
    auto [lo, hi] = detail::parse_mu(e, path);
    doc.edges.push_back({detail::require_string(e, "u", path), detail::require_string(e, "v", path), lo, hi});
  }
  return doc;
}

inline nlohmann::ordered_json document_to_json(const GraphDocument& doc) {
  nlohmann::ordered_json root;
  root["version"] = doc.version;
  root["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : doc.vertices) {
    root["vertices"].push_back({{"id", v.id}, {"mu", nlohmann::ordered_json::array({v.lo.to_string(), v.hi.to_string()})}});
  }
  root["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.edges) {
    root["edges"].push_back({{"u", e.u}, {"v", e.v}, {"mu", nlohmann::ordered_json::array({e.lo.to_string(), e.hi.to_string()})}});
  }
  return root;
}

inline std::string serialize_document(const GraphDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

/// Canonical text form of a graph.
inline std::string serialize(const IVFuzzyGraph& g) { return serialize_document(to_document(g)); }

inline IVFuzzyGraph parse_graph(std::string_view text) { return from_document(parse_document(text)); }

// ---------------------------------------------------------------------------
// Mapping files: one "u -> v" per line; blank lines and '#' comments ignored.

inline VertexMapping parse_mapping(std::string_view text) {
  VertexMapping m;
  std::set<VertexId> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    const std::string ctx = "line " + std::to_string(lineno);
    if (arrow == std::string::npos) throw ParseError(ErrorCode::SyntaxError, ctx, "expected \"u -> v\"");
    const auto from = trim(line.substr(0, arrow));
    const auto to = trim(line.substr(arrow + 2));
    if (!is_valid_vertex_id(from) || !is_valid_vertex_id(to)) {
      throw ParseError(ErrorCode::SyntaxError, ctx, "expected \"u -> v\"");
    }
    if (!seen.insert(from).second) throw ParseError(ErrorCode::SyntaxError, ctx, "second image for " + from);
    m.set(from, to);
  }
  return m;
}

inline std::string serialize_mapping(const VertexMapping& m) {
  std::string out;
  for (const auto& [k, v] : m.pairs()) out += k + " -> " + v + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string q;
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q;
}

inline std::string dot_id(const std::string& id) {
  const bool plain = !id.empty() && (std::isalpha(static_cast<unsigned char>(id[0])) != 0 || id[0] == '_') &&
                     std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isalnum(c) != 0 || c == '_'; });
  return plain ? id : "\"" + dot_escape(id) + "\"";
}

}  // namespace detail

/// Undirected DOT with "id [lo,hi]" vertex labels and "[lo,hi]" edge labels.
inline std::string to_dot(const IVFuzzyGraph& g) {
  std::string out = "graph G {\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& id = g.vertices()[i];
    out += "  " + detail::dot_id(id) + " [label=\"" + detail::dot_escape(id) + " " + g.vertex_membership(i).to_string() + "\"];\n";
  }
  for (const auto& [e, mu] : g.edges()) {
    out += "  " + detail::dot_id(e.u()) + " -- " + detail::dot_id(e.v()) + " [label=\"" + mu.to_string() + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ivfg
