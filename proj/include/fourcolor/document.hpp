#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "fourcolor/coloring.hpp"
#include "fourcolor/rotation.hpp"

namespace fourcolor {

/// Parsed form of the native line-oriented format with sections GRAPH,
/// ROTATION and COLORING. A rotation section present means the document
/// claims an embedding. Plain edge lists (DIMACS-like) are also accepted and
/// yield documents without an embedding.
struct GraphDocument {
  MultiGraph graph;
  std::optional<RotationSystem> rotation;
  std::optional<EdgeColoring> coloring;

  bool operator==(const GraphDocument& other) const {
    if (!(graph == other.graph)) return false;
    if (rotation.has_value() != other.rotation.has_value()) return false;
    if (rotation && !(rotation->all() == other.rotation->all())) return false;
    if (coloring.has_value() != other.coloring.has_value()) return false;
    if (coloring && !(coloring->color == other.coloring->color)) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline bool parse_int(const std::string& t, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(t, &used);
    return used == t.size();
  } catch (...) {
    return false;
  }
}

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline GraphDocument parse_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool native = text.find("GRAPH") != std::string::npos;

  GraphDocument doc;
  enum class Section { None, Graph, Rotation, Coloring } section = Section::None;
  RotationSystem rotation;
  bool has_rotation = false;
  EdgeColoring coloring;
  bool has_coloring = false;
  // Deferred rotation lines in neighbour form are resolved once the graph is
  // complete.
  std::vector<std::tuple<int, VertexId, std::vector<std::string>>> rotation_lines;
  EdgeId auto_edge = 1;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;

    if (native) {
      if (toks[0] == "GRAPH") { section = Section::Graph; continue; }
      if (toks[0] == "ROTATION") { section = Section::Rotation; has_rotation = true; continue; }
      if (toks[0] == "COLORING") { section = Section::Coloring; has_coloring = true; continue; }
      switch (section) {
        case Section::Graph: {
          if (toks[0] == "v" && toks.size() == 2) {
            int v;
            if (!detail::parse_int(toks[1], v)) detail::parse_fail(lineno, "bad vertex id");
            if (!doc.graph.has_vertex(v)) doc.graph.add_vertex_with_id(v);
          } else if (toks[0] == "e" && toks.size() == 4) {
            int id, u, w;
            if (!detail::parse_int(toks[1], id) || !detail::parse_int(toks[2], u) ||
                !detail::parse_int(toks[3], w))
              detail::parse_fail(lineno, "bad edge line");
            if (u == w) detail::parse_fail(lineno, "self-loop at vertex " + std::to_string(u));
            if (doc.graph.has_edge(id)) detail::parse_fail(lineno, "duplicate edge id " + toks[1]);
            doc.graph.add_edge_with_id(id, u, w);
          } else {
            detail::parse_fail(lineno, "expected 'v <id>' or 'e <id> <u> <w>'");
          }
          break;
        }
        case Section::Rotation: {
          std::string head = toks[0];
          if (!head.empty() && head.back() == ':') head.pop_back();
          if (!head.empty() && (head[0] == 'v')) head.erase(0, 1);
          int v;
          if (!detail::parse_int(head, v)) detail::parse_fail(lineno, "bad rotation vertex");
          rotation_lines.push_back({lineno, v, {toks.begin() + 1, toks.end()}});
          break;
        }
        case Section::Coloring: {
          if (toks.size() != 2) detail::parse_fail(lineno, "expected '<edge> <color>'");
          std::string id_tok = toks[0];
          if (!id_tok.empty() && id_tok[0] == 'e') id_tok.erase(0, 1);
          int e;
          if (!detail::parse_int(id_tok, e)) detail::parse_fail(lineno, "bad edge id");
          if (!doc.graph.has_edge(e)) detail::parse_fail(lineno, "color names unknown edge " + id_tok);
          auto c = parse_color(toks[1]);
          if (!c) detail::parse_fail(lineno, "color letter outside {W,R,B,G,0-3}: " + toks[1]);
          coloring.set(e, *c);
          break;
        }
        case Section::None:
          detail::parse_fail(lineno, "content before any section header");
      }
    } else {
      // Plain edge list: "u v" pairs, optional "p ..." header, "e u v" lines.
      if (toks[0] == "p" || toks[0] == "c") continue;
      int off = toks[0] == "e" ? 1 : 0;
      if (static_cast<int>(toks.size()) - off != 2) detail::parse_fail(lineno, "expected an edge pair");
      int u, w;
      if (!detail::parse_int(toks[off], u) || !detail::parse_int(toks[off + 1], w))
        detail::parse_fail(lineno, "bad edge pair");
      if (u == w) detail::parse_fail(lineno, "self-loop at vertex " + std::to_string(u));
      doc.graph.add_edge_with_id(auto_edge++, u, w);
    }
  }

  for (const auto& [ln, v, toks] : rotation_lines) {
    if (!doc.graph.has_vertex(v)) detail::parse_fail(ln, "rotation names unknown vertex");
    std::vector<EdgeId> cyc;
    for (const std::string& t : toks) {
      if (!t.empty() && t[0] == 'e') {
        int e;
        if (!detail::parse_int(t.substr(1), e)) detail::parse_fail(ln, "bad edge token " + t);
        if (!doc.graph.has_edge(e)) detail::parse_fail(ln, "rotation references unknown edge " + t);
        cyc.push_back(e);
      } else {
        std::string nb = t;
        if (!nb.empty() && nb[0] == 'v') nb.erase(0, 1);
        int w;
        if (!detail::parse_int(nb, w)) detail::parse_fail(ln, "bad rotation token " + t);
        EdgeId found = -1;
        int hits = 0;
        for (EdgeId e : doc.graph.incident(v))
          if (doc.graph.other_end(e, v) == w) {
            found = e;
            ++hits;
          }
        if (hits == 0) detail::parse_fail(ln, "rotation references unknown neighbour " + t);
        if (hits > 1)
          detail::parse_fail(ln, "neighbour form is ambiguous for parallel edges; use e<id>");
        cyc.push_back(found);
      }
    }
    rotation.set(v, std::move(cyc));
  }
  if (has_rotation) {
    rotation.validate(doc.graph);
    doc.rotation = std::move(rotation);
  }
  if (has_coloring) doc.coloring = std::move(coloring);
  return doc;
}

/// Canonical text form; emit of a parsed document re-parses to an equal one.
inline std::string emit_document(const GraphDocument& doc) {
  std::ostringstream out;
  out << "GRAPH\n";
  for (VertexId v : doc.graph.vertex_ids()) out << "v " << v << "\n";
  for (EdgeId e : doc.graph.edge_ids()) {
    auto [u, w] = doc.graph.endpoints(e);
    out << "e " << e << " " << u << " " << w << "\n";
  }
  if (doc.rotation) {
    out << "ROTATION\n";
    for (const auto& [v, cyc] : doc.rotation->all()) {
      out << v << ":";
      for (EdgeId e : cyc) out << " e" << e;
      out << "\n";
    }
  }
  if (doc.coloring) {
    out << "COLORING\n";
    for (const auto& [e, c] : doc.coloring->color) out << "e" << e << " " << color_letter(c) << "\n";
  }
  return out.str();
}

/// Graph description with the drawing legend: red solid, blue dotted, green
/// dashed, white dash-dot. Deterministic output for identical inputs.
inline std::string emit_dot(const MultiGraph& g, const EdgeColoring* coloring = nullptr,
                            const std::map<VertexId, KleinColor>* vertex_colors = nullptr) {
  auto style_of = [](KleinColor c) {
    switch (c) {
      case KleinColor::R: return "solid";
      case KleinColor::B: return "dotted";
      case KleinColor::G: return "dashed";
      case KleinColor::W: return "dashdot";
    }
    return "solid";
  };
  auto fill_of = [](KleinColor c) {
    switch (c) {
      case KleinColor::R: return "tomato";
      case KleinColor::B: return "skyblue";
      case KleinColor::G: return "palegreen";
      case KleinColor::W: return "white";
    }
    return "white";
  };
  std::ostringstream out;
  out << "graph {\n";
  for (VertexId v : g.vertex_ids()) {
    out << "  " << v;
    if (vertex_colors && vertex_colors->count(v))
      out << " [style=filled fillcolor=" << fill_of(vertex_colors->at(v)) << "]";
    out << ";\n";
  }
  for (EdgeId e : g.edge_ids()) {
    auto [u, w] = g.endpoints(e);
    out << "  " << u << " -- " << w << " [label=e" << e;
    if (coloring && coloring->has(e)) out << " style=" << style_of(coloring->at(e));
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fourcolor
