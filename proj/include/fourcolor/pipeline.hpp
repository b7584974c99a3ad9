#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "fourcolor/brute.hpp"
#include "fourcolor/document.hpp"
#include "fourcolor/dual.hpp"
#include "fourcolor/euler3.hpp"
#include "fourcolor/lift.hpp"
#include "fourcolor/line_graph.hpp"
#include "fourcolor/orientation.hpp"
#include "fourcolor/tait.hpp"
#include "fourcolor/triangulate.hpp"

namespace fourcolor {

enum class PipelineStatus : int { Ok = 0, InputError = 1, ColoringFailure = 2 };

struct PipelineOptions {
  std::string stage;  // triangulate|dualize|linegraph|color-edges|color-vertices|euler3|heawood|verify|oracle
  ColorConfig color{};
  long long oracle_cap = -1;
  int oracle_guard = 30;
};

struct PipelineReport {
  PipelineStatus status = PipelineStatus::Ok;
  nlohmann::json data;
  std::string text;

  int exit_code() const { return static_cast<int>(status); }
};

namespace detail {

inline nlohmann::json coloring_json(const EdgeColoring& col) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : col.color) j["e" + std::to_string(e)] = std::string(1, color_letter(c));
  return j;
}

inline nlohmann::json vertex_colors_json(const std::map<VertexId, KleinColor>& vc) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, c] : vc) j[std::to_string(v)] = std::string(1, color_letter(c));
  return j;
}

inline nlohmann::json counters_json(const EngineCounters& c) {
  return {{"rotations", c.rotations},
          {"edges_recolored", c.edges_recolored},
          {"search_nodes", c.search_nodes},
          {"completer_calls", c.completer_calls},
          {"aux_insertions", c.aux_insertions}};
}

/// Triangulate unless every face is already a triangle.
inline TriangulationResult ensure_maximal(const MultiGraph& g, const RotationSystem& rot) {
  bool all_triangles = true;
  for (const Face& f : trace_faces(g, rot))
    if (f.length() != 3) all_triangles = false;
  if (all_triangles) return {g, rot, {}};
  return triangulate(g, rot);
}

}  // namespace detail

/// Runs one pipeline stage over a parsed document and reports artifacts and
/// verification residues. Exit status: 0 success, 1 input error, 2 coloring
/// failure certificate.
inline PipelineReport run_pipeline(const GraphDocument& doc, const PipelineOptions& opt) {
  PipelineReport report;
  nlohmann::json& out = report.data;
  out["stage"] = opt.stage;
  out["n"] = doc.graph.num_vertices();
  out["m"] = doc.graph.num_edges();

  auto need_rotation = [&]() -> const RotationSystem& {
    if (!doc.rotation)
      throw GraphError("stage '" + opt.stage + "' needs a ROTATION section (embedding)");
    return *doc.rotation;
  };

  try {
    const std::string& stage = opt.stage;
    if (stage == "verify") {
      if (!doc.coloring) throw GraphError("verify needs a COLORING section");
      ColoringVerdict v = verify_coloring(doc.graph, *doc.coloring);
      out["valid"] = v.valid;
      out["violations"] = nlohmann::json::array();
      for (const auto& viol : v.violations)
        out["violations"].push_back({{"vertex", viol.vertex}, {"reason", viol.reason}});
      if (!v.valid) report.status = PipelineStatus::ColoringFailure;
      report.text = v.valid ? "coloring is proper\n" : "coloring is NOT proper\n";
    } else if (stage == "oracle") {
      OracleResult r = brute_force_colorings(doc.graph, opt.oracle_cap, opt.oracle_guard);
      out["colorings"] = r.count;
      out["cap_hit"] = r.cap_hit;
      if (r.witness) out["witness"] = detail::coloring_json(*r.witness);
      if (r.count == 0) report.status = PipelineStatus::ColoringFailure;
      report.text = "proper 3-edge-colorings: " + std::to_string(r.count) + "\n";
    } else if (stage == "triangulate") {
      TriangulationResult t = triangulate(doc.graph, need_rotation());
      out["added_edges"] = nlohmann::json::array();
      for (EdgeId e : t.added) out["added_edges"].push_back(e);
      GraphDocument result{t.graph, t.rotation, std::nullopt};
      report.text = emit_document(result);
      out["document"] = report.text;
    } else if (stage == "dualize") {
      TriangulationResult t = detail::ensure_maximal(doc.graph, need_rotation());
      DualResult d = dual_cubic(t.graph, t.rotation);
      GraphDocument result{d.graph, d.rotation, std::nullopt};
      out["dual_n"] = d.graph.num_vertices();
      out["dual_m"] = d.graph.num_edges();
      report.text = emit_document(result);
      out["document"] = report.text;
    } else if (stage == "linegraph") {
      LineGraphResult b2 = line_graph(doc.graph, need_rotation());
      GraphDocument result{b2.graph, b2.rotation, std::nullopt};
      out["b2_n"] = b2.graph.num_vertices();
      out["b2_m"] = b2.graph.num_edges();
      report.text = emit_document(result);
      out["document"] = report.text;
    } else if (stage == "color-edges") {
      ColorOutcome r = color_cubic(doc.graph, need_rotation(), opt.color);
      out["counters"] = detail::counters_json(r.counters);
      if (!r.ok()) {
        report.status = PipelineStatus::ColoringFailure;
        out["failure"] = r.failure;
        report.text = "coloring failed: " + r.failure + "\n";
      } else {
        out["coloring"] = detail::coloring_json(*r.coloring);
        GraphDocument result{doc.graph, *doc.rotation, *r.coloring};
        report.text = emit_document(result);
        out["document"] = report.text;
      }
    } else if (stage == "color-vertices") {
      TriangulationResult t = detail::ensure_maximal(doc.graph, need_rotation());
      DualResult d = dual_cubic(t.graph, t.rotation);
      ColorOutcome r = color_cubic(d.graph, d.rotation, opt.color);
      out["counters"] = detail::counters_json(r.counters);
      if (!r.ok()) {
        report.status = PipelineStatus::ColoringFailure;
        out["failure"] = r.failure;
        report.text = "coloring failed: " + r.failure + "\n";
      } else {
        FaceColoring fc = lift_face_coloring(d.graph, d.rotation, *r.coloring, d.corr.rim_face_dual);
        auto vc = lift_vertex_coloring(d.corr, fc);
        bool proper = true;
        for (EdgeId e : doc.graph.edge_ids()) {
          auto [u, w] = doc.graph.endpoints(e);
          if (vc.at(u) == vc.at(w)) proper = false;
        }
        out["vertex_colors"] = detail::vertex_colors_json(vc);
        out["proper"] = proper;
        std::ostringstream text;
        for (const auto& [v, c] : vc) text << v << " " << color_letter(c) << "\n";
        report.text = text.str();
        if (!proper) report.status = PipelineStatus::ColoringFailure;
      }
    } else if (stage == "euler3") {
      ColorOutcome r = color_cubic(doc.graph, need_rotation(), opt.color);
      if (!r.ok()) {
        report.status = PipelineStatus::ColoringFailure;
        out["failure"] = r.failure;
        report.text = "coloring failed: " + r.failure + "\n";
      } else {
        LineGraphResult b2 = line_graph(doc.graph, *doc.rotation);
        EulerMod3Report e3 = euler_mod3(b2, *r.coloring);
        out["b2_m"] = b2.graph.num_edges();
        out["circuit_length"] = e3.circuit.size();
        out["disks_mod3_ok"] = e3.disks_mod3_ok;
        out["matches_up_to_shift"] = e3.matches_up_to_shift;
        out["shift"] = e3.shift;
        nlohmann::json circuit = nlohmann::json::array();
        for (const EulerArc& a : e3.circuit) circuit.push_back({{"edge", a.edge}, {"tail", a.tail}});
        out["circuit"] = circuit;
        report.text = "euler circuit of " + std::to_string(e3.circuit.size()) +
                      " edges; disks mod 3 " + (e3.disks_mod3_ok ? "ok" : "BROKEN") + "\n";
      }
    } else if (stage == "heawood") {
      // Work on the triangulation side; cubic inputs are dualized first.
      MultiGraph gprime;
      RotationSystem rotg;
      EdgeColoring gcol;
      if (doc.graph.is_cubic()) {
        const RotationSystem& roth = need_rotation();
        ColorOutcome r = color_cubic(doc.graph, roth, opt.color);
        if (!r.ok()) throw GraphError("could not color the cubic input: " + r.failure);
        DualResult d = dual_graph(doc.graph, roth);
        gprime = d.graph;
        rotg = d.rotation;
        gcol = transfer_edge_coloring(d.corr, *r.coloring);  // dual edge ids coincide
      } else {
        TriangulationResult t = detail::ensure_maximal(doc.graph, need_rotation());
        DualResult d = dual_cubic(t.graph, t.rotation);
        ColorOutcome r = color_cubic(d.graph, d.rotation, opt.color);
        if (!r.ok()) throw GraphError("could not color the dual: " + r.failure);
        gprime = t.graph;
        rotg = t.rotation;
        gcol = transfer_edge_coloring(d.corr, *r.coloring);
      }
      TriangleOrientation orient = triangle_orientations(gprime, rotg, gcol);
      auto faces = trace_faces(gprime, rotg);
      HeawoodReport h = heawood_check(orient, vertex_face_incidence(faces));
      out["global_residue_mod4"] = h.global_residue;
      nlohmann::json res = nlohmann::json::object();
      for (const auto& [v, r] : h.vertex_residue) res[std::to_string(v)] = r;
      out["vertex_residue_mod3"] = res;
      out["all_zero"] = h.all_zero();
      report.text = std::string("heawood residues ") + (h.all_zero() ? "all zero" : "NON-ZERO") + "\n";
    } else {
      throw GraphError("unknown stage '" + stage + "'");
    }
  } catch (const GraphError& err) {
    report.status = PipelineStatus::InputError;
    out["error"] = err.what();
    report.text = std::string("error: ") + err.what() + "\n";
  }
  return report;
}

}  // namespace fourcolor
