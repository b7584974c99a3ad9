// Command-line front end for the planar four-coloring toolkit.
//
// Subcommands mirror the pipeline stages; `bench` runs the scaling harness
// and `fixture` lists or prints the built-in graphs. Exit codes: 0 success,
// 1 input error, 2 coloring-failure certificate.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fourcolor/bench.hpp"
#include "fourcolor/document.hpp"
#include "fourcolor/even_face.hpp"
#include "fourcolor/fixtures.hpp"
#include "fourcolor/pipeline.hpp"

namespace fc = fourcolor;

namespace {

fc::GraphDocument fixture_document(const std::string& name) {
  using namespace fc::fixtures;
  fc::GraphDocument doc;
  if (name == "theta") {
    auto f = theta();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "k4") {
    auto f = k4();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "prism") {
    auto f = prism3();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "octahedron") {
    auto f = octahedron();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "pentaprism") {
    auto f = pentaprism();
    doc.graph = f.graph;
    doc.rotation = f.rot;
    doc.coloring = f.coloring;
  } else if (name == "octaprism") {
    auto f = octaprism();
    doc.graph = f.graph;
    doc.rotation = f.rot;
    doc.coloring = f.coloring;
  } else if (name == "evenface") {
    auto f = even_face_demo();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "icosahedron") {
    auto f = icosahedron();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else if (name == "petersen") {
    doc.graph = petersen();
  } else if (name == "tutte") {
    auto f = tutte_like();
    doc.graph = f.graph;
    doc.rotation = f.rot;
  } else {
    throw fc::GraphError("unknown fixture '" + name +
                         "' (theta, k4, prism, octahedron, pentaprism, octaprism, evenface, "
                         "icosahedron, petersen, tutte)");
  }
  return doc;
}

struct CommonArgs {
  std::string input;
  std::string fixture;
  std::string format = "text";
  std::string out;
  std::string dot;
  int budget = 8;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("file", args.input, "input document (native or plain edge list)");
    cmd->add_option("--fixture", args.fixture, "use a built-in graph instead of a file");
  }
  cmd->add_option("--format", args.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", args.out, "write the report to a file instead of stdout");
  cmd->add_option("--dot", args.dot, "also write a DOT rendering to this file");
  cmd->add_option("--budget", args.budget, "disk-rotation search depth");
}

fc::GraphDocument load_input(const CommonArgs& args) {
  if (!args.fixture.empty()) return fixture_document(args.fixture);
  if (args.input.empty()) throw fc::GraphError("no input: give a file or --fixture");
  std::ifstream in(args.input);
  if (!in) throw fc::GraphError("cannot open '" + args.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return fc::parse_document(buf.str());
}

int emit_report(const fc::PipelineReport& report, const CommonArgs& args,
                const fc::GraphDocument& doc) {
  std::string body = args.format == "json" ? report.data.dump(2) + "\n" : report.text;
  if (args.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(args.out);
    out << body;
  }
  if (!args.dot.empty()) {
    std::ofstream dot(args.dot);
    const fc::EdgeColoring* col = doc.coloring ? &*doc.coloring : nullptr;
    dot << fc::emit_dot(doc.graph, col);
  }
  return report.exit_code();
}

int run_stage(const std::string& stage, const CommonArgs& args) {
  fc::GraphDocument doc = load_input(args);
  fc::PipelineOptions opt;
  opt.stage = stage;
  opt.color.rotation_budget = args.budget;
  fc::PipelineReport report = fc::run_pipeline(doc, opt);
  // The DOT rendering tracks the stage result when it produced a coloring.
  fc::GraphDocument render = doc;
  if (report.status == fc::PipelineStatus::Ok && report.data.contains("coloring")) {
    fc::EdgeColoring col;
    for (auto& [key, val] : report.data["coloring"].items()) {
      fc::EdgeId e = std::stoi(key.substr(1));
      col.set(e, *fc::parse_color(val.get<std::string>()));
    }
    render.coloring = col;
  }
  return emit_report(report, args, render);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar four-coloring toolkit"};
  app.require_subcommand(1);

  std::map<std::string, CommonArgs> args;
  const std::vector<std::string> stages = {"triangulate",    "dualize", "linegraph",
                                           "color-edges",    "color-vertices", "euler3",
                                           "heawood",        "verify",  "oracle"};
  for (const std::string& s : stages) {
    CLI::App* cmd = app.add_subcommand(s, "pipeline stage: " + s);
    add_common(cmd, args[s]);
  }

  CommonArgs bench_args;
  std::vector<int> bench_sizes{20, 40, 80, 160};
  std::uint64_t bench_seed = 1;
  int bench_trials = 20;
  CLI::App* bench_cmd = app.add_subcommand("bench", "seeded scaling harness");
  bench_cmd->add_option("--sizes", bench_sizes, "triangulation sizes");
  bench_cmd->add_option("--seed", bench_seed, "random seed");
  bench_cmd->add_option("--trials", bench_trials, "trials per size");
  add_common(bench_cmd, bench_args, /*needs_input=*/false);

  CommonArgs fixture_args;
  std::string fixture_name;
  CLI::App* fixture_cmd = app.add_subcommand("fixture", "print a built-in graph document");
  fixture_cmd->add_option("name", fixture_name, "fixture name")->required();
  add_common(fixture_cmd, fixture_args, /*needs_input=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& s : stages)
      if (app.got_subcommand(s)) return run_stage(s, args[s]);

    if (app.got_subcommand("bench")) {
      fc::BenchConfig cfg;
      cfg.sizes = bench_sizes;
      cfg.seed = bench_seed;
      cfg.trials = bench_trials;
      cfg.color.rotation_budget = bench_args.budget;
      fc::BenchReport report = fc::bench(cfg);
      nlohmann::json j = report.json();
      for (std::size_t i = 0; i < report.rows.size(); ++i)
        j["rows"][i]["mean_wall_ms"] = report.rows[i].mean_wall_ms;
      std::string body;
      if (bench_args.format == "json") {
        body = j.dump(2) + "\n";
      } else {
        std::ostringstream text;
        text << "n     mean_m   recolored   rotations   wall_ms\n";
        for (const auto& r : report.rows)
          text << r.n << "  " << r.mean_m << "  " << r.mean_recolored << "  " << r.mean_rotations
               << "  " << r.mean_wall_ms << "\n";
        text << "fitted exponent: " << report.fitted_exponent << "\n";
        text << "rms residual vs m: " << report.linear_residual << ", vs m^2: "
             << report.quadratic_residual << "\n";
        body = text.str();
      }
      if (bench_args.out.empty())
        std::cout << body;
      else
        std::ofstream(bench_args.out) << body;
      return 0;
    }

    if (app.got_subcommand("fixture")) {
      fc::GraphDocument doc = fixture_document(fixture_name);
      std::string body = fc::emit_document(doc);
      if (fixture_args.out.empty())
        std::cout << body;
      else
        std::ofstream(fixture_args.out) << body;
      if (!fixture_args.dot.empty()) {
        const fc::EdgeColoring* col = doc.coloring ? &*doc.coloring : nullptr;
        std::ofstream(fixture_args.dot) << fc::emit_dot(doc.graph, col);
      }
      return 0;
    }
  } catch (const fc::GraphError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
