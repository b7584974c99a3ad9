#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourcolor/bench.hpp"
#include "fourcolor/document.hpp"
#include "fourcolor/fixtures.hpp"
#include "fourcolor/pipeline.hpp"

using namespace fourcolor;

TEST_CASE("document parsing") {
  SUBCASE("theta document with rotation and coloring") {
    std::string text =
        "GRAPH\n"
        "v 1\nv 2\n"
        "e 1 1 2\ne 2 1 2\ne 3 1 2\n"
        "ROTATION\n"
        "1: e1 e2 e3\n"
        "2: e3 e2 e1\n"
        "COLORING\n"
        "e1 R\ne2 2\ne3 G\n";
    GraphDocument doc = parse_document(text);
    CHECK(doc.graph.num_vertices() == 2);
    CHECK(doc.graph.num_edges() == 3);
    REQUIRE(doc.rotation.has_value());
    REQUIRE(doc.coloring.has_value());
    CHECK(doc.coloring->at(2) == kBlue);
    CHECK(trace_faces(doc.graph, *doc.rotation).size() == 3);
  }
  SUBCASE("neighbour-form rotation lines resolve on simple graphs") {
    std::string text =
        "GRAPH\n"
        "e 1 1 2\ne 2 1 3\ne 3 1 4\ne 4 2 3\ne 5 2 4\ne 6 3 4\n"
        "ROTATION\n"
        "v1: v2 v3 v4\n"
        "v2: v1 v4 v3\n"
        "v3: v1 v2 v4\n"
        "v4: v1 v3 v2\n";
    GraphDocument doc = parse_document(text);
    REQUIRE(doc.rotation.has_value());
    auto faces = trace_faces(doc.graph, *doc.rotation);
    CHECK(euler_planarity_check(doc.graph, faces));
  }
  SUBCASE("a vertex-rotation diagram transcribes directly") {
    // Five-vertex drawing given as cyclic neighbour lists.
    std::string text =
        "GRAPH\n"
        "e 1 1 2\ne 2 1 3\ne 3 1 4\ne 4 2 5\ne 5 2 3\ne 6 3 5\ne 7 3 4\ne 8 4 5\n"
        "ROTATION\n"
        "v1: v2 v3 v4\n"
        "v2: v5 v3 v1\n"
        "v3: v1 v2 v5 v4\n"
        "v4: v1 v3 v5\n"
        "v5: v4 v3 v2\n";
    GraphDocument doc = parse_document(text);
    REQUIRE(doc.rotation.has_value());
    CHECK(doc.rotation->at(1) == std::vector<EdgeId>{1, 2, 3});
    CHECK(doc.rotation->at(3) == std::vector<EdgeId>{2, 5, 6, 7});
    CHECK(doc.rotation->at(5) == std::vector<EdgeId>{8, 6, 4});
    auto faces = trace_faces(doc.graph, *doc.rotation);
    CHECK(euler_planarity_check(doc.graph, faces));
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_document("GRAPH\ne 1 1 1\n"), doctest::Contains("line 2"),
                         GraphError);
    CHECK_THROWS_WITH_AS(parse_document("GRAPH\ne 1 1 2\ne 1 2 3\n"),
                         doctest::Contains("duplicate edge id"), GraphError);
    CHECK_THROWS_WITH_AS(parse_document("GRAPH\ne 1 1 2\nROTATION\n1: e9\n"),
                         doctest::Contains("unknown edge"), GraphError);
    CHECK_THROWS_WITH_AS(parse_document("GRAPH\ne 1 1 2\nCOLORING\ne1 Q\n"),
                         doctest::Contains("color letter"), GraphError);
  }
  SUBCASE("parallel edges make the neighbour form ambiguous") {
    std::string text =
        "GRAPH\ne 1 1 2\ne 2 1 2\ne 3 1 2\nROTATION\n1: v2 v2 v2\n2: v1 v1 v1\n";
    CHECK_THROWS_WITH_AS(parse_document(text), doctest::Contains("ambiguous"), GraphError);
  }
  SUBCASE("plain edge lists parse without an embedding") {
    GraphDocument doc = parse_document("1 2\n2 3\n3 1\n");
    CHECK(doc.graph.num_edges() == 3);
    CHECK_FALSE(doc.rotation.has_value());
  }
}

TEST_CASE("emit/parse round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    GraphDocument doc;
    int n = 3 + static_cast<int>(rng() % 6);
    for (int v = 1; v <= n; ++v) doc.graph.add_vertex_with_id(v);
    int m = 1 + static_cast<int>(rng() % 10);
    for (int e = 1; e <= m; ++e) {
      int u = 1 + static_cast<int>(rng() % n);
      int w = 1 + static_cast<int>(rng() % n);
      if (u == w) continue;
      doc.graph.add_edge_with_id(e, u, w);
    }
    if (rng() % 2) {
      RotationSystem rot;
      for (VertexId v : doc.graph.vertex_ids()) {
        auto inc = doc.graph.incident(v);
        std::shuffle(inc.begin(), inc.end(), rng);
        rot.set(v, inc);
      }
      doc.rotation = rot;
    }
    if (rng() % 2) {
      EdgeColoring col;
      for (EdgeId e : doc.graph.edge_ids())
        col.set(e, kEdgeColors[rng() % 3]);
      doc.coloring = col;
    }
    GraphDocument back = parse_document(emit_document(doc));
    CHECK(back == doc);
  }
}

TEST_CASE("dot export") {
  auto fix = fixtures::pentaprism();
  std::string a = emit_dot(fix.graph, &fix.coloring);
  std::string b = emit_dot(fix.graph, &fix.coloring);
  CHECK(a == b);
  CHECK(a.find("style=solid") != std::string::npos);    // red class
  CHECK(a.find("style=dotted") != std::string::npos);   // blue class
  CHECK(a.find("style=dashed") != std::string::npos);   // green class
  // The style legend tracks the classes: count styled edges.
  std::size_t styled = 0;
  for (std::size_t pos = a.find("style="); pos != std::string::npos; pos = a.find("style=", pos + 1))
    ++styled;
  CHECK(styled == fix.graph.num_edges());

  auto [k4g, k4rot] = fixtures::k4();
  EdgeColoring ck = color_base(k4g);
  std::string k = emit_dot(k4g, &ck);
  std::size_t k_styled = 0;
  for (std::size_t pos = k.find("style="); pos != std::string::npos; pos = k.find("style=", pos + 1))
    ++k_styled;
  CHECK(k_styled == 6);
}

TEST_CASE("pipeline stages and exit statuses") {
  SUBCASE("tutte fixture colors and verifies") {
    auto fix = fixtures::tutte_like();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;
    opt.stage = "color-edges";
    PipelineReport r = run_pipeline(doc, opt);
    CHECK(r.status == PipelineStatus::Ok);
    REQUIRE(r.data.contains("coloring"));

    GraphDocument colored = parse_document(r.data["document"].get<std::string>());
    opt.stage = "verify";
    PipelineReport v = run_pipeline(colored, opt);
    CHECK(v.status == PipelineStatus::Ok);
    CHECK(v.data["valid"].get<bool>());
  }
  SUBCASE("petersen oracle certifies failure with status 2") {
    GraphDocument doc{fixtures::petersen(), std::nullopt, std::nullopt};
    PipelineOptions opt;
    opt.stage = "oracle";
    PipelineReport r = run_pipeline(doc, opt);
    CHECK(r.status == PipelineStatus::ColoringFailure);
    CHECK(r.exit_code() == 2);
    CHECK(r.data["colorings"].get<long long>() == 0);
  }
  SUBCASE("tetrahedron pipeline reaches four distinct vertex colors") {
    auto fix = fixtures::k4();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;
    opt.stage = "color-vertices";
    PipelineReport r = run_pipeline(doc, opt);
    REQUIRE(r.status == PipelineStatus::Ok);
    CHECK(r.data["proper"].get<bool>());
    std::set<std::string> used;
    for (auto& [v, c] : r.data["vertex_colors"].items()) used.insert(c.get<std::string>());
    CHECK(used.size() == 4);
  }
  SUBCASE("missing rotation is an input error") {
    GraphDocument doc{fixtures::petersen(), std::nullopt, std::nullopt};
    PipelineOptions opt;
    opt.stage = "color-edges";
    PipelineReport r = run_pipeline(doc, opt);
    CHECK(r.status == PipelineStatus::InputError);
    CHECK(r.exit_code() == 1);
  }
  SUBCASE("heawood stage reports zero residues on a colored pipeline") {
    auto fix = fixtures::icosahedron();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;
    opt.stage = "heawood";
    PipelineReport r = run_pipeline(doc, opt);
    REQUIRE(r.status == PipelineStatus::Ok);
    CHECK(r.data["all_zero"].get<bool>());
    CHECK(r.data["global_residue_mod4"].get<int>() == 0);
  }
  SUBCASE("document-producing stages emit parseable results") {
    auto fix = fixtures::prism3();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;

    opt.stage = "triangulate";
    PipelineReport t = run_pipeline(doc, opt);
    REQUIRE(t.status == PipelineStatus::Ok);
    GraphDocument gprime = parse_document(t.data["document"].get<std::string>());
    CHECK(gprime.graph.num_edges() == 3 * gprime.graph.num_vertices() - 6);

    opt.stage = "dualize";
    PipelineReport d = run_pipeline(doc, opt);  // triangulates on the way
    REQUIRE(d.status == PipelineStatus::Ok);
    GraphDocument h = parse_document(d.data["document"].get<std::string>());
    CHECK(h.graph.is_cubic());
    CHECK(is_bridgeless(h.graph));

    opt.stage = "linegraph";
    PipelineReport l = run_pipeline(doc, opt);
    REQUIRE(l.status == PipelineStatus::Ok);
    GraphDocument b2 = parse_document(l.data["document"].get<std::string>());
    CHECK(b2.graph.num_vertices() == fix.graph.num_edges());
    CHECK(b2.graph.num_edges() == 2 * fix.graph.num_edges());
  }
  SUBCASE("heawood stage accepts cubic inputs by dualizing them") {
    auto fix = fixtures::prism3();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;
    opt.stage = "heawood";
    PipelineReport r = run_pipeline(doc, opt);
    REQUIRE(r.status == PipelineStatus::Ok);
    CHECK(r.data["all_zero"].get<bool>());
  }
  SUBCASE("euler3 stage on the prism") {
    auto fix = fixtures::prism3();
    GraphDocument doc{fix.graph, fix.rot, std::nullopt};
    PipelineOptions opt;
    opt.stage = "euler3";
    PipelineReport r = run_pipeline(doc, opt);
    REQUIRE(r.status == PipelineStatus::Ok);
    CHECK(r.data["disks_mod3_ok"].get<bool>());
    CHECK(r.data["circuit_length"].get<int>() == 18);
  }
}

TEST_CASE("bench harness") {
  BenchConfig cfg;
  cfg.sizes = {10, 16};
  cfg.trials = 3;
  cfg.seed = 9;
  BenchReport a = bench(cfg);
  BenchReport b = bench(cfg);
  CHECK(a.json() == b.json());  // identical seed, identical report
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].failures == 0);
  CHECK(a.rows[1].failures == 0);
  CHECK(a.rows[0].mean_recolored > 0);
  CHECK(a.rows[1].mean_recolored >= a.rows[0].mean_recolored);  // monotone growth
}
