#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourcolor/bridges.hpp"
#include "fourcolor/fixtures.hpp"
#include "fourcolor/rotation.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/surgery.hpp"

using namespace fourcolor;

TEST_CASE("build_graph basics") {
  SUBCASE("theta multigraph") {
    MultiGraph g = build_graph({{1, 2}, {1, 2}, {1, 2}});
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 3);
    CHECK(g.multiplicity(1, 2) == 3);
  }
  SUBCASE("isolated vertex") {
    MultiGraph g = build_graph({}, {1});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("self-loop rejected") {
    CHECK_THROWS_AS(build_graph({{1, 1}}), GraphError);
  }
  SUBCASE("ids are never reused") {
    MultiGraph g = build_graph({{1, 2}, {2, 3}});
    g.remove_edge(2);
    EdgeId fresh = g.add_edge(1, 2);
    CHECK(fresh != 2);
  }
}

TEST_CASE("face tracing") {
  SUBCASE("theta has three digon faces") {
    auto [g, rot] = fixtures::theta();
    auto faces = trace_faces(g, rot);
    CHECK(faces.size() == 3);
    for (const Face& f : faces) CHECK(f.length() == 2);
    CHECK(euler_planarity_check(g, faces));
  }
  SUBCASE("K4 has four triangles") {
    auto [g, rot] = fixtures::k4();
    auto faces = trace_faces(g, rot);
    CHECK(faces.size() == 4);
    for (const Face& f : faces) CHECK(f.length() == 3);
    CHECK(euler_planarity_check(g, faces));
  }
  SUBCASE("rotation diagram fixture reproduces its seven cycles") {
    auto [g, rot] = fixtures::rotation_demo();
    auto faces = trace_faces(g, rot);
    REQUIRE(faces.size() == 7);
    std::set<std::set<EdgeId>> got;
    for (const Face& f : faces) got.insert(f.edges().ids());
    std::set<std::set<EdgeId>> expect = {{1, 2, 4}, {2, 3, 7},  {7, 8, 9}, {4, 5, 8},
                                         {5, 6, 11}, {9, 10, 11}, {1, 3, 6, 10}};
    CHECK(got == expect);
  }
  SUBCASE("every dart appears exactly once and lengths sum to 2m") {
    auto fix = fixtures::pentaprism();
    auto faces = trace_faces(fix.graph, fix.rot);
    std::size_t total = 0;
    std::set<Dart> seen;
    for (const Face& f : faces) {
      total += f.length();
      for (const Dart& d : f.darts) CHECK(seen.insert(d).second);
    }
    CHECK(total == 2 * fix.graph.num_edges());
  }
  SUBCASE("malformed rotations are rejected") {
    auto [g, rot] = fixtures::k4();
    RotationSystem bad = rot;
    bad.remove_vertex(4);
    CHECK_THROWS_AS(trace_faces(g, bad), GraphError);
  }
}

TEST_CASE("euler planarity verdicts") {
  auto [g, rot] = fixtures::k4();
  CHECK(euler_planarity_check(g, trace_faces(g, rot)));

  MultiGraph pet = fixtures::petersen();
  RotationSystem any;
  for (VertexId v : pet.vertex_ids()) any.set(v, pet.incident(v));
  CHECK_FALSE(euler_planarity_check(pet, trace_faces(pet, any)));
}

TEST_CASE("ring sum properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeSet a, b;
    for (int e = 1; e <= 12; ++e) {
      if (rng() % 2) a.insert(e);
      if (rng() % 2) b.insert(e);
    }
    CHECK((a ^ a).empty());
    CHECK((a ^ b) == (b ^ a));
    EdgeSet c;
    for (int e = 1; e <= 12; ++e)
      if (rng() % 2) c.insert(e);
    CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
  }
}

TEST_CASE("maclane functional") {
  SUBCASE("face set of an embedded sphere graph scores zero") {
    auto [g, rot] = fixtures::k4();
    std::vector<EdgeSet> cycles;
    EdgeSet all_faces;
    for (const Face& f : trace_faces(g, rot)) {
      cycles.push_back(f.edges());
      all_faces ^= f.edges();
    }
    CHECK(maclane_functional(cycles, g.edge_ids()) == 0);
    CHECK(all_faces.empty());
  }
  SUBCASE("empty cycle list scores zero on zero edges") {
    CHECK(maclane_functional({}, {}) == 0);
  }
  SUBCASE("face sets of random sphere embeddings score zero and cancel") {
    for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
      auto gp = random_maximal_planar(16 + static_cast<int>(seed % 7), seed);
      std::vector<EdgeSet> cycles;
      EdgeSet total;
      for (const Face& f : trace_faces(gp.graph, gp.rot)) {
        cycles.push_back(f.edges());
        total ^= f.edges();
      }
      CHECK(maclane_functional(cycles, gp.graph.edge_ids()) == 0);
      CHECK(total.empty());
    }
  }
  SUBCASE("Petersen basis is positive with e2, e15 covered thrice") {
    MultiGraph pet = fixtures::petersen();
    auto basis = fixtures::petersen_basis();
    std::map<EdgeId, int> through;
    for (const auto& c : basis)
      for (EdgeId e : c) through[e] += 1;
    CHECK(through[2] == 3);
    CHECK(through[15] == 3);
    long value = maclane_functional(basis, pet.edge_ids());
    CHECK(value > 0);
    CHECK(value == 10);  // five edges lie on three basis cycles each
  }
}

TEST_CASE("bridges") {
  SUBCASE("theta has none") {
    CHECK(bridges(fixtures::theta().graph).empty());
  }
  SUBCASE("path has all") {
    MultiGraph g = build_graph({{1, 2}, {2, 3}});
    EdgeSet b = bridges(g);
    CHECK(b.size() == 2);
  }
  SUBCASE("two triangles joined by one edge") {
    MultiGraph g = build_graph({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}});
    EdgeSet b = bridges(g);
    CHECK(b.size() == 1);
    CHECK(b.contains(7));
  }
  SUBCASE("parallel edges are never bridges") {
    MultiGraph g = build_graph({{1, 2}, {1, 2}, {2, 3}});
    EdgeSet b = bridges(g);
    CHECK(b.size() == 1);
    CHECK(b.contains(3));
  }
}

TEST_CASE("delete with suppression") {
  SUBCASE("K4 minus an edge is the theta graph") {
    auto [g, rot] = fixtures::k4();
    auto outcome = delete_with_suppression(g, &rot, 1, true);
    REQUIRE(std::holds_alternative<DeletionRecord>(outcome));
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 3);
    auto vids = g.vertex_ids();
    CHECK(g.multiplicity(vids[0], vids[1]) == 3);
    auto faces = trace_faces(g, rot);
    CHECK(euler_planarity_check(g, faces));
  }
  SUBCASE("theta edges are not removable") {
    auto [g, rot] = fixtures::theta();
    auto outcome = probe_deletion(g, &rot, 1, true);
    REQUIRE(std::holds_alternative<NotRemovable>(outcome));
    CHECK(std::get<NotRemovable>(outcome).reason == RemovalBlock::SelfLoop);
  }
  SUBCASE("replay restores the original graph and rotation") {
    auto fix = fixtures::pentaprism();
    for (EdgeId e : fix.graph.edge_ids()) {
      MultiGraph g = fix.graph;
      RotationSystem rot = fix.rot;
      auto outcome = delete_with_suppression(g, &rot, e, true);
      if (std::holds_alternative<NotRemovable>(outcome)) continue;
      replay_insertion(g, &rot, std::get<DeletionRecord>(outcome));
      CHECK(g == fix.graph);
      CHECK(rot.all() == fix.rot.all());
    }
  }
  SUBCASE("bridge-forming deletions are refused in bridgeless mode") {
    // Two squares tied by a ladder of two edges: deleting one rung leaves a
    // bridge after suppression.
    MultiGraph g = build_graph({{1, 2}, {2, 3}, {3, 4}, {4, 1},       // left square
                                {5, 6}, {6, 7}, {7, 8}, {8, 5},       // right square
                                {2, 5}, {3, 6}});                     // ladder (1,4,7,8 stay degree 2)
    // Make it cubic by doubling the outer edges.
    g.add_edge(1, 4);
    g.add_edge(7, 8);
    REQUIRE(g.is_cubic());
    auto outcome = probe_deletion(g, nullptr, 9, true);
    REQUIRE(std::holds_alternative<NotRemovable>(outcome));
    CHECK(std::get<NotRemovable>(outcome).reason == RemovalBlock::Bridge);
  }
}

TEST_CASE("rotation_from_faces round trips") {
  auto fix = fixtures::pentaprism();
  auto faces = trace_faces(fix.graph, fix.rot);
  CHECK(faces.size() == 7);
  std::multiset<std::size_t> lengths;
  for (const Face& f : faces) lengths.insert(f.length());
  CHECK(lengths == std::multiset<std::size_t>({4, 4, 4, 4, 4, 5, 5}));
}
