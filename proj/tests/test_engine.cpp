#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourcolor/brute.hpp"
#include "fourcolor/even_face.hpp"
#include "fourcolor/fixtures.hpp"
#include "fourcolor/generator.hpp"
#include "fourcolor/dual.hpp"
#include "fourcolor/tait.hpp"

using namespace fourcolor;

TEST_CASE("brute force oracle") {
  CHECK(brute_force_colorings(fixtures::k4().graph).count == 6);
  CHECK(brute_force_colorings(fixtures::theta().graph).count == 6);
  CHECK(brute_force_colorings(fixtures::petersen()).count == 0);
  SUBCASE("witness is proper") {
    auto r = brute_force_colorings(fixtures::prism3().graph);
    REQUIRE(r.witness.has_value());
    CHECK(verify_coloring(fixtures::prism3().graph, *r.witness).valid);
    CHECK(r.count > 0);
  }
  SUBCASE("cap stops the count") {
    auto r = brute_force_colorings(fixtures::k4().graph, 2);
    CHECK(r.count == 2);
    CHECK(r.cap_hit);
  }
  SUBCASE("size guard refuses big graphs") {
    auto gp = random_maximal_planar(40, 3);
    DualResult d = dual_cubic(gp.graph, gp.rot);
    CHECK_THROWS_WITH_AS(brute_force_colorings(d.graph), doctest::Contains("guard"), GraphError);
  }
}

TEST_CASE("find_coupling_disk") {
  auto fix = fixtures::pentaprism();
  SUBCASE("same-colored hosts on one disk") {
    // e4 and e13 are blue; they share the green disk {4,5,7,13} and also a
    // red one, so the search may return either owner.
    auto found = find_coupling_disk(fix.graph, fix.coloring, 4, 13);
    REQUIRE(found.has_value());
    CHECK(found->first != kBlue);
    CHECK(found->second.contains_edge(4));
    CHECK(found->second.contains_edge(13));
    Disk green = disk_through(fix.graph, fix.coloring, kGreen, 4);
    CHECK(green.contains_edge(13));
    CHECK(green.length() == 4);
  }
  SUBCASE("differently-colored hosts search the third color") {
    // e3 is red, e2 is blue; their common 2-factor is green-owned.
    auto found = find_coupling_disk(fix.graph, fix.coloring, 3, 2);
    REQUIRE(found.has_value());
    CHECK(found->first == kGreen);
  }
  SUBCASE("absence is a normal result") {
    auto fix8 = fixtures::octaprism();
    CHECK_FALSE(find_coupling_disk(fix8.graph, fix8.coloring, 8, 17).has_value());
  }
}

TEST_CASE("insert_colored_edge") {
  auto fix = fixtures::pentaprism();
  SUBCASE("trivial insertion keeps the coloring proper") {
    auto coupling = find_coupling_disk(fix.graph, fix.coloring, 4, 13);
    REQUIRE(coupling.has_value());
    MultiGraph g = fix.graph;
    RotationSystem rot = fix.rot;
    auto r = insert_colored_edge(g, rot, fix.coloring, 4, 13, *coupling);
    CHECK(g.num_vertices() == fix.graph.num_vertices() + 2);
    CHECK(g.num_edges() == fix.graph.num_edges() + 3);
    CHECK(verify_coloring(g, r.coloring).valid);
    // The new edge takes the owning color of the coupling disk.
    CHECK(r.coloring.at(r.record.deleted) == coupling->first);
    CHECK(euler_planarity_check(g, trace_faces(g, rot)));
  }
  SUBCASE("single-host insertion (both ends on one edge)") {
    auto coupling = find_coupling_disk(fix.graph, fix.coloring, 1, 1);
    REQUIRE(coupling.has_value());
    MultiGraph g = fix.graph;
    RotationSystem rot = fix.rot;
    auto r = insert_colored_edge(g, rot, fix.coloring, 1, 1, *coupling);
    CHECK(g.num_vertices() == fix.graph.num_vertices() + 2);
    CHECK(g.num_edges() == fix.graph.num_edges() + 3);
    CHECK(verify_coloring(g, r.coloring).valid);
    CHECK(euler_planarity_check(g, trace_faces(g, rot)));
  }
  SUBCASE("non-co-facial hosts are an embedding violation") {
    // e1 (outer) and e13 (inner) never border a common face of the prism.
    auto coupling = find_coupling_disk(fix.graph, fix.coloring, 1, 13);
    MultiGraph g = fix.graph;
    RotationSystem rot = fix.rot;
    if (coupling)
      CHECK_THROWS_WITH_AS(insert_colored_edge(g, rot, fix.coloring, 1, 13, *coupling),
                           doctest::Contains("common face"), GraphError);
  }
}

TEST_CASE("resolve_by_rotation on the two-square obstruction") {
  auto fix = fixtures::octaprism();
  REQUIRE_FALSE(find_coupling_disk(fix.graph, fix.coloring, 8, 17).has_value());

  SUBCASE("budget 0 never succeeds after a failed direct search") {
    CHECK_FALSE(resolve_by_rotation(fix.graph, fix.coloring, 8, 17, 0).has_value());
  }
  SUBCASE("two rotations couple the hosts and allow a red edge") {
    EngineCounters counters;
    auto fixed = resolve_by_rotation(fix.graph, fix.coloring, 8, 17, 2, 4000, &counters);
    REQUIRE(fixed.has_value());
    CHECK(verify_coloring(fix.graph, *fixed).valid);
    auto coupling = find_coupling_disk(fix.graph, *fixed, 8, 17);
    REQUIRE(coupling.has_value());
    CHECK(counters.rotations >= 1);

    // The recorded resolution rotates the two green squares; after it the red
    // 2-factor becomes the pair of octagons.
    EdgeColoring recorded = fix.coloring;
    TwoFactor gc = two_factor(fix.graph, fix.coloring, kGreen);
    for (const Disk& d : disks(fix.graph, gc)) {
      std::set<EdgeId> ids(d.edges.begin(), d.edges.end());
      if (ids == std::set<EdgeId>{2, 3, 8, 10} || ids == std::set<EdgeId>{16, 17, 20, 22})
        recorded = rotate_disk(recorded, d);
    }
    CHECK(two_factor(fix.graph, recorded, kRed).edges ==
          EdgeSet({1, 3, 5, 6, 7, 8, 9, 12, 13, 14, 15, 17, 19, 20, 21, 24}));
    CHECK(find_coupling_disk(fix.graph, recorded, 8, 17).has_value());
  }
}

TEST_CASE("auxiliary edge resolver") {
  SUBCASE("a length-4 disk rotation flips the auxiliary edge's color") {
    // Green disk {4,5,7,13} of the prism: rotating it swaps its blue and red
    // edges, the mechanism that frees a stuck auxiliary edge for deletion.
    auto fix = fixtures::pentaprism();
    auto ds = disks(fix.graph, two_factor(fix.graph, fix.coloring, kGreen));
    const Disk* four = nullptr;
    for (const Disk& d : ds)
      if (d.length() == 4) four = &d;
    REQUIRE(four != nullptr);
    EdgeColoring rotated = rotate_disk(fix.coloring, *four);
    for (EdgeId e : four->edges) CHECK(rotated.at(e) != fix.coloring.at(e));
    CHECK(verify_coloring(fix.graph, rotated).valid);
  }
  SUBCASE("resolves the octaprism hosts without rotations of its own") {
    auto fix = fixtures::octaprism();
    MultiGraph g = fix.graph;
    RotationSystem rot = fix.rot;
    AuxConfig cfg;
    EngineCounters counters;
    auto r = resolve_by_auxiliary_edge(g, rot, fix.coloring, 8, 17, cfg, &counters);
    REQUIRE(r.has_value());
    CHECK(g.num_vertices() == fix.graph.num_vertices() + 2);
    CHECK(g.num_edges() == fix.graph.num_edges() + 3);
    CHECK(verify_coloring(g, r->coloring).valid);
    CHECK(euler_planarity_check(g, trace_faces(g, rot)));
    CHECK(g.has_edge(r->target_record.deleted));
  }
}

TEST_CASE("peel") {
  SUBCASE("bases peel to themselves") {
    auto t = fixtures::theta();
    PeelResult p = peel(t.graph, t.rot);
    CHECK(p.script.empty());
    CHECK(classify_base(p.base) == BaseKind::Theta);

    auto k = fixtures::k4();
    p = peel(k.graph, k.rot);
    CHECK(p.script.empty());
    CHECK(classify_base(p.base) == BaseKind::K4);
  }
  SUBCASE("tutte-like fixture reaches K4 in exactly 21 deletions") {
    auto fix = fixtures::tutte_like();
    PeelResult p = peel(fix.graph, fix.rot);
    CHECK(classify_base(p.base) == BaseKind::K4);
    CHECK(p.script.size() == 21);
  }
  SUBCASE("every intermediate stays cubic and bridgeless") {
    auto fix = fixtures::octaprism();
    MultiGraph g = fix.graph;
    RotationSystem rot = fix.rot;
    PeelResult p = peel(g, rot);
    MultiGraph cur = fix.graph;
    RotationSystem cur_rot = fix.rot;
    for (const DeletionRecord& rec : p.script) {
      auto outcome = delete_with_suppression(cur, &cur_rot, rec.deleted, true, rec.end_a.host,
                                             rec.end_b.host);
      REQUIRE(std::holds_alternative<DeletionRecord>(outcome));
      CHECK(cur.is_cubic());
      CHECK(is_bridgeless(cur));
    }
    CHECK(classify_base(cur) != BaseKind::None);
  }
}

TEST_CASE("color_base") {
  auto t = fixtures::theta();
  EdgeColoring ct = color_base(t.graph);
  CHECK(ct.at(1) == kRed);
  CHECK(ct.at(2) == kBlue);
  CHECK(ct.at(3) == kGreen);
  CHECK(verify_coloring(t.graph, ct).valid);

  auto k = fixtures::k4();
  EdgeColoring ck = color_base(k.graph);
  CHECK(verify_coloring(k.graph, ck).valid);
  // Three perfect matchings, one per color.
  for (KleinColor c : kEdgeColors) CHECK(ck.color_class(c).size() == 2);
}

TEST_CASE("color_cubic") {
  SUBCASE("bases and small fixtures") {
    for (auto fix : {fixtures::theta(), fixtures::k4(), fixtures::prism3()}) {
      ColorOutcome r = color_cubic(fix.graph, fix.rot);
      REQUIRE(r.ok());
      CHECK(verify_coloring(fix.graph, *r.coloring).valid);
    }
  }
  SUBCASE("tutte-like fixture") {
    auto fix = fixtures::tutte_like();
    ColorOutcome r = color_cubic(fix.graph, fix.rot);
    REQUIRE(r.ok());
    CHECK(verify_coloring(fix.graph, *r.coloring).valid);
  }
  SUBCASE("bridges are rejected up front") {
    MultiGraph g = build_graph({{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}, {1, 4}});
    g.add_edge(2, 3);
    g.add_edge(5, 6);
    RotationSystem rot;
    for (VertexId v : g.vertex_ids()) rot.set(v, g.incident(v));
    REQUIRE(g.is_cubic());
    CHECK_THROWS_WITH_AS(color_cubic(g, rot), doctest::Contains("bridge"), GraphError);
  }
  SUBCASE("every produced coloring has three all-even 2-factors") {
    auto fix = fixtures::octaprism();
    ColorOutcome r = color_cubic(fix.graph, fix.rot);
    REQUIRE(r.ok());
    for (KleinColor c : kEdgeColors)
      for (const Disk& d : disks(fix.graph, two_factor(fix.graph, *r.coloring, c)))
        CHECK(d.length() % 2 == 0);
  }
}

TEST_CASE("petersen negative control") {
  MultiGraph pet = fixtures::petersen();
  // e3 joins the corners {e1,e2,e3} and {e3,e11,e12}; peeling it back out
  // restores hosts e2 and e12 in the colorable previous graph. Those hosts
  // can never be coupled because Petersen itself is class two.
  auto outcome = delete_with_suppression(pet, nullptr, 3, /*bridgeless=*/true, 2, 12);
  REQUIRE(std::holds_alternative<DeletionRecord>(outcome));
  const DeletionRecord& rec = std::get<DeletionRecord>(outcome);
  CHECK(rec.hosts() == std::pair<EdgeId, EdgeId>{2, 12});
  REQUIRE(pet.is_cubic());

  auto witness = brute_force_colorings(pet);
  REQUIRE(witness.count > 0);
  EdgeColoring col = *witness.witness;
  CHECK_FALSE(find_coupling_disk(pet, col, 2, 12).has_value());
  CHECK_FALSE(resolve_by_rotation(pet, col, 2, 12, 4, 20000).has_value());
}

TEST_CASE("even-face bootstrap") {
  SUBCASE("all-even graphs are colored directly") {
    auto fix = fixtures::octaprism();  // prisms over even rings are bipartite
    BootstrapReport r = even_face_bootstrap(fix.graph, fix.rot);
    CHECK(r.edges_added == 0);
    CHECK(verify_coloring(fix.graph, r.coloring).valid);
  }
  SUBCASE("the walkthrough graph needs exactly two joining edges") {
    auto fix = fixtures::even_face_demo();
    BootstrapReport r = even_face_bootstrap(fix.graph, fix.rot);
    CHECK(r.edges_added == 2);
    CHECK(verify_coloring(fix.graph, r.coloring).valid);
  }
  SUBCASE("works on the tutte-like fixture") {
    auto fix = fixtures::tutte_like();
    BootstrapReport r = even_face_bootstrap(fix.graph, fix.rot);
    CHECK(verify_coloring(fix.graph, r.coloring).valid);
  }
}

TEST_CASE("koenig coloring of bipartite cubic graphs") {
  auto fix = fixtures::octaprism();
  EdgeColoring col = koenig_edge_coloring(fix.graph);
  CHECK(verify_coloring(fix.graph, col).valid);
  CHECK_THROWS_WITH_AS(koenig_edge_coloring(fixtures::pentaprism().graph),
                       doctest::Contains("bipartite"), GraphError);
}

TEST_CASE("random duals color end to end") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull, 14ull}) {
    auto gp = random_maximal_planar(20 + static_cast<int>(seed), seed);
    DualResult d = dual_cubic(gp.graph, gp.rot);
    ColorOutcome r = color_cubic(d.graph, d.rotation);
    REQUIRE(r.ok());
    CHECK(verify_coloring(d.graph, *r.coloring).valid);
  }
}
