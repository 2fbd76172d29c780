#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "polypres/plane.hpp"

using namespace polypres;

TEST_CASE("generalized m-gon check on basic graphs") {
  Graph cycle6;
  cycle6.reset(6);
  for (int i = 0; i < 6; ++i) cycle6.add_edge(i, (i + 1) % 6);
  GonCheck g = check_generalized_m_gon(cycle6);
  CHECK(g.ok);
  CHECK(g.m == 3);
  CHECK(g.girth == 6);
  CHECK(g.diameter == 3);
  CHECK(g.bipartite);

  Graph path;
  path.reset(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  GonCheck gp = check_generalized_m_gon(path);
  CHECK(!gp.ok);
  CHECK(gp.girth == 0);
  CHECK(gp.detail == "acyclic");

  Graph tri;
  tri.reset(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  GonCheck gt = check_generalized_m_gon(tri);
  CHECK(!gt.ok);
  CHECK(gt.girth == 3);
  CHECK(!gt.bipartite);

  Graph doubled; // two vertices joined by parallel edges: a 1-gon
  doubled.reset(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  GonCheck gd = check_generalized_m_gon(doubled);
  CHECK(gd.ok);
  CHECK(gd.m == 1);
  CHECK(gd.girth == 2);

  Graph split;
  split.reset(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(check_generalized_m_gon(split), Error);
}

TEST_CASE("girth and diameter agree with reference algorithms") {
  for (int q : {2, 3}) {
    FieldTower t(q == 2 ? 2 : 3, 1);
    IncidenceGraph ig = incidence_graph(build_pg2(t));
    GonCheck g = check_generalized_m_gon(ig.graph);
    CHECK(g.ok);
    CHECK(g.diameter == oracle::diameter(ig.graph));
    CHECK(g.girth == oracle::girth(ig.graph));
  }
  Graph with_loop;
  with_loop.reset(2);
  with_loop.add_edge(0, 1);
  with_loop.add_edge(1, 1);
  CHECK(oracle::girth(with_loop) == 1);
}

TEST_CASE("algebraic planes validate for small orders") {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    FieldTower t(p, e);
    Plane pl = build_pg2(t);
    int q = t.q();
    CHECK(pl.order == q);
    CHECK(pl.num_points() == q * q + q + 1);
    CHECK(pl.num_lines() == q * q + q + 1);
    Report rep = validate_plane(pl);
    CHECK(rep.pass());
    for (const auto& it : rep.items) CHECK_MESSAGE(it.pass, it.check);
  }
}

TEST_CASE("hand-built Fano plane validates and is a generalized 3-gon") {
  Plane pl = oracle::fano();
  CHECK(validate_plane(pl).pass());
  IncidenceGraph ig = incidence_graph(pl);
  CHECK(ig.num_points == 7);
  CHECK(ig.num_lines == 7);
  GonCheck g = check_generalized_m_gon(ig.graph);
  CHECK(g.ok);
  CHECK(g.m == 3);
  for (int v = 0; v < ig.graph.n; ++v) CHECK(ig.graph.adj[v].size() == 3);
}

TEST_CASE("the refuted fixture is not a projective plane") {
  Plane pl = oracle::no_bijection_fixture();
  CHECK(!validate_plane(pl).pass());
}

TEST_CASE("dual plane validates and the double dual restores the lines") {
  FieldTower t(3, 1);
  Plane pl = build_pg2(t);
  Plane d = dualize(pl);
  CHECK(d.name == "pg2_3_dual");
  CHECK(validate_plane(d).pass());
  Plane dd = dualize(d);
  CHECK(dd.line_points == pl.line_points);
  CHECK(!same_structure(d, pl));
  CHECK(same_structure(pl, pl));
}

TEST_CASE("line_through and meet invert incidence") {
  Plane pl = oracle::fano();
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      int l = line_through(pl, a, b);
      CHECK(pl.incident(a, l));
      CHECK(pl.incident(b, l));
      int z = meet(pl, l, (l + 1) % 7);
      CHECK(pl.incident(z, l));
      CHECK(pl.incident(z, (l + 1) % 7));
    }
  CHECK_THROWS_AS(line_through(pl, 2, 2), Error);
  CHECK_THROWS_AS(meet(pl, 5, 5), Error);
}

TEST_CASE("tampering breaks validation and the content hash") {
  Plane pl = oracle::fano();
  uint64_t h = pl.content_hash();
  Plane bad = pl;
  bad.line_points[0] = {0, 1, 2}; // now two lines through {0, 1} region
  bad.finalize(7);
  CHECK(bad.content_hash() != h);
  Report rep = validate_plane(bad);
  CHECK(!rep.pass());
}

TEST_CASE("finalize rejects nonsense") {
  Plane neg;
  neg.name = "neg";
  neg.order = 2;
  neg.line_points = {{-1, 0, 1}};
  CHECK_THROWS_AS(neg.finalize(), Error);

  Plane huge;
  huge.name = "huge";
  huge.order = 70;
  huge.line_points = {{0, 1, 5001}};
  CHECK_THROWS_AS(huge.finalize(), Error);
}

TEST_CASE("incidence graph edge list is deterministic") {
  Plane pl = oracle::fano();
  IncidenceGraph ig = incidence_graph(pl);
  std::ostringstream a, b;
  write_edge_list(a, ig.graph, {ig.num_points, ig.num_lines});
  write_edge_list(b, ig.graph, {ig.num_points, ig.num_lines});
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# bipartite parts: 7 7") != std::string::npos);
}
