#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polypres/pointline.hpp"

using namespace polypres;

TEST_CASE("trace bijection is the index identity and certifies in char 2") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {2, 3}}) {
    FieldTower t(p, e);
    Plane pl = build_pg2(t);
    PointLineBijection b = trace_bijection(t, pl);
    CHECK(b.certified == CertState::pass);
    CHECK(b.witness.empty());
    CHECK(b.plane_hash == pl.content_hash());
    for (int i = 0; i < pl.num_points(); ++i) CHECK(b.map[i] == i);
  }
}

TEST_CASE("trace bijection fails P2 in characteristics 5 and 7") {
  for (int p : {5, 7}) {
    FieldTower t(p, 1);
    Plane pl = build_pg2(t);
    PointLineBijection b = trace_bijection(t, pl);
    CHECK(b.certified == CertState::fail);
    CHECK(b.witness.substr(0, 3) == "P2:");
  }
}

TEST_CASE("characteristic 3 is refused; unchecked it fails P1 at the point F") {
  FieldTower t(3, 1);
  Plane pl = build_pg2(t);
  try {
    trace_bijection(t, pl);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::characteristic_three);
  }
  PointLineBijection b = trace_bijection_unchecked_char(t, pl);
  CHECK(b.certified == CertState::fail);
  CHECK(b.witness.substr(0, 3) == "P1:");
}

TEST_CASE("trace construction rejects foreign planes") {
  FieldTower t(2, 1);
  Plane pl = oracle::fano();
  CHECK_THROWS_AS(trace_bijection(t, pl), Error);
}

TEST_CASE("verify_properties reports the first violation honestly") {
  FieldTower t(2, 1);
  Plane pl = build_pg2(t);
  PointLineBijection b = trace_bijection(t, pl);

  PointLineBijection dup = b;
  dup.map[1] = dup.map[0];
  CHECK_THROWS_AS(verify_properties(pl, dup), Error);

  PointLineBijection bad = b;
  // point 0 onto a line through it, keeping the map bijective
  int on = pl.point_lines[0][0];
  int other = static_cast<int>(
      std::find(bad.map.begin(), bad.map.end(), on) - bad.map.begin());
  std::swap(bad.map[0], bad.map[other]);
  Certification c = verify_properties(pl, bad);
  CHECK(c.state == CertState::fail);
  CHECK(c.witness.substr(0, 3) == "P1:");
  CHECK(bad.certified == CertState::fail);
}

TEST_CASE("induced permutations are fixed-point-free on every line") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}}) {
    FieldTower t(p, e);
    Plane pl = build_pg2(t);
    PointLineBijection b = trace_bijection(t, pl);
    for (int y = 0; y < pl.num_lines(); ++y) {
      InducedPermutation ip = induced_permutation(pl, b, y);
      CHECK(ip.line == y);
      CHECK(ip.perm.size() == size_t(t.q() + 1));
      std::set<int> domain, image;
      for (auto [x, tx] : ip.perm) {
        CHECK(x != tx);
        CHECK(pl.incident(x, y));
        CHECK(pl.incident(tx, y));
        domain.insert(x);
        image.insert(tx);
      }
      CHECK(domain == image);
      CHECK(domain.size() == size_t(t.q() + 1));
    }
  }
}

TEST_CASE("induced permutation insists on a certified bijection") {
  FieldTower t(2, 1);
  Plane pl = build_pg2(t);
  PointLineBijection raw;
  raw.map.assign(pl.num_points(), 0);
  for (int i = 0; i < pl.num_points(); ++i) raw.map[i] = i;
  raw.plane_hash = pl.content_hash();
  CHECK_THROWS_AS(induced_permutation(pl, raw, 0), Error);
}

TEST_CASE("search finds the lexicographically first bijection") {
  FieldTower t2(2, 1);
  Plane p2 = build_pg2(t2);
  SearchResult r = search_bijection(p2);
  REQUIRE(r.found);
  CHECK(r.bijection.certified == CertState::pass);
  CHECK(r.bijection.map == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  FieldTower t3(3, 1);
  Plane p3 = build_pg2(t3);
  SearchResult r1 = search_bijection(p3);
  REQUIRE(r1.found);
  CHECK(r1.bijection.map ==
        std::vector<int>{1, 2, 3, 6, 9, 7, 12, 10, 5, 11, 8, 0, 4});

  SearchConfig four;
  four.jobs = 4;
  SearchResult r4 = search_bijection(p3, four);
  REQUIRE(r4.found);
  CHECK(r4.bijection.map == r1.bijection.map);
}

TEST_CASE("search refutes the fixture with a deterministic node count") {
  Plane pl = oracle::no_bijection_fixture();
  SearchResult r1 = search_bijection(pl);
  CHECK(!r1.found);
  CHECK(r1.nodes > 0);
  SearchConfig four;
  four.jobs = 4;
  SearchResult r4 = search_bijection(pl, four);
  CHECK(!r4.found);
  CHECK(r4.nodes == r1.nodes);
}

TEST_CASE("search stops at the node budget") {
  FieldTower t(3, 1);
  Plane pl = build_pg2(t);
  SearchConfig tiny;
  tiny.budget = 3;
  try {
    search_bijection(pl, tiny);
    FAIL("expected budget stop");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("uniqueness behind P2: rhs 1 vs rhs trace(1)") {
  FieldTower t2(2, 1);
  UniquenessReport u2 = verify_trace_uniqueness(t2);
  CHECK(u2.pass);
  CHECK(u2.solutions_one == std::vector<int>{1});
  CHECK(u2.trace_of_one == 1);
  CHECK(u2.solutions_trace_one == u2.solutions_one);

  FieldTower t4(2, 2);
  CHECK(verify_trace_uniqueness(t4).pass);

  FieldTower t5(5, 1);
  UniquenessReport u5 = verify_trace_uniqueness(t5);
  CHECK(!u5.pass);
  CHECK(u5.solutions_one.empty());
  CHECK(u5.trace_of_one == 3);
  CHECK(u5.solutions_trace_one ==
        std::vector<int>{1, 21, 45, 64, 102, 112, 117});
}
