#include "polypres/plane.hpp"

#include <algorithm>
#include <ostream>

#include "polypres/hash.hpp"
#include "textio.hpp"

namespace polypres {

void Plane::finalize(int num_points_hint) {
  int num = num_points_hint;
  for (const auto& lp : line_points)
    for (int p : lp) {
      if (p < 0)
        fail(Errc::internal_inconsistency, "negative point index");
      num = std::max(num, p + 1);
    }
  if (num < 0) num = 0;
  if (num > 5000)
    fail(Errc::size_bound,
         "plane with " + std::to_string(num) + " points is beyond desk scale");

  point_lines.assign(num, {});
  inc_.assign(static_cast<size_t>(num) * line_points.size(), 0);
  for (int l = 0; l < num_lines(); ++l)
    for (int p : line_points[l]) {
      point_lines[p].push_back(l);
      inc_[static_cast<size_t>(p) * num_lines() + l] = 1;
    }
}

uint64_t Plane::content_hash() const {
  Fnv1a h;
  h.str(name).u32(static_cast<uint32_t>(order));
  h.u32(static_cast<uint32_t>(num_points()));
  h.u32(static_cast<uint32_t>(num_lines()));
  for (const auto& lp : line_points) {
    h.u32(static_cast<uint32_t>(lp.size()));
    for (int p : lp) h.u32(static_cast<uint32_t>(p));
  }
  return h.value();
}

bool same_structure(const Plane& a, const Plane& b) {
  return a.name == b.name && a.order == b.order &&
         a.line_points == b.line_points;
}

Plane build_pg2(const FieldTower& tower) {
  int q = tower.q();
  int order_k = tower.order_k();

  // canonical coset representatives of K*/F*: top nonzero coordinate 1,
  // listed in increasing encoding
  std::vector<int> reps;
  for (int enc = 1; enc < order_k; ++enc) {
    auto c = tower.from_enc(enc).coeffs();
    int top = c[2] != 0 ? 2 : (c[1] != 0 ? 1 : 0);
    if (c[top] == 1) reps.push_back(enc);
  }
  int num = q * q + q + 1;
  if (static_cast<int>(reps.size()) != num)
    fail(Errc::internal_inconsistency,
         "expected " + std::to_string(num) + " cosets, found " +
             std::to_string(reps.size()));

  Plane plane;
  plane.name = "pg2_" + std::to_string(q);
  plane.order = q;
  plane.provenance = Plane::Provenance::algebraic;
  plane.coset_reps = reps;
  plane.tower_p = tower.characteristic();
  plane.tower_e = tower.base_degree();

  // point g_i F on line g_j E  iff  Tr(g_i / g_j) = 0
  plane.line_points.assign(num, {});
  for (int j = 0; j < num; ++j) {
    FieldElement hinv = tower.inv(tower.from_enc(reps[j]));
    for (int i = 0; i < num; ++i)
      if (tower.trace(tower.mul(tower.from_enc(reps[i]), hinv)) == 0)
        plane.line_points[j].push_back(i);
  }
  plane.finalize(num);
  return plane;
}

namespace {

bool collinear(const Plane& pl, int p1, int p2, int p3) {
  for (int l : pl.point_lines[p1])
    if (pl.incident(p2, l) && pl.incident(p3, l)) return true;
  return false;
}

int common_count(const std::vector<int>& a, const std::vector<int>& b,
                 int* first) {
  int count = 0;
  auto it = a.begin();
  for (int x : b) {
    while (it != a.end() && *it < x) ++it;
    if (it != a.end() && *it == x) {
      if (count == 0 && first) *first = x;
      ++count;
    }
  }
  return count;
}

} // namespace

Report validate_plane(const Plane& plane) {
  Report rep;
  int q = plane.order;
  int num = q * q + q + 1;
  int P = plane.num_points();
  int L = plane.num_lines();

  {
    bool ok = q >= 2 && P == num && L == num;
    rep.add("counts", ok,
            ok ? "" : "order " + std::to_string(q) + " needs " +
                          std::to_string(num) + " points and lines, found " +
                          std::to_string(P) + "/" + std::to_string(L));
  }

  {
    bool ok = true;
    std::string w;
    for (int l = 0; l < L && ok; ++l) {
      const auto& lp = plane.line_points[l];
      if (static_cast<int>(lp.size()) != q + 1) {
        ok = false;
        w = "line L" + std::to_string(l) + " has " +
            std::to_string(lp.size()) + " points, expected " +
            std::to_string(q + 1);
      } else if (!std::is_sorted(lp.begin(), lp.end()) ||
                 std::adjacent_find(lp.begin(), lp.end()) != lp.end()) {
        ok = false;
        w = "line L" + std::to_string(l) + " not strictly ascending";
      }
    }
    rep.add("line-size", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int p = 0; p < P && ok; ++p)
      if (static_cast<int>(plane.point_lines[p].size()) != q + 1) {
        ok = false;
        w = "point p" + std::to_string(p) + " lies on " +
            std::to_string(plane.point_lines[p].size()) +
            " lines, expected " + std::to_string(q + 1);
      }
    rep.add("point-degree", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int p1 = 0; p1 < P && ok; ++p1)
      for (int p2 = p1 + 1; p2 < P && ok; ++p2) {
        int c = common_count(plane.point_lines[p1], plane.point_lines[p2],
                             nullptr);
        if (c != 1) {
          ok = false;
          w = "points p" + std::to_string(p1) + " p" + std::to_string(p2) +
              " lie on " + std::to_string(c) + " common lines";
        }
      }
    rep.add("two-points", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int l1 = 0; l1 < L && ok; ++l1)
      for (int l2 = l1 + 1; l2 < L && ok; ++l2) {
        int c = common_count(plane.line_points[l1], plane.line_points[l2],
                             nullptr);
        if (c != 1) {
          ok = false;
          w = "lines L" + std::to_string(l1) + " L" + std::to_string(l2) +
              " share " + std::to_string(c) + " points";
        }
      }
    rep.add("two-lines", ok, w);
  }

  {
    bool found = false;
    for (int p1 = 0; p1 < P && !found; ++p1)
      for (int p2 = p1 + 1; p2 < P && !found; ++p2)
        for (int p3 = p2 + 1; p3 < P && !found; ++p3) {
          if (collinear(plane, p1, p2, p3)) continue;
          for (int p4 = p3 + 1; p4 < P && !found; ++p4)
            found = !collinear(plane, p1, p2, p4) &&
                    !collinear(plane, p1, p3, p4) &&
                    !collinear(plane, p2, p3, p4);
        }
    rep.add("quadrilateral", found,
            found ? "" : "no four points in general position");
  }

  {
    bool ok = false;
    std::string w;
    try {
      GonCheck gc = check_generalized_m_gon(incidence_graph(plane).graph);
      ok = gc.ok && gc.m == 3;
      if (!ok)
        w = gc.ok ? "incidence graph is a generalized " + std::to_string(gc.m) +
                        "-gon, not 3"
                  : gc.detail;
    } catch (const Error& e) {
      w = e.what();
    }
    rep.add("gen-3-gon", ok, w);
  }

  return rep;
}

Plane dualize(const Plane& plane) {
  Plane dual;
  dual.name = plane.name + "_dual";
  dual.order = plane.order;
  dual.provenance = Plane::Provenance::dual;
  dual.line_points = plane.point_lines;
  dual.finalize(plane.num_lines());
  return dual;
}

int line_through(const Plane& plane, int p1, int p2) {
  if (p1 < 0 || p2 < 0 || p1 >= plane.num_points() || p2 >= plane.num_points())
    fail(Errc::internal_inconsistency, "point index out of range");
  if (p1 == p2)
    fail(Errc::same_point, "p" + std::to_string(p1));
  int l = -1;
  int c = common_count(plane.point_lines[p1], plane.point_lines[p2], &l);
  if (c != 1)
    fail(Errc::axiom_violation, "points p" + std::to_string(p1) + " p" +
                                    std::to_string(p2) + " lie on " +
                                    std::to_string(c) + " common lines");
  return l;
}

int meet(const Plane& plane, int l1, int l2) {
  if (l1 < 0 || l2 < 0 || l1 >= plane.num_lines() || l2 >= plane.num_lines())
    fail(Errc::internal_inconsistency, "line index out of range");
  if (l1 == l2)
    fail(Errc::same_line, "L" + std::to_string(l1));
  int p = -1;
  int c = common_count(plane.line_points[l1], plane.line_points[l2], &p);
  if (c != 1)
    fail(Errc::axiom_violation, "lines L" + std::to_string(l1) + " L" +
                                    std::to_string(l2) + " share " +
                                    std::to_string(c) + " points");
  return p;
}

IncidenceGraph incidence_graph(const Plane& plane) {
  IncidenceGraph ig;
  ig.num_points = plane.num_points();
  ig.num_lines = plane.num_lines();
  ig.graph.reset(ig.num_points + ig.num_lines);
  for (int p = 0; p < ig.num_points; ++p)
    for (int l : plane.point_lines[p]) ig.graph.add_edge(p, ig.num_points + l);
  return ig;
}

void save_plane(std::ostream& out, const Plane& plane) {
  out << "plane " << plane.name << " order " << plane.order << "\n";
  for (int l = 0; l < plane.num_lines(); ++l) {
    out << "L" << l << ":";
    for (int p : plane.line_points[l]) out << " p" << p;
    out << "\n";
  }
}

void save_plane(const std::string& path, const Plane& plane) {
  auto out = textio::open_out(path);
  save_plane(out, plane);
}

Plane load_plane(std::istream& in) {
  using namespace textio;
  std::string line;
  expect(next_line(in, line), "empty plane file");
  auto toks = split(line);
  expect(toks.size() == 4 && toks[0] == "plane" && toks[2] == "order",
         "expected `plane <name> order <q>`, got: " + line);
  Plane plane;
  plane.name = toks[1];
  plane.order = parse_int(toks[3], "plane order");
  plane.provenance = Plane::Provenance::file;

  while (next_line(in, line)) {
    toks = split(line);
    int l = static_cast<int>(plane.line_points.size());
    expect(!toks.empty() && toks[0] == "L" + std::to_string(l) + ":",
           "expected record L" + std::to_string(l) + ":, got: " + line);
    expect(static_cast<int>(toks.size()) == plane.order + 2,
           "line L" + std::to_string(l) + " has " +
               std::to_string(toks.size() - 1) + " points, expected " +
               std::to_string(plane.order + 1));
    std::vector<int> pts;
    for (size_t i = 1; i < toks.size(); ++i)
      pts.push_back(parse_indexed(toks[i], 'p', "point index"));
    for (size_t i = 1; i < pts.size(); ++i)
      expect(pts[i - 1] < pts[i],
             "line L" + std::to_string(l) + " not strictly ascending");
    plane.line_points.push_back(std::move(pts));
  }
  plane.finalize(-1);
  return plane;
}

Plane load_plane(const std::string& path) {
  auto in = textio::open_in(path);
  return load_plane(in);
}

} // namespace polypres
