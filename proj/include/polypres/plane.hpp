#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polypres/gf.hpp"
#include "polypres/graph.hpp"
#include "polypres/report.hpp"

namespace polypres {

// Finite projective plane of order q as an explicit incidence structure.
// Points and lines are 0-based indices; display labels are p<i> and L<j>.
struct Plane {
  enum class Provenance { algebraic, file, dual };

  std::string name;
  int order = 0; // q
  std::vector<std::vector<int>> line_points; // per line, ascending
  std::vector<std::vector<int>> point_lines; // transpose, ascending
  Provenance provenance = Provenance::file;

  // algebraic planes remember their construction so the trace bijection can
  // match indices to coset representatives (K* encodings, index order)
  std::vector<int> coset_reps;
  int tower_p = 0;
  int tower_e = 0;

  int num_points() const { return static_cast<int>(point_lines.size()); }
  int num_lines() const { return static_cast<int>(line_points.size()); }

  bool incident(int point, int line) const {
    return inc_[static_cast<size_t>(point) * num_lines() + line] != 0;
  }

  // rebuild point_lines and the incidence matrix from line_points
  void finalize(int num_points_hint = -1);

  uint64_t content_hash() const; // name, order, incidences

private:
  std::vector<char> inc_;
};

// identical name, order and incidence lists (provenance ignored)
bool same_structure(const Plane& a, const Plane& b);

// PG(2,q): points are the cosets gF of K*/F*, lines the cosets hE where E is
// the trace kernel; gF on hE iff Tr(g/h) = 0. Representatives are scaled so
// the highest nonzero coordinate is 1 and indexed in increasing encoding.
Plane build_pg2(const FieldTower& tower);

// every axiom, nondegeneracy, and the generalized 3-gon condition; failures
// are report entries with witnesses
Report validate_plane(const Plane& plane);

Plane dualize(const Plane& plane);

int line_through(const Plane& plane, int p1, int p2); // same_point, axiom_violation
int meet(const Plane& plane, int l1, int l2);         // same_line, axiom_violation

struct IncidenceGraph {
  Graph graph; // vertices: points 0..P-1, then lines P..P+L-1
  int num_points = 0;
  int num_lines = 0;
};

IncidenceGraph incidence_graph(const Plane& plane);

void save_plane(std::ostream& out, const Plane& plane);
void save_plane(const std::string& path, const Plane& plane);
Plane load_plane(std::istream& in);
Plane load_plane(const std::string& path);

} // namespace polypres
