#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polypres/presentation.hpp"

namespace polypres {

// One oriented k-gon per base tuple, sides identified by label. Corners of
// position t collapse to vertex t, so the complex has n vertices and the
// edge carrying a copy-t label runs vertex t -> vertex t+1 (mod n).
struct Polyhedron {
  struct Edge {
    Label label;
    int tail = 0;
    int head = 0;
  };

  int k = 0;
  int num_vertices = 0;
  std::vector<Orientation> vertex_copy;    // orientation of copy v at vertex v
  std::vector<Edge> edges;                 // ascending by label
  std::vector<std::vector<Label>> faces;   // base tuple boundaries
  std::vector<std::vector<int>> corner_vertex; // [face][position] -> vertex

  Plane plane;
  std::vector<int> tmap;
  uint64_t presentation_hash = 0;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
};

// requires a presentation that passed verification (unchecked_presentation
// otherwise); gluing is done by corner union-find and cross-checked against
// the expected vertex alignment
Polyhedron assemble(const Presentation& p);

// Link of a vertex: one node per edge-end at the vertex, one arc per face
// corner there. Tails of copy-v edges carry point labels x_i^v; heads of
// copy-(v-1) edges carry the paired line labels y_i^v.
struct LinkGraph {
  int vertex = 0;
  Graph graph;    // nodes: 0..P-1 tails, P..2P-1 heads; arcs with multiplicity
  int num_tails = 0;
  int arcs = 0;
  std::vector<std::string> node_labels;
};

LinkGraph link(const Polyhedron& x, int v); // bad_vertex

// the natural label map onto the incidence graph of the plane (straight
// vertex) or its dual (dual vertex): node bijection, adjacency both ways,
// arc multiplicities
Report check_link_isomorphism(const Polyhedron& x, const LinkGraph& l);

struct ComplexStats {
  int v = 0, e = 0, f = 0, k = 0, chi = 0;
  std::vector<int> link_nodes; // s_i
  std::vector<int> link_arcs;  // t_i
  bool identity_edges = false; // E == (sum s_i) / 2
  bool identity_faces = false; // k F == sum t_i
};

ComplexStats stats(const Polyhedron& x);

enum class Curvature { euclidean, hyperbolic, neither };

struct GonParams {
  int k = 0;
  int m = 0;
  Curvature curvature = Curvature::neither;
};

// euclidean iff (k, m) = (3, 3); hyperbolic iff mk > 2m + k
GonParams classify_curvature(int k, int m);
std::string curvature_name(Curvature c);

// everything the report file carries: counts, curvature, and one row per
// vertex with the link's gon check and label-isomorphism verdict
struct ComplexReport {
  ComplexStats counts;
  Curvature curvature = Curvature::neither;
  struct LinkRow {
    int nodes = 0, arcs = 0;
    int m = 0;             // 0 when the gon check fails
    std::string iso;       // "G", "G'" or "FAIL"
    bool pass = false;
    std::string witness;
  };
  std::vector<LinkRow> links;
  bool pass = false;
  std::string first_failure;
};

ComplexReport analyze(const Polyhedron& x);

void write_complex_report(std::ostream& out, const ComplexReport& r,
                          uint64_t presentation_hash);
void write_complex_report(const std::string& path, const ComplexReport& r,
                          uint64_t presentation_hash);

} // namespace polypres
