#include "polypres/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include "textio.hpp"

namespace polypres {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Polyhedron assemble(const Presentation& p) {
  if (!p.verified)
    fail(Errc::unchecked_presentation,
         "assemble needs a presentation that passed verification");

  Polyhedron x;
  x.k = p.k;
  x.num_vertices = p.n();
  x.vertex_copy = p.copies;
  x.plane = p.plane;
  x.tmap = p.tmap;
  x.presentation_hash = p.content_hash();

  int k = p.k;
  int faces = p.num_base;
  for (int f = 0; f < faces; ++f) {
    x.faces.push_back(p.tuples[f]);
    for (int pos = 0; pos < k; ++pos)
      if (p.tuples[f][pos].copy != pos)
        fail(Errc::internal_inconsistency,
             "base tuple " + std::to_string(f) + " is not copy-aligned");
  }

  // glue sides carrying equal labels; corners travel with their side ends
  UnionFind uf(faces * k);
  std::map<Label, std::vector<int>> sides; // label -> faces carrying it
  for (int f = 0; f < faces; ++f)
    for (int pos = 0; pos < k; ++pos) sides[p.tuples[f][pos]].push_back(f);
  for (const auto& [label, fs] : sides) {
    int pos = label.copy;
    for (size_t i = 1; i < fs.size(); ++i) {
      uf.unite(fs[0] * k + pos, fs[i] * k + pos);
      uf.unite(fs[0] * k + (pos + 1) % k, fs[i] * k + (pos + 1) % k);
    }
  }

  // expected alignment: every corner at a position collapses to one vertex
  for (int f = 0; f < faces; ++f)
    for (int pos = 0; pos < k; ++pos)
      if (uf.find(f * k + pos) != uf.find(pos))
        fail(Errc::internal_inconsistency,
             "corner classes do not align with tuple positions");
  for (int pos = 1; pos < k && faces > 0; ++pos)
    if (uf.find(pos) == uf.find(0))
      fail(Errc::internal_inconsistency,
           "distinct tuple positions glued together");

  x.corner_vertex.assign(faces, std::vector<int>(k));
  for (int f = 0; f < faces; ++f)
    for (int pos = 0; pos < k; ++pos) x.corner_vertex[f][pos] = pos;

  for (const auto& [label, fs] : sides)
    x.edges.push_back({label, label.copy, (label.copy + 1) % x.num_vertices});

  return x;
}

LinkGraph link(const Polyhedron& x, int v) {
  if (v < 0 || v >= x.num_vertices)
    fail(Errc::bad_vertex, "vertex " + std::to_string(v + 1) + " of " +
                               std::to_string(x.num_vertices));
  int P = x.plane.num_points();
  int n = x.num_vertices;

  LinkGraph l;
  l.vertex = v;
  l.num_tails = P;
  l.graph.reset(2 * P);
  l.node_labels.resize(2 * P);
  for (int i = 0; i < P; ++i) {
    l.node_labels[i] = label_str({i, v});
    l.node_labels[P + i] = line_label_str({i, v});
  }

  // one arc per face corner: the sides meeting at position v are the
  // outgoing copy-v side (tail end) and the incoming copy-(v-1) side (head)
  int k = x.k;
  for (const auto& face : x.faces) {
    int tail_node = face[v].point;
    int head_node = P + face[(v + k - 1) % k].point;
    l.graph.add_edge(tail_node, head_node);
    ++l.arcs;
  }
  return l;
}

Report check_link_isomorphism(const Polyhedron& x, const LinkGraph& l) {
  Report rep;
  int P = x.plane.num_points();
  int L = x.plane.num_lines();
  bool straight = x.vertex_copy[l.vertex] == Orientation::straight;

  {
    bool ok = P == L && l.graph.n == 2 * P;
    rep.add("node-map", ok,
            ok ? "" : "link has " + std::to_string(l.graph.n) +
                          " nodes, incidence graph has " +
                          std::to_string(P + L));
    if (!ok) return rep;
  }

  std::vector<int> mult(static_cast<size_t>(P) * P, 0);
  for (auto [a, b] : l.graph.edge_ends) {
    if (a > b) std::swap(a, b);
    if (a >= P || b < P) {
      rep.add("adjacency", false,
              "arc inside one side of the bipartition: " + l.node_labels[a] +
                  " " + l.node_labels[b]);
      return rep;
    }
    ++mult[static_cast<size_t>(a) * P + (b - P)];
  }

  // straight: tail i -> point i, head j -> line tmap[j];
  // dual: tail i -> dual point tmap[i], head j -> dual line j
  bool ok = true;
  std::string w;
  for (int i = 0; i < P && ok; ++i)
    for (int j = 0; j < P && ok; ++j) {
      int arcs = mult[static_cast<size_t>(i) * P + j];
      bool expected = straight ? x.plane.incident(i, x.tmap[j])
                               : x.plane.incident(j, x.tmap[i]);
      if (arcs != (expected ? 1 : 0)) {
        ok = false;
        w = std::to_string(arcs) + " arcs between " + l.node_labels[i] +
            " and " + l.node_labels[P + j] + ", expected " +
            (expected ? "1" : "0");
      }
    }
  rep.add("adjacency", ok, w);
  return rep;
}

ComplexStats stats(const Polyhedron& x) {
  ComplexStats s;
  s.v = x.num_vertices;
  s.e = x.num_edges();
  s.f = x.num_faces();
  s.k = x.k;
  s.chi = s.v - s.e + s.f;

  s.link_nodes.assign(s.v, 0);
  for (const auto& e : x.edges) {
    ++s.link_nodes[e.tail];
    ++s.link_nodes[e.head];
  }
  s.link_arcs.assign(s.v, 0);
  for (const auto& cv : x.corner_vertex)
    for (int vertex : cv) ++s.link_arcs[vertex];

  long long ends = std::accumulate(s.link_nodes.begin(), s.link_nodes.end(),
                                   0ll);
  long long corners = std::accumulate(s.link_arcs.begin(), s.link_arcs.end(),
                                      0ll);
  s.identity_edges = 2ll * s.e == ends;
  s.identity_faces = static_cast<long long>(s.k) * s.f == corners;
  return s;
}

GonParams classify_curvature(int k, int m) {
  GonParams g;
  g.k = k;
  g.m = m;
  if (k == 3 && m == 3)
    g.curvature = Curvature::euclidean;
  else if (static_cast<long long>(m) * k > 2ll * m + k)
    g.curvature = Curvature::hyperbolic;
  else
    g.curvature = Curvature::neither;
  return g;
}

std::string curvature_name(Curvature c) {
  switch (c) {
    case Curvature::euclidean: return "euclidean";
    case Curvature::hyperbolic: return "hyperbolic";
    case Curvature::neither: return "neither";
  }
  return "neither";
}

ComplexReport analyze(const Polyhedron& x) {
  ComplexReport r;
  r.counts = stats(x);

  int common_m = -1;
  bool links_ok = true;
  for (int v = 0; v < x.num_vertices; ++v) {
    LinkGraph lg = link(x, v);
    ComplexReport::LinkRow row;
    row.nodes = r.counts.link_nodes[v];
    row.arcs = lg.arcs;

    GonCheck gon;
    std::string gon_witness;
    try {
      gon = check_generalized_m_gon(lg.graph);
      if (!gon.ok) gon_witness = gon.detail;
    } catch (const Error& e) {
      gon_witness = e.what();
    }
    Report iso = check_link_isomorphism(x, lg);

    row.m = gon.ok ? gon.m : 0;
    bool straight = x.vertex_copy[v] == Orientation::straight;
    row.iso = iso.pass() ? (straight ? "G" : "G'") : "FAIL";
    row.pass = gon.ok && iso.pass();
    if (!gon.ok)
      row.witness = "link " + std::to_string(v + 1) + ": " + gon_witness;
    else if (!iso.pass())
      row.witness = "link " + std::to_string(v + 1) + ": " +
                    iso.first_failure();
    r.links.push_back(row);

    if (!row.pass) links_ok = false;
    if (common_m < 0)
      common_m = row.m;
    else if (common_m != row.m)
      common_m = 0;
  }

  if (links_ok && common_m > 0)
    r.curvature = classify_curvature(x.k, common_m).curvature;
  else
    r.curvature = Curvature::neither;

  r.pass = links_ok && r.counts.identity_edges && r.counts.identity_faces;
  if (!r.counts.identity_edges)
    r.first_failure = "edge count does not match half the link node total";
  else if (!r.counts.identity_faces)
    r.first_failure = "k times face count does not match the link arc total";
  else
    for (const auto& row : r.links)
      if (!row.pass) {
        r.first_failure = row.witness;
        break;
      }
  return r;
}

void write_complex_report(std::ostream& out, const ComplexReport& r,
                          uint64_t presentation_hash) {
  out << "complex V=" << r.counts.v << " E=" << r.counts.e
      << " F=" << r.counts.f << " k=" << r.counts.k << " chi=" << r.counts.chi
      << " curvature=" << curvature_name(r.curvature) << "\n";
  out << textio::derived_from_line({{"presentation", presentation_hash}})
      << "\n";
  for (size_t v = 0; v < r.links.size(); ++v) {
    const auto& row = r.links[v];
    out << "link " << v + 1 << ": nodes=" << row.nodes << " arcs=" << row.arcs
        << " gen-gon m=" << row.m << " iso=" << row.iso << "\n";
  }
}

void write_complex_report(const std::string& path, const ComplexReport& r,
                          uint64_t presentation_hash) {
  auto out = textio::open_out(path);
  write_complex_report(out, r, presentation_hash);
}

} // namespace polypres
