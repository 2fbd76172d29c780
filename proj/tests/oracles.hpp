// Independent reference implementations used to cross-check library results.
// Deliberately written with different algorithms than the library: triples by
// cubic brute force, diameter by Floyd-Warshall, girth by per-source BFS.
#pragma once

#include <algorithm>
#include <vector>

#include "polypres/graph.hpp"
#include "polypres/plane.hpp"
#include "polypres/pointline.hpp"
#include "polypres/triples.hpp"

namespace oracle {

inline std::vector<polypres::Triple> triples(
    const polypres::Plane& g, const polypres::PointLineBijection& b) {
  std::vector<polypres::Triple> out;
  int np = g.num_points();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      for (int k = 0; k < np; ++k)
        if (g.incident(i, b.map[k]) && g.incident(j, b.map[i]) &&
            g.incident(j, b.map[k]))
          out.push_back({i, j, k});
  std::sort(out.begin(), out.end());
  return out;
}

inline int diameter(const polypres::Graph& g) {
  const int inf = 1 << 28;
  int n = g.n;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edge_ends) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
  int best = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d[u][v] > best) best = d[u][v];
  return best >= inf ? -1 : best;
}

// shortest cycle length, 0 when acyclic; exact on multigraphs because only
// the tree edge instance is skipped, not every parallel copy
inline int girth(const polypres::Graph& g) {
  const int inf = 1 << 28;
  int best = inf;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent_edge(g.n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (auto [w, id] : g.adj[u]) {
        if (id == parent_edge[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = id;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best >= inf ? 0 : best;
}

// Fano plane from the difference set {0, 1, 3} mod 7, independent of the
// algebraic construction
inline polypres::Plane fano() {
  polypres::Plane pl;
  pl.name = "fano_ds";
  pl.order = 2;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> line{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(line.begin(), line.end());
    pl.line_points.push_back(line);
  }
  pl.finalize(7);
  return pl;
}

// 7x7 incidence structure that admits no basic bijection; the search must
// refute its whole tree
inline polypres::Plane no_bijection_fixture() {
  polypres::Plane pl;
  pl.name = "refuted";
  pl.order = 2;
  pl.line_points = {{1, 3, 6}, {2, 3, 6}, {0, 5, 6}, {2, 4, 5},
                    {0, 1, 2}, {1, 4, 5}, {0, 3, 4}};
  pl.finalize(7);
  return pl;
}

} // namespace oracle
