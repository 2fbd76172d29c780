#include "polypres/graph.hpp"

#include <algorithm>
#include <deque>

#include "polypres/error.hpp"

namespace polypres {

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue;
  dist[src] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, id] : g.adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

namespace {

// shortest u-v path avoiding one edge instance; -1 if none
int dist_without_edge(const Graph& g, int banned_edge) {
  auto [src, dst] = g.edge_ends[banned_edge];
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue;
  dist[src] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == dst) return dist[u];
    for (auto [v, id] : g.adj[u]) {
      if (id == banned_edge || dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist[dst];
}

} // namespace

GonCheck check_generalized_m_gon(const Graph& g) {
  GonCheck r;
  if (g.n == 0) {
    r.detail = "empty graph";
    return r;
  }

  auto d0 = bfs_distances(g, 0);
  for (int v = 0; v < g.n; ++v)
    if (d0[v] < 0) fail(Errc::disconnected, "vertex " + std::to_string(v) +
                                                " unreachable from vertex 0");

  r.min_degree = r.max_degree = static_cast<int>(g.adj[0].size());
  for (int v = 1; v < g.n; ++v) {
    int d = static_cast<int>(g.adj[v].size());
    r.min_degree = std::min(r.min_degree, d);
    r.max_degree = std::max(r.max_degree, d);
  }

  for (int v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int u = 0; u < g.n; ++u) r.diameter = std::max(r.diameter, dist[u]);
  }

  // girth: every shortest cycle survives as endpoint distance + 1 after
  // removing one of its edge instances (parallel edges give 2-cycles here)
  int girth = -1;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge_ends[e];
    if (u == v) {
      girth = 1;
      break;
    }
    int d = dist_without_edge(g, e);
    if (d >= 0 && (girth < 0 || d + 1 < girth)) girth = d + 1;
  }
  r.girth = girth < 0 ? 0 : girth;

  {
    std::vector<int> color(g.n, -1);
    std::deque<int> queue;
    color[0] = 0;
    queue.push_back(0);
    bool two_colorable = true;
    while (!queue.empty() && two_colorable) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, id] : g.adj[u]) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          two_colorable = false;
          break;
        }
      }
    }
    r.bipartite = two_colorable;
  }

  if (r.girth == 0) {
    r.detail = "acyclic";
    return r;
  }
  if (r.girth % 2 != 0) {
    r.detail = "odd girth " + std::to_string(r.girth);
    return r;
  }
  if (r.diameter != r.girth / 2) {
    r.detail = "diameter " + std::to_string(r.diameter) + " != girth/2 = " +
               std::to_string(r.girth / 2);
    return r;
  }
  r.ok = true;
  r.m = r.diameter;
  return r;
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<int>& part_sizes) {
  out << "# bipartite parts:";
  for (int s : part_sizes) out << " " << s;
  out << "\n";
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_ends.size());
  for (auto [u, v] : g.edge_ends)
    edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << u << " " << v << "\n";
}

} // namespace polypres
