#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace polypres {

// Undirected multigraph. Parallel edges are kept: a doubled arc must show up
// as a 2-cycle in the girth computation, not vanish into a simple graph.
struct Graph {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge id)
  std::vector<std::pair<int, int>> edge_ends;

  explicit Graph(int vertices = 0) { reset(vertices); }

  void reset(int vertices) {
    n = vertices;
    adj.assign(vertices, {});
    edge_ends.clear();
  }

  int add_edge(int u, int v) {
    int id = static_cast<int>(edge_ends.size());
    edge_ends.emplace_back(u, v);
    adj[u].emplace_back(v, id);
    adj[v].emplace_back(u, id);
    return id;
  }

  int num_edges() const { return static_cast<int>(edge_ends.size()); }
};

struct GonCheck {
  bool ok = false;
  int m = 0; // meaningful when ok
  int diameter = 0;
  int girth = 0; // 0 when acyclic
  bool bipartite = false;
  int min_degree = 0;
  int max_degree = 0;
  std::string detail; // why the check failed
};

// A generalized m-gon has diameter m and injectivity radius m, the latter
// being half the girth. Throws Errc::disconnected; returns ok=false with the
// reason when the graph is connected but fails (odd girth, acyclic,
// diameter != girth/2).
GonCheck check_generalized_m_gon(const Graph& g);

// distances from src; unreachable = -1
std::vector<int> bfs_distances(const Graph& g, int src);

// `u v` per line, ascending; `# bipartite parts: ...` comment first
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<int>& part_sizes);

} // namespace polypres
