#include "core/model.hpp"

#include <numeric>

namespace cistkit {

void validate(const Hypergraph& h, bool require_coverage) {
  if (h.n < 0) throw Error(ErrorCode::InvalidHypergraph, "negative vertex count");
  std::vector<char> covered(h.n, 0);
  for (const auto& e : h.edges) {
    if (e.empty())
      throw Error(ErrorCode::InvalidHypergraph, "empty hyperedge");
    for (size_t i = 0; i < e.size(); i++) {
      if (e[i] < 0 || e[i] >= h.n)
        throw Error(ErrorCode::InvalidHypergraph, "vertex id out of range");
      if (i > 0 && e[i] <= e[i - 1])
        throw Error(ErrorCode::InvalidHypergraph,
                    "hyperedge not sorted or has duplicates");
      covered[e[i]] = 1;
    }
  }
  if (require_coverage) {
    for (Vertex v = 0; v < h.n; v++)
      if (!covered[v])
        throw Error(ErrorCode::IsolatedVertex,
                    "vertex " + std::to_string(v) + " lies in no hyperedge");
  }
}

void validate(const SplitGraph& g) {
  if (g.d < 0 || g.i < 0 || static_cast<int>(g.cross_adj.size()) != g.i)
    throw Error(ErrorCode::InvalidSplitGraph, "inconsistent part sizes");
  std::vector<char> covered(g.d, 0);
  for (const auto& nb : g.cross_adj) {
    if (nb.empty())
      throw Error(ErrorCode::InvalidSplitGraph, "I-vertex with no D-neighbor");
    for (size_t j = 0; j < nb.size(); j++) {
      if (nb[j] < 0 || nb[j] >= g.d)
        throw Error(ErrorCode::InvalidSplitGraph, "neighbor id outside D");
      if (j > 0 && nb[j] <= nb[j - 1])
        throw Error(ErrorCode::InvalidSplitGraph,
                    "neighborhood not sorted or has duplicates");
      covered[nb[j]] = 1;
    }
  }
  for (Vertex v = 0; v < g.d; v++)
    if (!covered[v])
      throw Error(ErrorCode::InvalidSplitGraph,
                  "D-vertex " + std::to_string(v) + " has no I-neighbor");
}

void validate(const Coloring& c, int n) {
  if (c.n() != n)
    throw Error(ErrorCode::InvalidColoring, "coloring size mismatch");
  if (c.k < 1) throw Error(ErrorCode::InvalidColoring, "k must be >= 1");
  std::vector<char> used(c.k, 0);
  for (Color col : c.colors) {
    if (col < 0 || col >= c.k)
      throw Error(ErrorCode::InvalidColoring, "color id out of range");
    used[col] = 1;
  }
  for (Color col = 0; col < c.k; col++)
    if (!used[col])
      throw Error(ErrorCode::InvalidColoring,
                  "color " + std::to_string(col) + " unused");
}

Hypergraph hypergraph_of_split(const SplitGraph& g) {
  Hypergraph h;
  h.n = g.d;
  h.edges = g.cross_adj;
  return h;
}

SplitGraph split_of_hypergraph(const Hypergraph& h) {
  validate(h, /*require_coverage=*/true);
  SplitGraph g;
  g.d = h.n;
  g.i = h.m();
  g.cross_adj = h.edges;
  return g;
}

SplitGraph normalize_split(const std::vector<VertexSet>& d_adj,
                           const std::vector<VertexSet>& i_adj) {
  const int d = static_cast<int>(d_adj.size());
  const int i = static_cast<int>(i_adj.size());
  for (const auto& nb : i_adj)
    for (Vertex v : nb)
      if (v >= d || v < 0)
        throw Error(ErrorCode::NotSplit, "independent part has internal edges");

  std::vector<char> covered(d, 0);
  for (const auto& nb : i_adj)
    for (Vertex v : nb) covered[v] = 1;
  for (int x = 0; x < d; x++)
    if (covered[x] != !d_adj[x].empty())
      throw Error(ErrorCode::InvalidSplitGraph,
                  "d_adj and i_adj disagree on coverage");

  // Reassigning the first uncovered clique vertex to I covers all others
  // (they are adjacent to it), so at most one vertex ever moves.
  int moved = -1;
  for (int x = 0; x < d; x++)
    if (!covered[x]) { moved = x; break; }

  std::vector<Vertex> new_id(d);
  int nd = 0;
  for (int x = 0; x < d; x++)
    if (x != moved) new_id[x] = nd++;

  SplitGraph g;
  g.d = nd;
  for (const auto& nb : i_adj) {
    VertexSet mapped;
    for (Vertex v : nb)
      if (v != moved) mapped.push_back(new_id[v]);
    std::sort(mapped.begin(), mapped.end());
    g.cross_adj.push_back(std::move(mapped));
  }
  if (moved >= 0) {
    VertexSet all(nd);
    std::iota(all.begin(), all.end(), 0);
    g.cross_adj.push_back(std::move(all));
  }
  g.i = static_cast<int>(g.cross_adj.size());
  validate(g);
  return g;
}

std::vector<ComponentInfo> bipartite_component_check(const SplitGraph& g,
                                                     const VertexSet& a,
                                                     const VertexSet& b) {
  VertexSet verts = a;
  verts.insert(verts.end(), b.begin(), b.end());
  std::vector<int> idx(g.vertex_count(), -1);
  std::vector<char> in_a(verts.size(), 0);
  for (size_t t = 0; t < verts.size(); t++) {
    idx[verts[t]] = static_cast<int>(t);
    in_a[t] = t < a.size();
  }

  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<long long> comp_edges(verts.size(), 0);
  for (Vertex u : a)
    for (Vertex v : b)
      if (g.adjacent(u, v)) {
        int ru = find(idx[u]), rv = find(idx[v]);
        if (ru != rv) parent[ru] = rv;
      }
  for (Vertex u : a)
    for (Vertex v : b)
      if (g.adjacent(u, v)) comp_edges[find(idx[u])]++;

  std::vector<int> comp_verts(verts.size(), 0);
  for (size_t t = 0; t < verts.size(); t++) comp_verts[find(static_cast<int>(t))]++;

  std::vector<ComponentInfo> out;
  for (size_t t = 0; t < verts.size(); t++) {
    if (find(static_cast<int>(t)) != static_cast<int>(t)) continue;
    ComponentInfo ci;
    ci.vertices = comp_verts[t];
    ci.edges = comp_edges[t];
    ci.is_tree = ci.edges < ci.vertices;
    out.push_back(ci);
  }
  return out;
}

}  // namespace cistkit
