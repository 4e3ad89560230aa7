#pragma once

#include "core/types.hpp"

namespace cistkit {

// Throws on invariant violations.
void validate(const Hypergraph& h, bool require_coverage = false);
void validate(const SplitGraph& g);
void validate(const Coloring& c, int n);

// H(G): vertex set D, one hyperedge per I-vertex equal to its D-neighborhood.
Hypergraph hypergraph_of_split(const SplitGraph& g);

// G(H): clique on the n vertices plus one I-vertex per hyperedge.
// Throws IsolatedVertex if some vertex lies in no hyperedge.
SplitGraph split_of_hypergraph(const Hypergraph& h);

// Builds a normalized SplitGraph from a raw split partition: d_adj[x] lists
// the I-neighbors (as I indices 0..i-1) of clique vertex x, i_adj[j] lists
// the D-neighbors of I-vertex j. Clique vertices without I-neighbors are
// reassigned to I, adjacent to the remaining clique.
// Throws NotSplit if the declared independent part has internal edges
// (i_adj entries must reference D only; ids >= d signal such an edge).
SplitGraph normalize_split(const std::vector<VertexSet>& d_adj,
                           const std::vector<VertexSet>& i_adj);

struct ComponentInfo {
  int vertices = 0;
  long long edges = 0;
  bool is_tree = false;  // |E| < |V|, singletons included
};

// Connected components of the bipartite subgraph on a ∪ b keeping only
// a-b edges of g. a and b must be disjoint.
std::vector<ComponentInfo> bipartite_component_check(const SplitGraph& g,
                                                     const VertexSet& a,
                                                     const VertexSet& b);

}  // namespace cistkit
