#pragma once

#include <optional>

#include "cist/verify.hpp"
#include "core/types.hpp"
#include "colorings/solver.hpp"

namespace cistkit {

// k edge-disjoint spanning trees of K_d, one per class, where every vertex of
// class i is internal in tree i. Classes must be disjoint, of size >= 2, and
// cover 0..d-1. A single class yields a spanning path.
CistCertificate clique_cist(int d, const std::vector<VertexSet>& classes);

// Trees for a bipanchromatic coloring of H(G): class-i vertices internal in
// tree i, every I-vertex a leaf attached in tree i to its lowest-id neighbor
// of color i.
CistCertificate cist_from_bipanchromatic(const SplitGraph& g,
                                         const Coloring& c);

// Applies group_unique_colors to a panchromatic coloring, then builds trees.
CistCertificate cist_from_panchromatic(const SplitGraph& g, const Coloring& c);

// Configuration with exactly one unique color on a non-uniform H(G): returns
// k trees when every non-unique color has an I-vertex of degree > k with two
// neighbors of that color, nullopt when the hypothesis fails.
std::optional<CistCertificate> cist_with_unique_color(const SplitGraph& g,
                                                      const Coloring& c);

// Colors each D-vertex by the tree in which it is internal; all-leaf vertices
// take the tree index of the internal neighbor covering them first.
Coloring cist_to_coloring(const SplitGraph& g, const CistCertificate& trees);

// When H(G) is k-uniform and some D-vertex is adjacent to all of I, that
// vertex certifies the nonexistence of k CIST.
std::optional<Vertex> uniform_dominating_obstruction(const SplitGraph& g,
                                                     int k);

}  // namespace cistkit
