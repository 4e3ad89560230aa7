#pragma once

#include "cist/construct.hpp"
#include "core/types.hpp"

namespace cistkit {

// H' = two disjoint copies of H plus one hyperedge over all 2n vertices.
struct BicpGadget {
  Hypergraph h_prime;
  std::vector<Vertex> copy1;  // source vertex -> id in copy 1
  std::vector<Vertex> copy2;
};

// G' = two copies of G(H) with D_1 u D_2 merged into one clique.
struct CistGadget {
  SplitGraph g_prime;
  std::vector<Vertex> copy1;  // V(G(H)) -> V(G')
  std::vector<Vertex> copy2;
};

BicpGadget build_bicp_gadget(const Hypergraph& h);
CistGadget build_cist_gadget(const Hypergraph& h);

// Panchromatic coloring of H -> bipanchromatic coloring of H'.
Coloring map_bicp_witness_forward(const BicpGadget& gadget, const Hypergraph& h,
                                  const Coloring& c);
// Bipanchromatic coloring of H' -> panchromatic coloring of H (copy 1).
Coloring map_bicp_witness_backward(const BicpGadget& gadget,
                                   const Hypergraph& h, const Coloring& c_prime);

// Panchromatic k-coloring of H (k >= 2) -> k verified CIST of G'.
CistCertificate map_cist_witness_forward(const CistGadget& gadget,
                                         const Hypergraph& h,
                                         const Coloring& c);
// Verified k-CIST of G' -> panchromatic k-coloring of H.
Coloring map_cist_witness_backward(const CistGadget& gadget,
                                   const Hypergraph& h,
                                   const CistCertificate& cert);

}  // namespace cistkit
