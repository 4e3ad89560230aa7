#pragma once

#include <initializer_list>

#include "core/types.hpp"

namespace cistkit::testsupport {

inline Hypergraph make_hg(int n,
                          std::initializer_list<std::initializer_list<int>> es) {
  Hypergraph h;
  h.n = n;
  for (const auto& e : es) h.edges.emplace_back(e);
  return h;
}

inline SplitGraph make_sg(int d,
                          std::initializer_list<std::initializer_list<int>> nb) {
  SplitGraph g;
  g.d = d;
  for (const auto& e : nb) g.cross_adj.emplace_back(e);
  g.i = static_cast<int>(g.cross_adj.size());
  return g;
}

// Split graph and corresponding hypergraph used as a running example: a
// 6-clique with four attached I-vertices; chi_p = 3, chi_p2 = 2, alpha_3 = 1.
inline Hypergraph example_hg() {
  return make_hg(6, {{3, 4, 5}, {0, 1, 5}, {1, 2, 5}, {0, 4, 5}});
}

}  // namespace cistkit::testsupport
