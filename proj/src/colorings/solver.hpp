#pragma once

#include <optional>

#include "core/types.hpp"

namespace cistkit {

struct ColoringStats {
  int k = 0;
  std::vector<int> class_sizes;
  std::vector<Color> unique_colors;
};

ColoringStats coloring_stats(const Coloring& c);

bool is_panchromatic(const Hypergraph& h, const Coloring& c);
bool is_bipanchromatic(const Hypergraph& h, const Coloring& c);

// Backtracking search with per-hyperedge missing-color masks and canonical
// color symmetry breaking. Deterministic witnesses.
std::optional<Coloring> exists_panchromatic(const Hypergraph& h, int k);
std::optional<Coloring> exists_bipanchromatic(const Hypergraph& h, int k);

struct NumberResult {
  int value = 0;
  Coloring witness;
};

// chi_p: largest k admitting a panchromatic k-coloring.
NumberResult panchromatic_number(const Hypergraph& h);

// chi_p^2: largest k admitting a bipanchromatic k-coloring.
// Throws TooFewVertices when n < 2.
NumberResult bipanchromatic_number(const Hypergraph& h);

// alpha_k: minimum number of unique colors over panchromatic k-colorings,
// with the lexicographically smallest witness attaining it.
// Throws Infeasible when no panchromatic k-coloring exists.
NumberResult min_unique_colors(const Hypergraph& h, int k);

// Merges unique colors two by two (odd leftover folds into the smallest
// non-unique color) and compacts color ids. Input must be panchromatic.
Coloring group_unique_colors(const Hypergraph& h, const Coloring& c);

}  // namespace cistkit
