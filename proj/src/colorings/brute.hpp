#pragma once

#include <optional>

#include "colorings/solver.hpp"

namespace cistkit {

// Exhaustive reference solvers: plain enumeration of all k^n colorings with
// no pruning or symmetry breaking. Independent of the backtracking path;
// used to cross-check it and to re-verify conjecture counterexamples.
std::optional<Coloring> brute_exists_panchromatic(const Hypergraph& h, int k);
std::optional<Coloring> brute_exists_bipanchromatic(const Hypergraph& h, int k);
int brute_panchromatic_number(const Hypergraph& h);
int brute_bipanchromatic_number(const Hypergraph& h);
int brute_min_unique_colors(const Hypergraph& h, int k);

}  // namespace cistkit
