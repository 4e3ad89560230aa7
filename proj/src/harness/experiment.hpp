#pragma once

#include <cstdint>
#include <string>

#include "core/types.hpp"

namespace cistkit {

// Seeded random hypergraph: each vertex joins each hyperedge independently
// with probability 1/2 (empty draws rejected); uncovered vertices are then
// added to a uniformly chosen hyperedge. Fully determined by (n, m, seed).
Hypergraph random_hypergraph(int n, int m, std::uint64_t seed);

// Per-instance seed derived from the master seed and grid position.
std::uint64_t derive_seed(std::uint64_t master, int n, int m, int index);

struct ExperimentRecord {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int chi_p = 0;
  int alpha = 0;
  int chi_p2 = 0;
  bool eq3_holds = false;
  bool oracle_verified = false;  // set for violations only
  Hypergraph instance;
  Coloring w_pan, w_alpha, w_bipan;
  double millis = 0.0;
};

// chi_p, alpha_{chi_p}, chi_p^2 and the equality verdict. The >= half
// (grouping bound) is asserted unconditionally; equality is data.
ExperimentRecord eq3_check(const Hypergraph& h, std::uint64_t seed_label = 0);

struct GridSpec {
  int n_lo = 4, n_hi = 8;
  int m_off_lo = -1, m_off_hi = 4;
  int samples = 20;
  std::uint64_t seed = 0;
};

struct GridResult {
  std::vector<ExperimentRecord> records;
  int violations = 0;
};

// Deterministic (n, m, index) order. Violations are re-verified with the
// exhaustive solvers and kept in the result as certificates; they do not
// fail the run.
GridResult run_conjecture_grid(const GridSpec& spec);

std::string report_csv(const GridResult& result);
std::string report_json(const GridResult& result);
std::string summary_json(const GridSpec& spec, const GridResult& result);

}  // namespace cistkit
