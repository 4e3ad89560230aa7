#pragma once

#include <string>

#include "core/types.hpp"

namespace cistkit {

struct LpTerm {
  int coef = 0;
  std::string var;
};

enum class LpRelation { Le, Ge, Eq };

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  LpRelation relation = LpRelation::Le;
  int rhs = 0;
};

struct LpModel {
  bool maximize = true;
  std::vector<LpTerm> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::string> binaries;
};

// The three integer programs over H's incidence matrix: maximize used colors
// subject to panchromatic covering, optionally with the appears-twice
// constraint, and the minimize-unique-colors variant. Variables are named
// x_<j>_<p>, k_<p>, v_<p> with 1-based indices.
LpModel panchromatic_lp(const Hypergraph& h);
LpModel bipanchromatic_lp(const Hypergraph& h, int chi_p);
LpModel alpha_lp(const Hypergraph& h, int chi_p);

// Deterministic LP text (Maximize/Subject To/Binary/End sections, LF endings).
std::string write_lp(const LpModel& model);

std::string export_panchromatic_lp(const Hypergraph& h);
std::string export_bipanchromatic_lp(const Hypergraph& h, int chi_p);
std::string export_alpha_lp(const Hypergraph& h, int chi_p);

}  // namespace cistkit
