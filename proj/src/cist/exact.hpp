#pragma once

#include <optional>
#include <string>

#include "cist/construct.hpp"
#include "core/types.hpp"

namespace cistkit {

// Largest k <= k_cap admitting a k-CIST-partition, by exhaustive canonical
// partition enumeration. Desk-scale oracle: throws TooLarge above 14 vertices.
// k_cap <= 0 means no explicit cap.
int max_cist_exact(const SplitGraph& g, int k_cap = 0);

// Independent tree-level route: backtracking assignment of host edges to k
// trees under the CIST conditions. Returns a verified certificate or
// nullopt when no k CIST exist.
std::optional<CistCertificate> cist_search_trees(const SplitGraph& g, int k);

struct CistReport {
  int lower_bound = 0;
  int upper_bound = 0;
  std::optional<int> max_cist;  // exact value when |V| <= 14
  CistCertificate certificate;  // witnesses the lower bound
  std::string lower_method;
  std::string upper_method;
};

// lower = chi_p^2 (or the unique-color upgrade when it applies),
// upper = chi_p^2 + 1.
CistReport cist_report(const SplitGraph& g);

}  // namespace cistkit
