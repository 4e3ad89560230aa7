#pragma once

#include <functional>
#include <optional>

#include "core/types.hpp"

namespace cistkit {

enum class CistFailure {
  None,
  EdgeNotInHost,
  NotTree,
  NotSpanning,
  SharedEdge,
  DegreeViolation,
};

struct VerifyResult {
  bool ok = false;
  CistFailure reason = CistFailure::None;
  Edge edge;       // for SharedEdge / EdgeNotInHost
  Vertex vertex = -1;  // for DegreeViolation
  explicit operator bool() const { return ok; }
};

// Full check: pairwise edge-disjoint spanning trees such that every
// vertex has degree > 1 in at most one tree.
VerifyResult verify_cist(const SplitGraph& g,
                         const std::vector<SpanningTree>& trees);

// Same check with K_d as the host graph.
VerifyResult verify_cist_clique(int d, const std::vector<SpanningTree>& trees);

enum class PartitionFailure {
  None,
  NotPartition,
  DisconnectedClass,
  TreeComponent,
};

struct PartitionVerifyResult {
  bool ok = false;
  PartitionFailure reason = PartitionFailure::None;
  int class_a = -1;
  int class_b = -1;
  explicit operator bool() const { return ok; }
};

// Each class induces a connected subgraph and no bipartite cross-subgraph
// between two classes has a tree component.
PartitionVerifyResult verify_cist_partition(const SplitGraph& g,
                                            const CistPartition& p);

}  // namespace cistkit
